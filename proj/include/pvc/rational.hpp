#ifndef PVC_RATIONAL_HPP
#define PVC_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace pvc {

/// Exact rational number with arbitrary-precision numerator and denominator.
/// Always stored canonically (reduced, denominator > 0). No floating point
/// enters the engine anywhere.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}                       // NOLINT(google-explicit-constructor)
    Rational(long n, long d) : q_(mpz_class(n), mpz_class(d)) { q_.canonicalize(); }
    explicit Rational(const std::string& text) : q_(text) { q_.canonicalize(); }

    static Rational from_mpq(mpq_class q) {
        Rational r;
        r.q_ = std::move(q);
        r.q_.canonicalize();
        return r;
    }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return from_mpq(-q_); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { q_ /= o.q_; return *this; }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

    std::string num_str() const { return q_.get_num().get_str(); }
    std::string den_str() const { return q_.get_den().get_str(); }
    bool den_is_one() const { return q_.get_den() == 1; }

    /// "n" when the denominator is 1, otherwise "n/d".
    std::string str() const {
        return den_is_one() ? num_str() : num_str() + "/" + den_str();
    }

    /// Parses "n" or "n/d" with an optional leading sign. Throws std::invalid_argument
    /// on malformed input or a zero denominator.
    static Rational parse(const std::string& text) {
        mpq_class q;
        if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational: " + text);
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
        q.canonicalize();
        return from_mpq(q);
    }

private:
    mpq_class q_;
};

} // namespace pvc

#endif
