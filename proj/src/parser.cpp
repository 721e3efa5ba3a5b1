#include "pvc/errors.hpp"
#include "pvc/frontend.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace pvc {

namespace {

enum class Tok {
    Num, Ident, Plus, Minus, Star, DStar, Caret, Slash,
    LParen, RParen, LBrace, RBrace, Semi, End,
};

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_ws();
            int line = line_, col = col_;
            if (pos_ >= src_.size()) {
                out.push_back({Tok::End, "", line, col});
                return out;
            }
            char c = src_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    num += advance();
                out.push_back({Tok::Num, num, line, col});
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c))) {
                std::string id;
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_]))))
                    id += advance();
                out.push_back({Tok::Ident, id, line, col});
                continue;
            }
            switch (c) {
                case '+': advance(); out.push_back({Tok::Plus, "+", line, col}); break;
                case '-': advance(); out.push_back({Tok::Minus, "-", line, col}); break;
                case '*':
                    advance();
                    if (pos_ < src_.size() && src_[pos_] == '*') {
                        advance();
                        out.push_back({Tok::DStar, "**", line, col});
                    } else {
                        out.push_back({Tok::Star, "*", line, col});
                    }
                    break;
                case '^': advance(); out.push_back({Tok::Caret, "^", line, col}); break;
                case '/': advance(); out.push_back({Tok::Slash, "/", line, col}); break;
                case '(': advance(); out.push_back({Tok::LParen, "(", line, col}); break;
                case ')': advance(); out.push_back({Tok::RParen, ")", line, col}); break;
                case '{': advance(); out.push_back({Tok::LBrace, "{", line, col}); break;
                case '}': advance(); out.push_back({Tok::RBrace, "}", line, col}); break;
                case ';': advance(); out.push_back({Tok::Semi, ";", line, col}); break;
                default:
                    throw ParseError(line, col, std::string("unexpected character '") + c + "'",
                                     "");
            }
        }
    }

private:
    char advance() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_ws() {
        while (pos_ < src_.size() &&
               std::isspace(static_cast<unsigned char>(src_[pos_])))
            advance();
    }

    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    PolyVector parse_expression_all() {
        PolyVector v = expr();
        expect(Tok::End, "end of input");
        return v;
    }

    CohClass parse_class_all() {
        const Token& head = peek();
        if (head.kind != Tok::Ident || head.text.size() != 2 || head.text[0] != 'H' ||
            head.text[1] < '0' || head.text[1] > '3')
            fail("class literal", "H0{..}, H1{..; ..}, H2{..} or H3{..}");
        int deg = head.text[1] - '0';
        next();
        expect(Tok::LBrace, "'{'");
        Poly first = scalar_payload();
        if (deg == 1) {
            expect(Tok::Semi, "';'");
            Poly second = scalar_payload();
            expect(Tok::RBrace, "'}'");
            expect(Tok::End, "end of input");
            return CohClass::h1(first, second);
        }
        expect(Tok::RBrace, "'}'");
        expect(Tok::End, "end of input");
        switch (deg) {
            case 0: return CohClass::h0(first);
            case 2: return CohClass::h2(first);
            default: return CohClass::h3(first);
        }
    }

private:
    Poly scalar_payload() {
        const Token& at = peek();
        PolyVector v = expr();
        if (!(v - PolyVector::scalar(v.component(Blade::One))).is_zero())
            throw ParseError(at.line, at.col, "class payload must be a plain polynomial",
                             "expression without blades");
        return v.component(Blade::One);
    }

    PolyVector expr() {
        bool neg = false;
        if (peek().kind == Tok::Minus) {
            next();
            neg = true;
        }
        PolyVector v = term();
        if (neg) v = -v;
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            bool minus = next().kind == Tok::Minus;
            PolyVector rhs = term();
            if (minus)
                v -= rhs;
            else
                v += rhs;
        }
        return v;
    }

    PolyVector term() {
        PolyVector v = wedge_factor();
        while (peek().kind == Tok::Star) {
            next();
            v = wedge(v, wedge_factor());
        }
        return v;
    }

    PolyVector wedge_factor() {
        PolyVector v = power();
        while (peek().kind == Tok::Caret) {
            next();
            v = wedge(v, power());
        }
        return v;
    }

    PolyVector power() {
        PolyVector v = atom();
        while (peek().kind == Tok::DStar) {
            next();
            const Token& e = expect(Tok::Num, "exponent");
            long n = to_long(e);
            PolyVector r = PolyVector::scalar(Poly(1));
            for (long i = 0; i < n; ++i) r = wedge(r, v);
            v = r;
        }
        return v;
    }

    PolyVector atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Num: {
                next();
                Rational num(to_long_big(t));
                if (peek().kind == Tok::Slash) {
                    next();
                    const Token& d = expect(Tok::Num, "denominator");
                    Rational den(to_long_big(d));
                    if (den.is_zero()) throw ParseError(d.line, d.col, "zero denominator", "");
                    return PolyVector::scalar(Poly(num / den));
                }
                return PolyVector::scalar(Poly(num));
            }
            case Tok::Ident: {
                next();
                if (t.text == "x") return PolyVector::scalar(Poly::var(Var::x));
                if (t.text == "y") return PolyVector::scalar(Poly::var(Var::y));
                if (t.text == "z") return PolyVector::scalar(Poly::var(Var::z));
                if (t.text == "dx") return PolyVector::blade_term(Blade::Dx, Poly(1));
                if (t.text == "dy") return PolyVector::blade_term(Blade::Dy, Poly(1));
                if (t.text == "dz") return PolyVector::blade_term(Blade::Dz, Poly(1));
                throw ParseError(t.line, t.col, "unknown symbol '" + t.text + "'",
                                 "x, y, z, dx, dy or dz");
            }
            case Tok::LParen: {
                next();
                PolyVector v = expr();
                expect(Tok::RParen, "')'");
                return v;
            }
            default:
                fail("a value", "number, variable, blade or '('");
        }
    }

    [[noreturn]] void fail(const std::string& what, const std::string& expected) {
        const Token& t = peek();
        throw ParseError(t.line, t.col,
                         "found '" + (t.kind == Tok::End ? "end of input" : t.text) +
                             "' while parsing " + what,
                         expected);
    }

    long to_long(const Token& t) {
        long v = to_long_big(t);
        if (v > 64) throw ParseError(t.line, t.col, "exponent too large", "0..64");
        return v;
    }
    long to_long_big(const Token& t) {
        if (t.text.size() > 18)
            throw ParseError(t.line, t.col, "integer literal too long", "");
        return std::stol(t.text);
    }

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    const Token& expect(Tok k, const std::string& what) {
        if (peek().kind != k) {
            const Token& t = peek();
            throw ParseError(t.line, t.col,
                             "found '" + (t.kind == Tok::End ? "end of input" : t.text) + "'",
                             what);
        }
        return next();
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

} // namespace

PolyVector parse_pv(const std::string& text) {
    Parser p(Lexer(text).run());
    return p.parse_expression_all();
}

CohClass parse_class(const std::string& text) {
    Parser p(Lexer(text).run());
    return p.parse_class_all();
}

} // namespace pvc
