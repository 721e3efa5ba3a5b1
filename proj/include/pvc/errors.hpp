#ifndef PVC_ERRORS_HPP
#define PVC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pvc {

// Domain errors map to CLI exit code 1, parse errors to exit code 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MixedDegree : Error {
    explicit MixedDegree(const std::string& op)
        : Error(op + ": input is not homogeneous") {}
};

struct NotACocycle : Error {
    explicit NotACocycle(const std::string& op)
        : Error(op + ": input is not a cocycle") {}
};

struct InvalidClass : Error {
    explicit InvalidClass(const std::string& what) : Error("invalid class: " + what) {}
};

struct DegreeMismatch : Error {
    explicit DegreeMismatch(const std::string& what) : Error("degree mismatch: " + what) {}
};

struct NotIntegrable : Error {
    explicit NotIntegrable(const std::string& what) : Error("not integrable: " + what) {}
};

struct DegreeOutOfRange : Error {
    explicit DegreeOutOfRange(const std::string& what) : Error("degree out of range: " + what) {}
};

struct ParseError : Error {
    int line;
    int col;
    std::string expected;
    ParseError(int line_, int col_, const std::string& msg, const std::string& expected_)
        : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(col_) +
                ": " + msg + (expected_.empty() ? "" : " (expected " + expected_ + ")")),
          line(line_), col(col_), expected(expected_) {}
};

} // namespace pvc

#endif
