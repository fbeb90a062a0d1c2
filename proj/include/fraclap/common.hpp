#ifndef FRACLAP_COMMON_HPP
#define FRACLAP_COMMON_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace fraclap {

inline constexpr double PI = 3.14159265358979323846264338327950288;

/// A numerically estimated scalar: value plus an absolute error bound.
struct EvalResult {
    double value = 0.0;
    double abs_error = 0.0;

    EvalResult() = default;
    EvalResult(double v, double e) : value(v), abs_error(e) {}
};

inline EvalResult operator+(const EvalResult& a, const EvalResult& b) {
    return {a.value + b.value, a.abs_error + b.abs_error};
}
inline EvalResult operator*(double c, const EvalResult& a) {
    return {c * a.value, std::abs(c) * a.abs_error};
}

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Argument outside the operation's domain (pole of Gamma, tau <= 0, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// An integration engine could not reach the requested tolerance.
/// Carries the best value and its estimate.
class ToleranceError : public Error {
public:
    double best_value;
    double best_error;
    ToleranceError(const std::string& msg, double v, double e)
        : Error(msg), best_value(v), best_error(e) {}
};

/// Mean-zero precondition violated (negative-order Neumann forms).
class MeanNotZeroError : public Error {
public:
    explicit MeanNotZeroError(const std::string& msg) : Error(msg) {}
};

/// Test function lacks the derivatives or decay the operation needs.
class SmoothnessError : public Error {
public:
    explicit SmoothnessError(const std::string& msg) : Error(msg) {}
};

}  // namespace fraclap

#endif
