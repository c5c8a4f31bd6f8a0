#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace zv {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kLogPi = 1.144729885849400174143427351353058712;
inline constexpr double kHalfLog2Pi = 0.918938533204672741780329736405617639;

// Base class for all numerical/domain failures raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input outside the documented domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Evaluation requested at (or too close to) a pole.
class PoleError : public Error {
public:
    explicit PoleError(const std::string& what) : Error(what) {}
};

// A configuration whose internal error estimate cannot meet the contract.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

// Adaptive quadrature failed to converge within its refinement budget.
class QuadratureError : public Error {
public:
    explicit QuadratureError(const std::string& what) : Error(what) {}
};

// Iterative solver (Newton, bisection, argument tracking) failed to converge.
class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& what) : Error(what) {}
};

inline void require_finite(double x, const char* name) {
    if (!std::isfinite(x))
        throw DomainError(std::string(name) + " must be finite");
}

inline void require_finite(const Complex& z, const char* name) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError(std::string(name) + " must have finite real and imaginary parts");
}

// Compensated (Kahan) accumulator for long real sums.
class KahanSum {
public:
    void add(double x) {
        double y = x - c_;
        double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

}  // namespace zv
