#include "zv/special.hpp"

#include <array>
#include <cmath>

namespace zv {

namespace {

// Godfrey's Lanczos coefficients, g = 607/128, 15 terms.
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};
constexpr double kLanczosG = 607.0 / 128.0;

// Valid for Re z >= 1/2; principal branch.
Complex log_gamma_lanczos(Complex z) {
    const Complex zm1 = z - 1.0;
    Complex acc(kLanczos[0], 0.0);
    for (int k = 1; k < 15; ++k) acc += kLanczos[k] / (zm1 + static_cast<double>(k));
    const Complex t = zm1 + (kLanczosG + 0.5);
    return kHalfLog2Pi + (zm1 + 0.5) * std::log(t) - t + std::log(acc);
}

bool near_nonpositive_integer(Complex z, double tol) {
    if (z.real() > 0.5 || std::abs(z.imag()) > tol) return false;
    return std::abs(z.real() - std::round(z.real())) <= tol;
}

}  // namespace

Complex log_gamma(Complex z) {
    require_finite(z, "z");
    if (near_nonpositive_integer(z, 1e-12))
        throw PoleError("log_gamma: z is a nonpositive integer (pole of Gamma)");
    if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));
    if (z.real() >= 0.5) return log_gamma_lanczos(z);

    // Shift into the Lanczos region. Each log(z+k) is principal; the sum
    // stays on the principal branch throughout the closed upper half-plane.
    const int shift = static_cast<int>(std::ceil(0.5 - z.real()));
    Complex log_prod(0.0, 0.0);
    for (int k = 0; k < shift; ++k) log_prod += std::log(z + static_cast<double>(k));
    return log_gamma_lanczos(z + static_cast<double>(shift)) - log_prod;
}

Complex recip_gamma(Complex z) {
    require_finite(z, "z");
    if (near_nonpositive_integer(z, 0.0)) return Complex(0.0, 0.0);
    if (z.real() >= 0.5) return std::exp(-log_gamma_lanczos(z));
    // Reflection: 1/Gamma(z) = sin(pi z) Gamma(1-z) / pi, stable near poles.
    return std::sin(kPi * z) * std::exp(log_gamma(1.0 - z)) / kPi;
}

double theta(double t, const ThetaExpansion& cfg) {
    require_finite(t, "t");
    if (t < 0.0) throw DomainError("theta: t must be >= 0");
    if (cfg.order < 0 || cfg.order > 3)
        throw DomainError("theta: asymptotic order must be in 0..3");

    if (cfg.mode == ThetaExpansion::Mode::exact) {
        if (t == 0.0) return 0.0;
        const Complex lg = log_gamma(Complex(0.25, 0.5 * t));
        return lg.imag() - 0.5 * t * kLogPi;
    }

    if (t < 10.0)
        throw DomainError("theta: asymptotic mode requires t >= 10");
    double v = 0.5 * t * std::log(t / (2.0 * kPi)) - 0.5 * t - kPi / 8.0;
    if (cfg.order >= 1) v += 1.0 / (48.0 * t);
    if (cfg.order >= 2) v += 7.0 / (5760.0 * t * t * t);
    if (cfg.order >= 3) v += 31.0 / (80640.0 * std::pow(t, 5));
    return v;
}

double theta_derivative(double t) {
    require_finite(t, "t");
    if (t <= 0.0) throw DomainError("theta_derivative: t must be > 0");
    return 0.5 * std::log(t / (2.0 * kPi)) - 1.0 / (48.0 * t * t);
}

double psi(double x) {
    require_finite(x, "x");
    if (x <= 0.0) throw DomainError("psi: x must be > 0");
    double sum = 0.0;
    for (int n = 1;; ++n) {
        const double term = std::exp(-static_cast<double>(n) * n * kPi * x);
        sum += term;
        if (term < 1e-18 * sum || term == 0.0) break;
    }
    return sum;
}

double jacobi_identity_residual(double x) {
    require_finite(x, "x");
    if (x <= 0.0) throw DomainError("jacobi_identity_residual: x must be > 0");
    const double lhs = std::sqrt(x) * (1.0 + 2.0 * psi(x));
    const double rhs = 1.0 + 2.0 * psi(1.0 / x);
    return std::abs(lhs - rhs);
}

}  // namespace zv
