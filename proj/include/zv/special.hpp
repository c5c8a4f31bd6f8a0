#pragma once

#include "zv/common.hpp"

namespace zv {

// Principal branch of log Gamma(z).
//
// Lanczos approximation, g = 607/128, 15-term coefficient set (Godfrey),
// applied for Re z >= 1/2; smaller real parts are handled by upward
// recurrence log Gamma(z) = log Gamma(z+n) - sum log(z+k), which preserves
// the principal branch on the upper half-plane (lower half by conjugation).
// Relative error <= 1e-13 for |z| <= 1e6.
//
// Throws PoleError when z is within 1e-12 of a nonpositive integer.
Complex log_gamma(Complex z);

// 1/Gamma(z), entire; zero at nonpositive integers. Stable near Gamma poles.
Complex recip_gamma(Complex z);

// Configuration for the Riemann-Siegel theta function.
struct ThetaExpansion {
    enum class Mode { exact, asymptotic };
    Mode mode = Mode::exact;
    int order = 3;  // asymptotic correction terms beyond the leading three, 0..3

    static ThetaExpansion exact() { return {Mode::exact, 0}; }
    static ThetaExpansion asymptotic(int order) { return {Mode::asymptotic, order}; }
};

// theta(t) = arg[pi^{-(1/2+it)/2} Gamma((1/2+it)/2)], continuous, theta(0) = 0.
//
// Exact mode evaluates Im log_gamma(1/4 + it/2) - (t/2) log pi.
// Asymptotic mode uses t/2 log(t/2pi) - t/2 - pi/8 plus correction terms
// 1/(48t), 7/(5760 t^3), 31/(80640 t^5) selected by `order`; it is only
// accepted for t >= 10 (documented accuracy floor).
double theta(double t, const ThetaExpansion& cfg = ThetaExpansion::exact());

// d theta / dt, asymptotic form; adequate as a Newton slope for t >= 7.
double theta_derivative(double t);

// Psi(x) = sum_{n>=1} e^{-n^2 pi x}, x > 0. Truncated when the next term
// drops below 1e-18 of the running sum; absolute error < 1e-16.
double psi(double x);

// |sqrt(x) (1 + 2 Psi(x)) - (1 + 2 Psi(1/x))|, the residual of the Jacobi
// transformation of the theta series. Contract: < 1e-12 on [0.05, 20].
double jacobi_identity_residual(double x);

}  // namespace zv
