#pragma once

#include "zv/common.hpp"

namespace zv {

// Euler-Maclaurin evaluation parameters for zeta(s).
struct EulerMaclaurinConfig {
    int cutoff = 0;           // direct-sum length N; 0 means "derive from s"
    int bernoulli_order = 20; // highest Bernoulli number used, even, <= 30

    // Default contract-satisfying config at s: cutoff = ceil(|Im s|/2) + 10.
    static EulerMaclaurinConfig for_point(Complex s);
};

// Bernoulli number B_n for even n in [0, 32] (modern convention, B_1 = -1/2).
double bernoulli(int n);

// zeta(s) by Euler-Maclaurin summation; delegates to zeta_reflect for
// Re s < 0. Absolute error <= 1e-10 for |Im s| <= 2000, -1 <= Re s <= 3
// with a contract-satisfying config.
//
// Throws PoleError at s = 1 and ConfigError when the internal error
// estimate exceeds 1e-8.
Complex zeta(Complex s, const EulerMaclaurinConfig& cfg);
Complex zeta(Complex s);

// zeta(s) for Re s < 1/2 through the functional equation:
// zeta(s) = pi^{s-1/2} Gamma((1-s)/2)/Gamma(s/2) zeta(1-s).
Complex zeta_reflect(Complex s);

// zeta(-n) = -B_{n+1}/(n+1) (modern Bernoulli convention); 0 for even n >= 2.
double trivial_zeta_value(int n);

// Completed zeta, xi(s) = s/2 (s-1) pi^{-s/2} Gamma(s/2) zeta(s), entire;
// the removable points s = 0 and s = 1 evaluate to 1/2.
Complex xi(Complex s);

// Quadrature parameters for the integral representation of xi.
struct XiQuadratureConfig {
    double upper_limit = 40.0;  // truncation X of the integral over [1, inf)
    int panels = 8;             // initial Gauss panels on [1, X]
};

struct XiIntegralResult {
    Complex value;
    double truncation_bound = 0.0;  // e^{-pi X}, recorded with every result
    double quad_error = 0.0;        // adaptive-refinement error estimate
};

// xi via 1/2 + s/2 (s-1) Int_1^X Psi(x)(x^{s/2-1} + x^{-(s+1)/2}) dx.
// Agrees with xi(s) within 1e-8 for |Im s| <= 50, 0 <= Re s <= 1.
XiIntegralResult xi_integral(Complex s, const XiQuadratureConfig& cfg = {});

}  // namespace zv
