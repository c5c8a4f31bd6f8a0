#pragma once

#include "zv/common.hpp"

namespace zv {

enum class Method { riemann_siegel, euler_maclaurin };

// One evaluation record on the critical line.
struct ZSample {
    double t = 0.0;
    double z = 0.0;       // Z(t), real by construction
    double theta = 0.0;   // theta(t)
    Complex zeta;         // zeta(1/2 + it)
    Method method = Method::riemann_siegel;
    double err_bound = 0.0;
};

// Slope-one contour parameters for the f(s) and Phi(u) line integrals.
struct ContourConfig {
    double crossing = 0.5;     // fractional crossing point within (0, 1)
    double half_length = 8.0;  // truncation V of the line parameter, >= 4
    int panels = 8;            // initial Gauss panels
};

// 2 sum_{n<=M} cos(theta(t) - t ln n)/sqrt(n), M = floor(sqrt(t/2pi)).
// Requires t >= 2 pi (so M >= 1); compensated summation.
double main_sum(double t);

// Riemann-Siegel correction through the given order (0..3):
// (-1)^{M-1} (t/2pi)^{-1/4} sum_{j<=order} C_j(p) (t/2pi)^{-j/2},
// p = frac(sqrt(t/2pi)). Requires t >= 30.
double correction(double t, int order);

// The coefficient functions C_0..C_3 of the remainder expansion at p,
// C_0(p) = cos(2pi(p^2 - p - 1/16))/cos(2pi p) and its derivative-based
// companions. Exposed for tests of the removable-singularity handling.
double rs_coefficient(int j, double p);

// Z(t) with the selected remainder order. Riemann-Siegel for t >= 30;
// Euler-Maclaurin (Z = Re[e^{i theta} zeta(1/2+it)]) otherwise or on request.
ZSample z_function(double t, int order = 3);
ZSample z_function(double t, int order, Method method);

struct FIntegralResult {
    Complex value;
    double err_estimate = 0.0;
};

// f(s) = Int_{0 swarrow 1} x^{-s} e^{pi i x^2} / (e^{pi i x} - e^{-pi i x}) dx.
//
// Evaluated on the slope-one line through M + crossing (M = floor(sqrt(t/2pi)),
// t = Im s), which passes through the stationary point of the integrand; the
// poles n = 1..M crossed while shifting the line from (0,1) contribute their
// residues sum n^{-s}. Im s < 0 is evaluated by conjugation symmetry.
//
// Requires 0 < Re s < 1 and |Im s| <= 200.
FIntegralResult f_integral(Complex s, const ContourConfig& cfg = {});

// |pi^{-s/2}Gamma(s/2)zeta(s) - pi^{-s/2}Gamma(s/2)f(s)
//  - pi^{(s-1)/2}Gamma((1-s)/2)f~(1-s)|, where f~ is the mirrored contour
// integral conj(f(conj(.))). Contract: < 1e-7 on the validated domain.
double rs_integral_residual(Complex s, const ContourConfig& cfg = {});

struct TwoReDecomposition {
    double z_direct = 0.0;  // Z(t) via Euler-Maclaurin
    double z_via_f = 0.0;   // 2 r cos(omega)
    double r = 0.0;         // |f(1/2 + it)|
    double omega = 0.0;     // theta(t) + arg f(1/2 + it), principal per point
};

// Z(t) = 2 Re[e^{i theta(t)} f(1/2+it)] = 2 r(t) cos(omega(t)); 0 <= t <= 200.
TwoReDecomposition two_re_decomposition(double t, const ContourConfig& cfg = {});

// Closed form of Phi(u) = Int_{0 nwarrow 1} e^{-pi i x^2 + 2 pi i u x} /
// (e^{pi i x} - e^{-pi i x}) dx:
//   1/(1 - e^{-2 pi i u}) - e^{pi i u^2}/(e^{pi i u} - e^{-pi i u}).
Complex phi_closed_form(Complex u);

// Quadrature evaluation of Phi(u) on a crossing line chosen near the
// stationary point Re u + Im u, with residue corrections for crossed poles.
Complex phi_quadrature(Complex u, const ContourConfig& cfg = {});

// |Phi_quadrature(u) - Phi_closed_form(u)|; contract < 1e-8 for |u| <= 5
// with u at distance >= 0.05 from every integer. Accuracy degrades like
// e^{pi |Im u^2|} * eps as the closed form itself grows.
double phi_closed_form_residual(Complex u, const ContourConfig& cfg = {});

}  // namespace zv
