#pragma once

#include <utility>
#include <vector>

#include "zv/riemann_siegel.hpp"

namespace zv {

// theta(g) = n pi; the scan scaffolding of Gram's law.
struct GramPoint {
    long n = 0;
    double g = 0.0;
};

// Solved by safeguarded Newton on the exact theta; |theta(g) - n pi| < 1e-10.
// Requires n >= -1 (theta is monotone only past its minimum near t = 6.3).
GramPoint gram_point(long n);

// A sign change of Z between two abscissae.
struct Bracket {
    double t_lo = 0.0;
    double t_hi = 0.0;
    double z_lo = 0.0;
    double z_hi = 0.0;
};

struct ScanConfig {
    int base_grid = 8;   // uniform nodes per unit t, merged with Gram points
    int max_depth = 6;   // 8x refinement per depth on suspicious intervals
    Method method = Method::euler_maclaurin;
};

struct ScanResult {
    std::vector<Bracket> brackets;  // disjoint, ordered
    std::vector<std::pair<double, double>> unresolved;  // depth budget exhausted
    int depth_used = 0;
};

// Sign-change scan of Z on [t_lo, t_hi]. The first grid is the union of the
// Gram points in range and a uniform grid; every same-sign interval is
// refined once, and further only while a dip (small |Z| relative to the local
// slope scale) suggests a hidden zero pair. Grid nodes with |Z| < 1e-12 are
// perturbed by half the local step before classification.
ScanResult scan_sign_changes(double t_lo, double t_hi, const ScanConfig& cfg = {});

struct ZeroRecord {
    long index = 0;       // ordinal, >= 1
    double t = 0.0;
    double t_lo = 0.0;
    double t_hi = 0.0;
    double residual = 0.0;  // |Z(t)|
    double width = 0.0;     // t_hi - t_lo, <= 1e-9
    Method method = Method::euler_maclaurin;
};

// Bisection of Z inside a bracket to width <= 1e-9.
ZeroRecord locate_zero(const Bracket& bracket, Method method = Method::euler_maclaurin);

// Scan plus per-bracket bisection; records indexed from 1, increasing in t.
std::vector<ZeroRecord> zero_table(double t_lo, double t_hi, const ScanConfig& cfg = {});

struct TrackedArg {
    double value = 0.0;    // continuous-branch arg zeta(1/2 + iT)
    double T_used = 0.0;   // input T, shifted by +1e-6 if it landed on a zero
    bool shifted = false;
};

// Continuous arg zeta at 1/2 + iT along 2 -> 2 + iT -> 1/2 + iT, starting
// from arg zeta(2) = 0. Adaptive stepping keeps each per-step phase change
// below pi/2; steps halve near zeros and a demanded step below 1e-9 raises
// ConvergenceError.
TrackedArg arg_zeta_tracked(double T);

struct BacklundCount {
    long count = 0;
    double pre_rounding = 0.0;  // (theta(T) + arg zeta)/pi + 1 before rounding
    double distance = 0.0;      // distance of pre_rounding from the integer
    TrackedArg arg;
};

// N(T) = round((theta(T) + arg zeta(1/2+iT))/pi + 1). The pre-rounding value
// must sit within 0.05 of an integer; otherwise ConvergenceError.
BacklundCount backlund_count(double T);

struct VerificationReport {
    double T = 0.0;
    long n_argument = 0;
    long n0_signchanges = 0;
    double s_of_T = 0.0;          // arg zeta(1/2+iT)/pi
    bool equal = false;
    double lemma_residual = 0.0;  // distance of theta + arg zeta from n pi
    int refinement_depth = 0;
};

// Runs both counters on [0, T]; on mismatch the scan depth is doubled up to
// a hard cap before the report is emitted. Mismatch is an outcome, not an
// error.
VerificationReport verify_equality(double T, const ScanConfig& cfg = {});

struct OmegaDiagnostics {
    double omega0 = 0.0;            // omega(t_lo)
    bool omega0_in_band = false;    // omega(0) in [-3pi/2, -pi/2]
    double t_m = 0.0;               // earliest sampled zero of omega, or -1
    bool positive_after = false;    // omega > 0 on the grid beyond t_m
    long floor_count = 0;           // floor(omega(T)/pi + 1/2)
    long n0 = 0;                    // scan count on the same interval
    std::vector<std::pair<double, double>> samples;  // (t, omega)
};

// Continuous omega(t) = theta(t) + arg f(1/2+it) on [t_lo, t_hi], t_hi <= 200,
// tracked with the same step-halving contract as arg_zeta_tracked.
OmegaDiagnostics omega_diagnostics(double t_lo, double t_hi,
                                   const ContourConfig& cfg = {});

}  // namespace zv
