#include "zv/zero_count.hpp"

#include <algorithm>
#include <cmath>

#include "zv/special.hpp"
#include "zv/zeta.hpp"

namespace zv {

namespace {

double z_eval(double t, Method method) { return z_function(t, 3, method).z; }

// Solve x (ln x - 1) = n + 1/8 for x = g/(2 pi): bisection seed for Newton.
double gram_seed(long n) {
    const double rhs = static_cast<double>(n) + 0.125;
    double lo = 1.0001, hi = static_cast<double>(n) + 10.0;
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        (mid * (std::log(mid) - 1.0) < rhs ? lo : hi) = mid;
    }
    return 2.0 * kPi * 0.5 * (lo + hi);
}

struct Tracker {
    double phase = 0.0;
    Complex prev;
};

// Continuous-phase walk of zeta along the straight segment a -> b; per-step
// principal phase change kept below pi/2 by halving, steps grow back when
// the phase is quiet.
void track_zeta_segment(Tracker& tr, Complex a, Complex b, double init_step) {
    const double len = std::abs(b - a);
    if (len == 0.0) return;
    double pos = 0.0;
    double step = init_step / len;
    const double max_step = step;
    while (pos < 1.0) {
        const double trial = std::min(step, 1.0 - pos);
        const Complex s = a + (pos + trial) * (b - a);
        const Complex cur = zeta(s);
        const double d = std::arg(cur / tr.prev);
        if (std::abs(d) > 0.45 * kPi) {
            step *= 0.5;
            if (step * len < 1e-9)
                throw ConvergenceError("arg tracking: step collapsed below 1e-9");
            continue;
        }
        tr.phase += d;
        tr.prev = cur;
        pos += trial;
        if (std::abs(d) < 0.1 * kPi) step = std::min(2.0 * step, max_step);
    }
}

struct ScanState {
    const ScanConfig* cfg = nullptr;
    ScanResult* out = nullptr;
};

double eval_with_tiebreak(double& t, double half_step, Method method) {
    double z = z_eval(t, method);
    if (std::abs(z) < 1e-12) {
        t += half_step;
        z = z_eval(t, method);
    }
    return z;
}

// Refine a same-sign interval 8x; recurse only where a dip in |Z| relative
// to the local slope scale could hide a zero pair.
void refine_interval(ScanState& st, double a, double b, double za, double zb,
                     int depth) {
    if (depth > st.cfg->max_depth) {
        st.out->unresolved.emplace_back(a, b);
        return;
    }
    st.out->depth_used = std::max(st.out->depth_used, depth);
    constexpr int kSplit = 8;
    const double h = (b - a) / kSplit;
    double ts[kSplit + 1];
    double zs[kSplit + 1];
    ts[0] = a;
    zs[0] = za;
    ts[kSplit] = b;
    zs[kSplit] = zb;
    for (int i = 1; i < kSplit; ++i) {
        ts[i] = a + i * h;
        zs[i] = eval_with_tiebreak(ts[i], 0.5 * h, st.cfg->method);
    }
    double slope = 0.0;
    for (int i = 0; i < kSplit; ++i)
        slope = std::max(slope, std::abs(zs[i + 1] - zs[i]) / h);
    for (int i = 0; i < kSplit; ++i) {
        if (std::signbit(zs[i]) != std::signbit(zs[i + 1])) {
            st.out->brackets.push_back({ts[i], ts[i + 1], zs[i], zs[i + 1]});
        } else {
            const double dip = std::min(std::abs(zs[i]), std::abs(zs[i + 1]));
            if (dip < 4.0 * slope * h)
                refine_interval(st, ts[i], ts[i + 1], zs[i], zs[i + 1], depth + 1);
        }
    }
}

}  // namespace

GramPoint gram_point(long n) {
    if (n < -1) throw DomainError("gram_point: requires n >= -1");
    const double target = static_cast<double>(n) * kPi;
    double g = std::max(gram_seed(n), 8.0);
    bool converged = false;
    for (int i = 0; i < 50; ++i) {
        const double r = theta(g) - target;
        if (std::abs(r) < 1e-12) {
            converged = true;
            break;
        }
        g -= r / theta_derivative(g);
        if (g < 7.5) g = 7.5;
    }
    if (!converged) throw ConvergenceError("gram_point: Newton failed in 50 iterations");
    return {n, g};
}

ScanResult scan_sign_changes(double t_lo, double t_hi, const ScanConfig& cfg) {
    require_finite(t_lo, "t_lo");
    require_finite(t_hi, "t_hi");
    if (!(t_lo >= 0.0 && t_lo < t_hi))
        throw DomainError("scan_sign_changes: requires 0 <= t_lo < t_hi");
    if (cfg.base_grid < 1 || cfg.max_depth < 1)
        throw DomainError("scan_sign_changes: base_grid and max_depth must be >= 1");

    std::vector<double> nodes;
    const int n_uniform =
        std::max(1, static_cast<int>(std::ceil((t_hi - t_lo) * cfg.base_grid)));
    for (int i = 0; i <= n_uniform; ++i)
        nodes.push_back(t_lo + (t_hi - t_lo) * i / n_uniform);
    for (long n = -1;; ++n) {
        const double g = gram_point(n).g;
        if (g >= t_hi) break;
        if (g > t_lo) nodes.push_back(g);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end(),
                            [](double x, double y) { return y - x < 1e-12; }),
                nodes.end());

    std::vector<double> zs(nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i) {
        const double half = (i + 1 < nodes.size() ? nodes[i + 1] - nodes[i]
                                                  : nodes[i] - nodes[i - 1]) * 0.5;
        zs[i] = eval_with_tiebreak(nodes[i], half, cfg.method);
    }

    ScanResult out;
    ScanState st{&cfg, &out};
    for (size_t i = 0; i + 1 < nodes.size(); ++i) {
        if (std::signbit(zs[i]) != std::signbit(zs[i + 1]))
            out.brackets.push_back({nodes[i], nodes[i + 1], zs[i], zs[i + 1]});
        else
            refine_interval(st, nodes[i], nodes[i + 1], zs[i], zs[i + 1], 1);
    }
    std::sort(out.brackets.begin(), out.brackets.end(),
              [](const Bracket& x, const Bracket& y) { return x.t_lo < y.t_lo; });
    return out;
}

ZeroRecord locate_zero(const Bracket& bracket, Method method) {
    double lo = bracket.t_lo, hi = bracket.t_hi;
    double z_lo = bracket.z_lo, z_hi = bracket.z_hi;
    if (std::signbit(z_lo) == std::signbit(z_hi))
        throw DomainError("locate_zero: endpoints carry the same sign");
    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        const double zm = z_eval(mid, method);
        if (zm == 0.0) {
            lo = mid - 4e-10;
            hi = mid + 4e-10;
            break;
        }
        if (std::signbit(zm) == std::signbit(z_lo)) {
            lo = mid;
            z_lo = zm;
        } else {
            hi = mid;
            z_hi = zm;
        }
    }
    ZeroRecord rec;
    rec.t = 0.5 * (lo + hi);
    rec.t_lo = lo;
    rec.t_hi = hi;
    rec.width = hi - lo;
    rec.residual = std::abs(z_eval(rec.t, method));
    rec.method = method;
    return rec;
}

std::vector<ZeroRecord> zero_table(double t_lo, double t_hi, const ScanConfig& cfg) {
    const ScanResult scan = scan_sign_changes(t_lo, t_hi, cfg);
    std::vector<ZeroRecord> out;
    out.reserve(scan.brackets.size());
    long index = 1;
    for (const Bracket& b : scan.brackets) {
        ZeroRecord rec = locate_zero(b, cfg.method);
        rec.index = index++;
        out.push_back(rec);
    }
    return out;
}

TrackedArg arg_zeta_tracked(double T) {
    require_finite(T, "T");
    if (T < 0.0) throw DomainError("arg_zeta_tracked: requires T >= 0");
    TrackedArg out;
    out.T_used = T;
    if (std::abs(zeta(Complex(0.5, T))) < 1e-10) {
        out.T_used = T + 1e-6;
        out.shifted = true;
    }
    Tracker tr;
    tr.prev = zeta(Complex(2.0, 0.0));
    track_zeta_segment(tr, Complex(2.0, 0.0), Complex(2.0, out.T_used), 0.5);
    track_zeta_segment(tr, Complex(2.0, out.T_used), Complex(0.5, out.T_used), 0.05);
    out.value = tr.phase;
    return out;
}

BacklundCount backlund_count(double T) {
    BacklundCount out;
    out.arg = arg_zeta_tracked(T);
    out.pre_rounding = (theta(out.arg.T_used) + out.arg.value) / kPi + 1.0;
    const double rounded = std::round(out.pre_rounding);
    out.distance = std::abs(out.pre_rounding - rounded);
    if (out.distance >= 0.05)
        throw ConvergenceError("backlund_count: pre-rounding value " +
                               std::to_string(out.pre_rounding) +
                               " is ambiguous (distance >= 0.05)");
    out.count = static_cast<long>(rounded);
    return out;
}

VerificationReport verify_equality(double T, const ScanConfig& cfg) {
    require_finite(T, "T");
    if (T < 0.0) throw DomainError("verify_equality: requires T >= 0");
    const BacklundCount bc = backlund_count(T);

    VerificationReport rep;
    rep.T = T;
    rep.n_argument = bc.count;
    rep.s_of_T = bc.arg.value / kPi;
    rep.lemma_residual = kPi * bc.distance;

    ScanConfig scan_cfg = cfg;
    for (;;) {
        const ScanResult scan = scan_sign_changes(0.0, bc.arg.T_used, scan_cfg);
        rep.n0_signchanges = static_cast<long>(scan.brackets.size());
        rep.refinement_depth = std::max(rep.refinement_depth, scan.depth_used);
        if (rep.n0_signchanges == rep.n_argument || scan_cfg.max_depth >= 12) break;
        scan_cfg.max_depth = std::min(12, 2 * scan_cfg.max_depth);
    }
    rep.equal = rep.n0_signchanges == rep.n_argument;
    return rep;
}

OmegaDiagnostics omega_diagnostics(double t_lo, double t_hi, const ContourConfig& cfg) {
    require_finite(t_lo, "t_lo");
    require_finite(t_hi, "t_hi");
    if (!(t_lo >= 0.0 && t_lo < t_hi && t_hi <= 200.0))
        throw DomainError("omega_diagnostics: requires 0 <= t_lo < t_hi <= 200");

    auto f_at = [&](double t) { return f_integral(Complex(0.5, t), cfg).value; };

    OmegaDiagnostics out;
    Complex prev = f_at(t_lo);
    double arg_f = std::arg(prev);
    if (arg_f > 0.5 * kPi) arg_f -= 2.0 * kPi;  // start in the (-3pi/2, pi/2] branch
    out.omega0 = theta(t_lo) + arg_f;
    out.omega0_in_band = out.omega0 >= -1.5 * kPi && out.omega0 <= -0.5 * kPi;
    out.samples.emplace_back(t_lo, out.omega0);

    double t = t_lo;
    double step = 0.25;
    while (t < t_hi) {
        const double trial = std::min(step, t_hi - t);
        const Complex cur = f_at(t + trial);
        const double d = std::arg(cur / prev);
        if (std::abs(d) > 0.45 * kPi) {
            step *= 0.5;
            if (step < 1e-9)
                throw ConvergenceError("omega_diagnostics: step collapsed below 1e-9");
            continue;
        }
        arg_f += d;
        prev = cur;
        t += trial;
        out.samples.emplace_back(t, theta(t) + arg_f);
        if (std::abs(d) < 0.1 * kPi) step = std::min(2.0 * step, 0.25);
    }

    out.t_m = -1.0;
    out.positive_after = true;
    for (size_t i = 1; i < out.samples.size(); ++i) {
        const auto& [ta, wa] = out.samples[i - 1];
        const auto& [tb, wb] = out.samples[i];
        if (out.t_m < 0.0 && wa < 0.0 && wb >= 0.0)
            out.t_m = ta + (tb - ta) * (-wa) / (wb - wa);
        else if (out.t_m >= 0.0 && wb <= 0.0)
            out.positive_after = false;
    }
    out.floor_count =
        static_cast<long>(std::floor(out.samples.back().second / kPi + 0.5));
    out.n0 = static_cast<long>(scan_sign_changes(t_lo, t_hi).brackets.size());
    return out;
}

}  // namespace zv
