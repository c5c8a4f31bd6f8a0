#include "zv/zeta.hpp"

#include <array>
#include <cmath>

#include "zv/quadrature.hpp"
#include "zv/special.hpp"

namespace zv {

namespace {

// B_0, B_2, ..., B_32 (modern convention).
constexpr std::array<double, 17> kEvenBernoulli = {
    1.0,
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
};

Complex cpow(double n, Complex s) { return std::exp(-s * std::log(n)); }  // n^{-s}, n > 0

}  // namespace

double bernoulli(int n) {
    if (n == 1) return -0.5;
    if (n < 0 || n > 32) throw DomainError("bernoulli: n out of tabulated range [0, 32]");
    if (n % 2 == 1) return 0.0;
    return kEvenBernoulli[static_cast<size_t>(n / 2)];
}

EulerMaclaurinConfig EulerMaclaurinConfig::for_point(Complex s) {
    EulerMaclaurinConfig cfg;
    cfg.cutoff = static_cast<int>(std::ceil(std::abs(s.imag()) / 2.0)) + 10;
    cfg.bernoulli_order = 20;
    return cfg;
}

Complex zeta(Complex s, const EulerMaclaurinConfig& cfg) {
    require_finite(s, "s");
    if (std::abs(s - Complex(1.0, 0.0)) < 1e-14)
        throw PoleError("zeta: s = 1 is a simple pole");
    if (s.real() < 0.0) return zeta_reflect(s);

    const int required = static_cast<int>(std::ceil(std::abs(s.imag()) / 2.0)) + 10;
    const int n_cut = cfg.cutoff > 0 ? cfg.cutoff : required;
    if (n_cut < required)
        throw ConfigError("zeta: cutoff below accuracy contract ceil(|Im s|/2) + 10");
    if (cfg.bernoulli_order < 2 || cfg.bernoulli_order > 30 || cfg.bernoulli_order % 2 != 0)
        throw ConfigError("zeta: bernoulli_order must be even and in [2, 30]");

    // Euler-Maclaurin: sum_{n<N} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2
    //                  + sum_k B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1}.
    const double n_real = static_cast<double>(n_cut);
    KahanSum re_sum, im_sum;
    for (int n = 1; n < n_cut; ++n) {
        const Complex term = cpow(static_cast<double>(n), s);
        re_sum.add(term.real());
        im_sum.add(term.imag());
    }
    Complex acc(re_sum.value(), im_sum.value());
    const Complex n_pow = cpow(n_real, s);  // N^{-s}
    acc += n_pow * n_real / (s - 1.0);
    acc += 0.5 * n_pow;

    // Tail: term_k = B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    Complex rising(1.0, 0.0);        // s(s+1)...(s+j-1)
    double factorial = 1.0;          // (2k)!
    Complex n_dec = n_pow * n_real;  // N^{-s-2k+1}, starts at N^{1-s}
    double last_mag = 0.0;
    const int k_max = cfg.bernoulli_order / 2;
    for (int k = 1; k <= k_max; ++k) {
        rising *= (k == 1) ? s : (s + Complex(2.0 * k - 3.0, 0.0)) * (s + Complex(2.0 * k - 2.0, 0.0));
        factorial *= (k == 1) ? 2.0 : (2.0 * k - 1.0) * (2.0 * k);
        n_dec /= n_real * n_real;
        const Complex term = bernoulli(2 * k) / factorial * rising * n_dec;
        acc += term;
        last_mag = std::abs(term);
    }

    // Error estimate: magnitude of the first omitted correction term.
    const int k_next = k_max + 1;
    const Complex rising_next =
        rising * (s + Complex(2.0 * k_next - 3.0, 0.0)) * (s + Complex(2.0 * k_next - 2.0, 0.0));
    const double fact_next = factorial * (2.0 * k_next - 1.0) * (2.0 * k_next);
    const double err =
        std::abs(bernoulli(2 * k_next) / fact_next * rising_next) * std::abs(n_dec) / (n_real * n_real);
    if (err > 1e-8 && err > 1e-13 * std::abs(acc))
        throw ConfigError("zeta: internal error estimate " + std::to_string(err) +
                          " exceeds 1e-8; increase cutoff or bernoulli_order");
    (void)last_mag;
    return acc;
}

Complex zeta(Complex s) { return zeta(s, EulerMaclaurinConfig::for_point(s)); }

Complex zeta_reflect(Complex s) {
    require_finite(s, "s");
    if (s.real() >= 0.5 + 1e-12)
        throw DomainError("zeta_reflect: requires Re s <= 1/2");
    // pi^{s-1/2} Gamma((1-s)/2) / Gamma(s/2) zeta(1-s); the reciprocal Gamma
    // keeps the trivial zeros exact where s/2 hits a pole of Gamma.
    const Complex z1s = zeta(1.0 - s, EulerMaclaurinConfig::for_point(s));
    const Complex g_num = log_gamma((1.0 - s) / 2.0);
    return std::pow(Complex(kPi, 0.0), s - 0.5) * std::exp(g_num) * recip_gamma(s / 2.0) * z1s;
}

double trivial_zeta_value(int n) {
    if (n < 1) throw DomainError("trivial_zeta_value: n must be >= 1");
    if (n % 2 == 0) return 0.0;  // B_{n+1} vanishes for odd index n+1 >= 3
    if (n + 1 > 32) throw DomainError("trivial_zeta_value: n out of tabulated range");
    return -bernoulli(n + 1) / (n + 1.0);
}

Complex xi(Complex s) {
    require_finite(s, "s");
    // Removable points of the defining product.
    if (std::abs(s) < 1e-12 || std::abs(s - Complex(1.0, 0.0)) < 1e-12)
        return Complex(0.5, 0.0);
    const Complex z = (s.real() < 0.0) ? zeta_reflect(s) : zeta(s);
    return 0.5 * s * (s - 1.0) * std::pow(Complex(kPi, 0.0), -s / 2.0) *
           std::exp(log_gamma(s / 2.0)) * z;
}

XiIntegralResult xi_integral(Complex s, const XiQuadratureConfig& cfg) {
    require_finite(s, "s");
    if (cfg.upper_limit < 10.0)
        throw DomainError("xi_integral: upper_limit must be >= 10");
    if (cfg.panels < 1)
        throw DomainError("xi_integral: panels must be >= 1");

    auto integrand = [&s](double x) {
        const double lx = std::log(x);
        return psi(x) * (std::exp((s / 2.0 - 1.0) * lx) + std::exp(-(s + 1.0) / 2.0 * lx));
    };
    const QuadResult q = integrate(integrand, 1.0, cfg.upper_limit, cfg.panels, 32,
                                   1e-12, 1e-11, 12);
    XiIntegralResult out;
    out.value = 0.5 + 0.5 * s * (s - 1.0) * q.value;
    out.truncation_bound = std::exp(-kPi * cfg.upper_limit);
    out.quad_error = q.err_estimate;
    return out;
}

}  // namespace zv
