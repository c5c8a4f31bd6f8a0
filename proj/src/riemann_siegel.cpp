#include "zv/riemann_siegel.hpp"

#include <array>
#include <cmath>

#include "zv/quadrature.hpp"
#include "zv/special.hpp"
#include "zv/zeta.hpp"

namespace zv {

namespace {

constexpr Complex kI(0.0, 1.0);

// Kernel of the remainder expansion: Psi(w) = cos(2pi(w^2 - w - 1/16))/cos(2pi w).
// Entire in w; near the zeros of the denominator (w = 1/4 + k/2) both factors
// vanish and the ratio is evaluated through the exact local rewrite
//   Psi(w0 + e) = (tau/sigma) sin(2pi h)/sin(2pi e),  h = (2 w0 - 1) e + e^2,
// with sigma = sin(2pi w0), tau = sin(2pi g(w0)) both +-1.
Complex psi_kernel(Complex w) {
    const Complex den = std::cos(2.0 * kPi * w);
    if (std::abs(den) > 1e-3)
        return std::cos(2.0 * kPi * (w * w - w - 1.0 / 16.0)) / den;

    const double k = std::round((w.real() - 0.25) * 2.0);
    const double w0 = 0.25 + 0.5 * k;
    const Complex e = w - w0;
    const double sigma = std::sin(2.0 * kPi * w0) > 0 ? 1.0 : -1.0;
    const double g0 = w0 * w0 - w0 - 1.0 / 16.0;
    const double tau = std::sin(2.0 * kPi * g0) > 0 ? 1.0 : -1.0;
    const Complex h = (2.0 * w0 - 1.0) * e + e * e;
    if (std::abs(e) < 1e-14) return Complex(tau / sigma * (2.0 * w0 - 1.0), 0.0);
    return (tau / sigma) * std::sin(2.0 * kPi * h) / std::sin(2.0 * kPi * e);
}

// Derivatives Psi^(k)(p), k = 0..9, by the Cauchy integral on a circle of
// radius 1/2 (Psi is entire, so the trapezoid rule converges geometrically).
std::array<double, 10> psi_kernel_derivatives(double p) {
    constexpr int m = 256;
    constexpr double radius = 0.5;
    std::array<Complex, 10> acc{};
    for (int j = 0; j < m; ++j) {
        const double phase = 2.0 * kPi * j / m;
        const Complex node = std::polar(1.0, phase);
        const Complex value = psi_kernel(p + radius * node);
        Complex rot(1.0, 0.0);  // node^{-k}
        for (int k = 0; k < 10; ++k) {
            acc[k] += value * rot;
            rot *= std::conj(node);
        }
    }
    std::array<double, 10> out{};
    double factorial = 1.0, rk = 1.0;
    for (int k = 0; k < 10; ++k) {
        if (k > 0) {
            factorial *= k;
            rk *= radius;
        }
        out[k] = acc[k].real() / m * factorial / rk;
    }
    return out;
}

std::array<double, 4> rs_coefficients(double p) {
    const std::array<double, 10> d = psi_kernel_derivatives(p);
    const double pi2 = kPi * kPi;
    const double pi4 = pi2 * pi2;
    const double pi6 = pi4 * pi2;
    return {
        d[0],
        -d[3] / (96.0 * pi2),
        d[2] / (64.0 * pi2) + d[6] / (18432.0 * pi4),
        -d[1] / (64.0 * pi2) - d[5] / (3840.0 * pi4) - d[9] / (5308416.0 * pi6),
    };
}

// Documented remainder bounds c_j t^{-(2j+3)/4}; empirical with margin.
constexpr std::array<double, 4> kOrderBoundC = {2.0, 1.0, 0.5, 0.25};

long saddle_index(double t) {
    return static_cast<long>(std::floor(std::sqrt(std::max(t, 0.0) / (2.0 * kPi))));
}

// Shared adaptive evaluation of a Gaussian-decaying line integral: extends
// the truncation until the integrand is negligible at both endpoints, then
// integrates with panel doubling.
QuadResult integrate_line(const std::function<Complex(double)>& g, double v0,
                          int panels) {
    double v = std::max(v0, 4.0);
    while (v < 64.0 && (std::abs(g(v)) > 1e-20 || std::abs(g(-v)) > 1e-20)) v += 2.0;
    const int p0 = std::max(panels, static_cast<int>(v));
    return integrate(g, -v, v, p0, 32, 1e-13, 1e-12, 12);
}

void check_crossing(double crossing) {
    if (!(crossing > 0.0 && crossing < 1.0))
        throw DomainError("contour crossing must lie in (0, 1)");
    if (crossing < 1e-3 || crossing > 1.0 - 1e-3)
        throw PoleError("contour passes within 1e-3 of an integer (integrand pole)");
}

// The 0-swarrow-1 family: line through c with direction e^{i pi/4}, traversed
// toward the lower left (hence the overall minus sign on the quadrature).
FIntegralResult f_line(Complex s, long m, const ContourConfig& cfg) {
    check_crossing(cfg.crossing);
    const double c = static_cast<double>(m) + cfg.crossing;
    const Complex dir = std::polar(1.0, kPi / 4.0);
    auto g = [&](double v) {
        const Complex x = c + v * dir;
        const Complex num = std::exp(-s * std::log(x) + kI * kPi * x * x);
        const Complex den = std::exp(kI * kPi * x) - std::exp(-kI * kPi * x);
        return num / den * dir;
    };
    const QuadResult q = integrate_line(g, cfg.half_length, cfg.panels);

    Complex residues(0.0, 0.0);
    for (long n = 1; n <= m; ++n)
        residues += std::exp(-s * std::log(static_cast<double>(n)));

    FIntegralResult out;
    out.value = -q.value + residues;
    out.err_estimate = q.err_estimate;
    return out;
}

}  // namespace

double rs_coefficient(int j, double p) {
    if (j < 0 || j > 3) throw DomainError("rs_coefficient: order must be in 0..3");
    if (!(p >= 0.0 && p < 1.0)) throw DomainError("rs_coefficient: p must be in [0, 1)");
    return rs_coefficients(p)[static_cast<size_t>(j)];
}

double main_sum(double t) {
    require_finite(t, "t");
    if (t < 2.0 * kPi) throw DomainError("main_sum: requires t >= 2 pi");
    const long m = saddle_index(t);
    const double th = theta(t);
    KahanSum sum;
    for (long n = 1; n <= m; ++n) {
        const double dn = static_cast<double>(n);
        sum.add(std::cos(th - t * std::log(dn)) / std::sqrt(dn));
    }
    return 2.0 * sum.value();
}

double correction(double t, int order) {
    require_finite(t, "t");
    if (t < 30.0) throw DomainError("correction: requires t >= 30");
    if (order < 0 || order > 3) throw DomainError("correction: unsupported order");
    const double a = std::sqrt(t / (2.0 * kPi));
    const long m = static_cast<long>(std::floor(a));
    const double p = a - static_cast<double>(m);
    const std::array<double, 4> c = rs_coefficients(p);
    double sum = 0.0;
    for (int j = 0; j <= order; ++j) sum += c[static_cast<size_t>(j)] * std::pow(a, -j);
    const double sign = (m % 2 == 1) ? 1.0 : -1.0;  // (-1)^{m-1}
    return sign * sum / std::sqrt(a);
}

ZSample z_function(double t, int order) {
    return z_function(t, order, t >= 30.0 ? Method::riemann_siegel : Method::euler_maclaurin);
}

ZSample z_function(double t, int order, Method method) {
    require_finite(t, "t");
    if (t < 0.0) throw DomainError("z_function: t must be >= 0");
    ZSample out;
    out.t = t;
    out.theta = theta(t);
    out.method = method;
    if (method == Method::riemann_siegel) {
        out.z = main_sum(t) + correction(t, order);
        out.zeta = std::exp(-kI * out.theta) * out.z;
        out.err_bound = kOrderBoundC[static_cast<size_t>(order)] *
                        std::pow(t, -(2.0 * order + 3.0) / 4.0);
    } else {
        const Complex zeta_val = zeta(Complex(0.5, t));
        const Complex rotated = std::exp(kI * out.theta) * zeta_val;
        if (std::abs(rotated.imag()) >= 1e-9)
            throw Error("z_function: rotated zeta has imaginary part >= 1e-9");
        out.z = rotated.real();
        out.zeta = zeta_val;
        out.err_bound = 1e-9;
    }
    return out;
}

FIntegralResult f_integral(Complex s, const ContourConfig& cfg) {
    require_finite(s, "s");
    if (!(s.real() > 0.0 && s.real() < 1.0))
        throw DomainError("f_integral: requires 0 < Re s < 1");
    if (std::abs(s.imag()) > 200.0)
        throw DomainError("f_integral: |Im s| > 200 exceeds the oscillation budget");
    if (s.imag() < 0.0) {
        FIntegralResult r = f_integral(std::conj(s), cfg);
        r.value = std::conj(r.value);
        return r;
    }
    return f_line(s, saddle_index(s.imag()), cfg);
}

double rs_integral_residual(Complex s, const ContourConfig& cfg) {
    require_finite(s, "s");
    const Complex g_s = std::pow(Complex(kPi, 0.0), -s / 2.0) * std::exp(log_gamma(s / 2.0));
    const Complex g_1s =
        std::pow(Complex(kPi, 0.0), (s - 1.0) / 2.0) * std::exp(log_gamma((1.0 - s) / 2.0));
    const Complex lhs = g_s * zeta(s);
    const Complex f_s = f_integral(s, cfg).value;
    // Mirrored contour for the companion term (the 0-searrow-1 integral).
    const Complex f_mirror = std::conj(f_integral(1.0 - std::conj(s), cfg).value);
    return std::abs(lhs - g_s * f_s - g_1s * f_mirror);
}

TwoReDecomposition two_re_decomposition(double t, const ContourConfig& cfg) {
    require_finite(t, "t");
    if (!(t >= 0.0 && t <= 200.0))
        throw DomainError("two_re_decomposition: requires 0 <= t <= 200");
    const Complex f = f_integral(Complex(0.5, t), cfg).value;
    TwoReDecomposition out;
    out.r = std::abs(f);
    out.omega = theta(t) + std::arg(f);
    out.z_via_f = 2.0 * out.r * std::cos(out.omega);
    out.z_direct = z_function(t, 0, Method::euler_maclaurin).z;
    return out;
}

Complex phi_closed_form(Complex u) {
    require_finite(u, "u");
    return 1.0 / (1.0 - std::exp(-2.0 * kPi * kI * u)) -
           std::exp(kPi * kI * u * u) / (std::exp(kPi * kI * u) - std::exp(-kPi * kI * u));
}

Complex phi_quadrature(Complex u, const ContourConfig& cfg) {
    require_finite(u, "u");
    if (std::abs(u - std::round(u.real())) < 0.05 && std::abs(u.imag()) < 0.05)
        throw PoleError("phi_quadrature: u within 0.05 of an integer");
    check_crossing(cfg.crossing);

    // Stationary point of the exponent sits near Re u + Im u on the real
    // axis; crossing there keeps the integrand comparable to the result.
    const long m = static_cast<long>(std::lround(u.real() + u.imag() - 0.5));
    const double c = static_cast<double>(m) + cfg.crossing;
    const Complex dir = std::polar(1.0, 3.0 * kPi / 4.0);  // 0-nwarrow-1 direction
    auto g = [&](double v) {
        const Complex x = c + v * dir;
        const Complex num = std::exp(-kPi * kI * x * x + 2.0 * kPi * kI * u * x);
        const Complex den = std::exp(kI * kPi * x) - std::exp(-kI * kPi * x);
        return num / den * dir;
    };
    const double v0 = std::max(cfg.half_length, 1.5 * std::abs(u.imag()) + 10.0);
    const QuadResult q = integrate_line(g, v0, cfg.panels);

    Complex val = q.value;
    if (m >= 0)
        for (long n = 1; n <= m; ++n) val -= std::exp(2.0 * kPi * kI * u * static_cast<double>(n));
    else
        for (long n = m + 1; n <= 0; ++n) val += std::exp(2.0 * kPi * kI * u * static_cast<double>(n));
    return val;
}

double phi_closed_form_residual(Complex u, const ContourConfig& cfg) {
    return std::abs(phi_quadrature(u, cfg) - phi_closed_form(u));
}

}  // namespace zv
