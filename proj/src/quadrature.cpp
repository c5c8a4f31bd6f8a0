#include "zv/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace zv {

namespace {

GaussRule build_rule(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Tricomi initial guess, then Newton on P_n.
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
    if (n < 2 || n > 256) throw DomainError("gauss_legendre: order out of range [2, 256]");
    static std::mutex mu;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
    return it->second;
}

QuadResult integrate(const std::function<Complex(double)>& f, double a, double b,
                     int panels, int points_per_panel, double abs_tol, double rel_tol,
                     int max_refine) {
    if (!(a < b)) throw DomainError("integrate: requires a < b");
    if (panels < 1) throw DomainError("integrate: panels must be >= 1");
    const GaussRule& rule = gauss_legendre(points_per_panel);

    auto pass = [&](int np) {
        Complex total(0.0, 0.0);
        const double h = (b - a) / np;
        for (int p = 0; p < np; ++p) {
            const double lo = a + p * h;
            const double mid = lo + 0.5 * h;
            Complex acc(0.0, 0.0);
            for (size_t i = 0; i < rule.nodes.size(); ++i)
                acc += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
            total += acc * (0.5 * h);
        }
        return total;
    };

    QuadResult out;
    Complex prev = pass(panels);
    for (int level = 1; level <= max_refine; ++level) {
        panels *= 2;
        const Complex cur = pass(panels);
        const double change = std::abs(cur - prev);
        out.value = cur;
        out.err_estimate = change;
        out.refinements = level;
        if (change <= abs_tol + rel_tol * std::abs(cur)) return out;
        prev = cur;
    }
    throw QuadratureError("integrate: panel refinement stalled above tolerance");
}

}  // namespace zv
