#pragma once

#include <functional>
#include <span>
#include <vector>

#include "zv/common.hpp"

namespace zv {

// Nodes/weights of n-point Gauss-Legendre quadrature on [-1, 1].
// Computed once per n via Newton iteration on P_n and cached.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

struct QuadResult {
    Complex value;
    double err_estimate = 0.0;  // change at the last panel doubling
    int refinements = 0;        // doublings applied beyond the initial panel count
};

// Composite Gauss-Legendre integration of f over the real interval [a, b],
// starting from `panels` equal panels and doubling the panel count until the
// result changes by less than abs_tol + rel_tol*|value|, or the refinement
// budget is exhausted (QuadratureError).
QuadResult integrate(const std::function<Complex(double)>& f, double a, double b,
                     int panels = 8, int points_per_panel = 32,
                     double abs_tol = 1e-12, double rel_tol = 1e-11,
                     int max_refine = 12);

}  // namespace zv
