#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace rgp {

/// Gauss-Legendre rule on [-1,1]. Nodes by Newton iteration on P_n with
/// the asymptotic cosine initial guess; cached per order.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GaussLegendre& gauss_legendre(std::size_t n);

/// Integrate f over [a,b] with an n-point Gauss-Legendre rule.
double gl_integrate(const std::function<double(double)>& f, double a, double b, std::size_t n);

/// Same rule, mapped nodes exposed for batch evaluation.
void gl_map(std::size_t n, double a, double b, std::vector<double>& x, std::vector<double>& w);

/// Adaptive Simpson to absolute tolerance. Throws if the recursion depth
/// is exhausted before the tolerance is met.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth = 40);

/// Doubles the panel count of a composite GL rule until two successive
/// refinements agree to rel_tol (with a small absolute floor). Throws on
/// non-convergence.
double gl_refine(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, std::size_t start_panels = 8,
                 std::size_t points_per_panel = 16, std::size_t max_panels = 1 << 14);

}  // namespace rgp
