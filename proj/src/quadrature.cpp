#include "rgp/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace rgp {

namespace {

GaussLegendre compute_gl(std::size_t n) {
  GaussLegendre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double pi = 3.14159265358979323846;
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double p0 = 0.0, p1 = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      p0 = 1.0;
      p1 = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      const double dp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    // recompute derivative at the converged node
    p0 = 1.0;
    p1 = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
    }
    const double dp = n * (x * p0 - p1) / (x * x - 1.0);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace

const GaussLegendre& gauss_legendre(std::size_t n) {
  if (n == 0) throw std::invalid_argument("GL order must be >= 1");
  static std::map<std::size_t, GaussLegendre> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gl(n)).first;
  return it->second;
}

double gl_integrate(const std::function<double(double)>& f, double a, double b, std::size_t n) {
  const GaussLegendre& rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return s * half;
}

void gl_map(std::size_t n, double a, double b, std::vector<double>& x, std::vector<double>& w) {
  const GaussLegendre& rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  x.resize(n);
  w.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = mid + half * rule.nodes[i];
    w[i] = half * rule.weights[i];
  }
}

namespace {

double simpson(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                            double fa, double fm, double fb, double whole, double tol,
                            int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth <= 0) throw std::runtime_error("adaptive_simpson: depth exhausted");
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = simpson(fa, fm, fb, b - a);
  return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, abs_tol, max_depth);
}

double gl_refine(const std::function<double(double)>& f, double a, double b, double rel_tol,
                 std::size_t start_panels, std::size_t points_per_panel,
                 std::size_t max_panels) {
  auto composite = [&](std::size_t panels) {
    double s = 0.0;
    const double h = (b - a) / static_cast<double>(panels);
    for (std::size_t p = 0; p < panels; ++p)
      s += gl_integrate(f, a + p * h, a + (p + 1) * h, points_per_panel);
    return s;
  };
  double prev = composite(start_panels);
  for (std::size_t panels = start_panels * 2; panels <= max_panels; panels *= 2) {
    const double cur = composite(panels);
    if (std::abs(cur - prev) <= rel_tol * (std::abs(cur) + 1e-300) + 1e-14) return cur;
    prev = cur;
  }
  throw std::runtime_error("gl_refine: no convergence");
}

}  // namespace rgp
