#include "rgp/density.hpp"

#include <cmath>
#include <stdexcept>

#include "rgp/rng.hpp"

namespace rgp {

DensityModel make_density(const GridFunction& w) {
  if (w.grid.size() != w.values.size() || w.grid.size() < 2)
    throw std::invalid_argument("make_density: bad grid function");
  DensityModel model;
  model.w = w;
  // shift by the max before exponentiating
  double wmax = w.values[0];
  for (double v : w.values) wmax = std::max(wmax, v);
  std::vector<double> e(w.values.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::exp(w.values[i] - wmax);
  const double z = trapezoid(w.grid, e);
  for (double& v : e) v /= z;
  model.p = GridFunction{w.grid, std::move(e)};
  return model;
}

double hellinger(const DensityModel& p, const DensityModel& q) {
  if (p.p.grid != q.p.grid) throw std::invalid_argument("hellinger: grid mismatch");
  std::vector<double> sq(p.p.values.size());
  for (std::size_t i = 0; i < sq.size(); ++i) {
    const double d = std::sqrt(p.p.values[i]) - std::sqrt(q.p.values[i]);
    sq[i] = d * d;
  }
  return std::sqrt(0.5 * trapezoid(p.p.grid, sq));
}

std::vector<double> sample_from_density(const DensityModel& density, int n,
                                        std::uint64_t seed) {
  const Grid& g = density.p.grid;
  const std::vector<double>& p = density.p.values;
  std::vector<double> cdf(g.size(), 0.0);
  for (std::size_t i = 1; i < g.size(); ++i)
    cdf[i] = cdf[i - 1] + 0.5 * (p[i] + p[i - 1]) * (g[i] - g[i - 1]);
  const double total = cdf.back();

  Rng rng(seed);
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    const double u = rng.uniform() * total;
    std::size_t lo = 0, hi = g.size() - 1;
    while (hi - lo > 1) {
      const std::size_t mid = (lo + hi) / 2;
      if (cdf[mid] < u) lo = mid; else hi = mid;
    }
    // solve the piecewise-quadratic CDF within the segment
    const double h = g[hi] - g[lo];
    const double plo = p[lo];
    const double slope = (p[hi] - plo) / h;
    const double target = u - cdf[lo];
    double x;
    if (std::abs(slope) < 1e-14 * (plo + 1.0)) {
      x = plo > 0.0 ? target / plo : 0.5 * h;
    } else {
      const double disc = plo * plo + 2.0 * slope * target;
      x = (-plo + std::sqrt(std::max(0.0, disc))) / slope;
    }
    x = std::min(std::max(x, 0.0), h);
    out[static_cast<std::size_t>(s)] = g[lo] + x;
  }
  return out;
}

}  // namespace rgp
