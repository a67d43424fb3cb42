#include "rgp/grid.hpp"

#include <algorithm>
#include <cmath>

namespace rgp {

Grid make_grid(std::size_t n) {
  if (n < 1) throw std::invalid_argument("grid size must be >= 1");
  Grid g(n);
  if (n == 1) {
    g[0] = 0.0;
    return g;
  }
  for (std::size_t i = 0; i < n; ++i) g[i] = static_cast<double>(i) / static_cast<double>(n - 1);
  return g;
}

void validate_grid(const Grid& grid) {
  if (grid.empty()) throw std::invalid_argument("grid must be nonempty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0 && grid[i] <= 1.0))
      throw std::invalid_argument("grid point outside [0,1]");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw std::invalid_argument("grid must be strictly increasing");
  }
}

GridFunction make_grid_function(const Grid& grid, const std::vector<double>& values) {
  if (grid.size() != values.size())
    throw std::invalid_argument("grid/value length mismatch");
  return GridFunction{grid, values};
}

double interp_linear(const Grid& grid, const std::vector<double>& values, double t) {
  if (grid.size() != values.size() || grid.empty())
    throw std::invalid_argument("grid/value length mismatch");
  if (t <= grid.front()) return values.front();
  if (t >= grid.back()) return values.back();
  auto it = std::upper_bound(grid.begin(), grid.end(), t);
  const std::size_t hi = static_cast<std::size_t>(it - grid.begin());
  const std::size_t lo = hi - 1;
  const double w = (t - grid[lo]) / (grid[hi] - grid[lo]);
  return (1.0 - w) * values[lo] + w * values[hi];
}

double trapezoid(const Grid& grid, const std::vector<double>& values) {
  if (grid.size() != values.size())
    throw std::invalid_argument("grid/value length mismatch");
  double s = 0.0;
  for (std::size_t i = 1; i < grid.size(); ++i)
    s += 0.5 * (values[i] + values[i - 1]) * (grid[i] - grid[i - 1]);
  return s;
}

double sup_norm(const std::vector<double>& values) {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

double sup_distance(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw std::invalid_argument("quantile of empty set");
  if (q < 0.0 || q > 1.0) throw std::invalid_argument("quantile level outside [0,1]");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= values.size()) return values.back();
  const double w = pos - static_cast<double>(lo);
  return (1.0 - w) * values[lo] + w * values[lo + 1];
}

}  // namespace rgp
