#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace rgp {

using Grid = std::vector<double>;

/// n equispaced points on [0,1], endpoints included. Default resolution
/// for every sampler, posterior and distance in the library.
Grid make_grid(std::size_t n = 256);

void validate_grid(const Grid& grid);

/// A function known by its values on a grid.
struct GridFunction {
  Grid grid;
  std::vector<double> values;

  double at(std::size_t i) const { return values[i]; }
  std::size_t size() const { return grid.size(); }
};

GridFunction make_grid_function(const Grid& grid, const std::vector<double>& values);

/// Piecewise-linear evaluation; clamps outside the grid range.
double interp_linear(const Grid& grid, const std::vector<double>& values, double t);

double trapezoid(const Grid& grid, const std::vector<double>& values);

double sup_norm(const std::vector<double>& values);

double sup_distance(const std::vector<double>& a, const std::vector<double>& b);

/// Empirical q-quantile (linear interpolation between order statistics).
double quantile(std::vector<double> values, double q);

}  // namespace rgp
