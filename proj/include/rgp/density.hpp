#pragma once

#include <cstdint>
#include <vector>

#include "rgp/grid.hpp"

namespace rgp {

/// Normalized exponential-link density p = e^w / int_0^1 e^w, with the
/// integral by trapezoid rule on the grid.
struct DensityModel {
  GridFunction w;
  GridFunction p;
};

DensityModel make_density(const GridFunction& w);

/// Hellinger distance sqrt( (1/2) int (sqrt p - sqrt q)^2 ), trapezoid
/// rule; requires a shared grid.
double hellinger(const DensityModel& p, const DensityModel& q);

/// i.i.d. draws from the density by inverse CDF (exact within pieces:
/// the density is piecewise linear between grid nodes).
std::vector<double> sample_from_density(const DensityModel& density, int n,
                                        std::uint64_t seed);

}  // namespace rgp
