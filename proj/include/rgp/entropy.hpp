#pragma once

#include <vector>

#include "rgp/prior.hpp"
#include "rgp/rkhs.hpp"

namespace rgp {

/// Piecewise-polynomial net over the unit ball of a rescaled stationary
/// RKHS: pieces of width d, polynomials of order k_order centered at the
/// right endpoints, coefficient j on the grid {0, +-eta_j, ...} clamped to
/// [-bound_j, bound_j]. log_cardinality is the exact count of coefficient
/// matrices.
struct EntropyNet {
  double c = 0.0;
  double epsilon = 0.0;
  double d = 0.0;
  int k_order = 0;
  std::size_t pieces = 0;
  std::vector<double> eta;
  std::vector<double> bound;
  double log_cardinality = 0.0;
  SpectralFamily family = SpectralFamily::GaussianSpectral;
};

/// Builds the net: d = delta c / 4, k minimal with
/// sqrt(alpha_{2k}) (d/c)^k / k! <= epsilon (capped at 60), grid spacings
/// eta_j = epsilon j! / (d^j k), coefficient bounds sqrt(alpha_{2j}) / c^j.
EntropyNet entropy_net(const GaussianPrior& prior, double epsilon);

/// True iff a net member lies within 2 epsilon of the element in grid
/// sup-norm. The member searched is the nearest one in the net's product
/// grid: each coefficient rounds the element's Taylor data at the piece
/// right endpoints. Element must have RKHS norm <= 1.
bool net_covers(const EntropyNet& net, const KernelSections& element, const Grid& grid);

/// The candidate member itself (for diagnostics): piecewise polynomial
/// values on the grid.
std::vector<double> net_candidate_values(const EntropyNet& net, const KernelSections& element,
                                         const Grid& grid);

/// Diagnostics CSV: one row (c, epsilon, d, k_order, log_cardinality) per net.
std::string entropy_net_csv(const std::vector<EntropyNet>& nets);

/// Approximation diagnostics CSV: one row (c, sup_error, rkhs_norm_sq) per entry.
std::string approx_diagnostics_csv(const std::vector<double>& c_values,
                                   const std::vector<ApproxResult>& results);

}  // namespace rgp
