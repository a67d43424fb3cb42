#include "rgp/entropy.hpp"

#include <cmath>
#include <stdexcept>

#include "rgp/csv.hpp"

namespace rgp {

EntropyNet entropy_net(const GaussianPrior& prior, double epsilon) {
  if (!prior.is_stationary())
    throw std::invalid_argument("entropy_net: rescaled stationary prior required");
  if (!(epsilon > 0.0 && epsilon < 0.5))
    throw std::invalid_argument("entropy_net: epsilon must lie in (0, 1/2)");
  const RescaledStationary& st = prior.as_stationary();
  const SpectralMeasure& mu = st.kernel.spectral();
  const double c = st.c;
  const double d = mu.delta() * c / 4.0;

  // minimal k with sqrt(alpha_{2k}) (d/c)^k / k! <= epsilon
  int k = 0;
  double kfact = 1.0;
  const double ratio = d / c;
  for (int j = 1; j <= 60; ++j) {
    kfact *= j;
    if (std::sqrt(mu.abs_moment_even(j)) * std::pow(ratio, j) / kfact <= epsilon) {
      k = j;
      break;
    }
  }
  if (k == 0) throw std::runtime_error("entropy_net: no admissible polynomial order <= 60");

  EntropyNet net;
  net.c = c;
  net.epsilon = epsilon;
  net.d = d;
  net.k_order = k;
  net.pieces = static_cast<std::size_t>(std::ceil(1.0 / d));
  net.family = st.kernel.family();
  net.eta.resize(static_cast<std::size_t>(k));
  net.bound.resize(static_cast<std::size_t>(k));

  double log_per_piece = 0.0;
  double jfact = 1.0;
  for (int j = 0; j < k; ++j) {
    if (j > 0) jfact *= j;
    net.eta[static_cast<std::size_t>(j)] = epsilon * jfact / (std::pow(d, j) * k);
    net.bound[static_cast<std::size_t>(j)] = std::sqrt(mu.abs_moment_even(j)) / std::pow(c, j);
    const double count =
        2.0 * std::floor(net.bound[static_cast<std::size_t>(j)] /
                         net.eta[static_cast<std::size_t>(j)]) +
        1.0;
    log_per_piece += std::log(count);
  }
  net.log_cardinality = static_cast<double>(net.pieces) * log_per_piece;
  return net;
}

std::vector<double> net_candidate_values(const EntropyNet& net, const KernelSections& element,
                                         const Grid& grid) {
  const int k = net.k_order;
  const std::size_t pieces = net.pieces;

  // gamma_{i,j}: element Taylor data at the right endpoints, rounded to the grid
  std::vector<std::vector<double>> gamma(pieces, std::vector<double>(static_cast<std::size_t>(k)));
  for (std::size_t i = 0; i < pieces; ++i) {
    const double x = static_cast<double>(i + 1) * net.d;
    for (int j = 0; j < k; ++j) {
      const double f = element.derivative(j, x);
      const double eta = net.eta[static_cast<std::size_t>(j)];
      const double bnd = net.bound[static_cast<std::size_t>(j)];
      double g = std::round(f / eta) * eta;
      const double gmax = std::floor(bnd / eta) * eta;
      if (g > gmax) g = gmax;
      if (g < -gmax) g = -gmax;
      gamma[i][static_cast<std::size_t>(j)] = g;
    }
  }

  std::vector<double> values(grid.size());
  for (std::size_t q = 0; q < grid.size(); ++q) {
    const double t = grid[q];
    // piece index with t in ((i-1)d, id]; t = 0 evaluated through piece 1
    std::size_t i = t <= 0.0 ? 1 : static_cast<std::size_t>(std::ceil(t / net.d));
    if (i < 1) i = 1;
    if (i > pieces) i = pieces;
    const double s = t - static_cast<double>(i) * net.d;
    double acc = 0.0;
    double sj = 1.0;
    double jfact = 1.0;
    for (int j = 0; j < k; ++j) {
      if (j > 0) {
        sj *= s;
        jfact *= j;
      }
      acc += gamma[i - 1][static_cast<std::size_t>(j)] * sj / jfact;
    }
    values[q] = acc;
  }
  return values;
}

bool net_covers(const EntropyNet& net, const KernelSections& element, const Grid& grid) {
  const std::vector<double> candidate = net_candidate_values(net, element, grid);
  const std::vector<double> target = element.values_on(grid);
  const double dist = sup_distance(candidate, target);
  return dist <= 2.0 * net.epsilon * (1.0 + 1e-9);
}

std::string entropy_net_csv(const std::vector<EntropyNet>& nets) {
  CsvWriter csv({"c", "epsilon", "d", "k_order", "log_cardinality"});
  for (const EntropyNet& net : nets) {
    csv.begin_row();
    csv.add(net.c);
    csv.add(net.epsilon);
    csv.add(net.d);
    csv.add(net.k_order);
    csv.add(net.log_cardinality);
  }
  return csv.str();
}

std::string approx_diagnostics_csv(const std::vector<double>& c_values,
                                   const std::vector<ApproxResult>& results) {
  if (c_values.size() != results.size())
    throw std::invalid_argument("approx_diagnostics_csv: length mismatch");
  CsvWriter csv({"c", "sup_error", "rkhs_norm_sq"});
  for (std::size_t i = 0; i < results.size(); ++i) {
    csv.begin_row();
    csv.add(c_values[i]);
    csv.add(results[i].sup_error);
    csv.add(results[i].rkhs_norm_sq);
  }
  return csv.str();
}

}  // namespace rgp
