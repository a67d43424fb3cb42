#pragma once

#include <cstdint>
#include <vector>

#include "rgp/prior.hpp"

namespace rgp {

struct SmallBallEstimate {
  double c = 0.0;
  double a = 0.0;              // +inf for pure integrated BM
  int k = -1;                  // -1 for stationary families
  SpectralFamily family = SpectralFamily::GaussianSpectral;
  bool stationary = true;
  double epsilon = 0.0;
  long long n_paths = 0;
  long long hits = 0;
  double neg_log_prob = 0.0;   // -log(hits/n_paths); lower bound log(n_paths) when hits == 0
  double ci_low = 0.0;         // 95% Wilson interval mapped to -log p
  double ci_high = 0.0;
  bool zero_hits = false;
  std::size_t grid_size = 0;
  std::uint64_t seed = 0;
};

/// Monte Carlo small-deviation estimate: counts grid paths with
/// sup |value| <= epsilon. Paths are drawn in fixed-size batches with
/// per-batch derived seeds; the batch size is part of the layout and the
/// result is deterministic in (seed, batch_size).
SmallBallEstimate smallball_mc(const GaussianPrior& prior, double epsilon, long long n_paths,
                               std::uint64_t seed, std::size_t grid_size = 256,
                               int batch_size = 4096);

struct BoundFit {
  double fitted_constant = 0.0;
  double r_squared = 0.0;
  std::vector<double> predictor;
  std::vector<double> response;
};

/// Through-origin regression of neg_log_prob on the theoretical bound
/// shape: (1/c) log(1/(c eps^2))^2 for stationary estimates,
/// (1/(c^{k+1/2} eps))^{1/(k+1/2)} + k log(1/(sqrt(a) eps)) for modified
/// integrated BM. R^2 uses the centered total sum of squares. Requires
/// at least 6 points from a single family.
BoundFit bound_fit(const std::vector<SmallBallEstimate>& estimates);

/// 95% Wilson score interval for a binomial proportion.
void wilson_interval(long long hits, long long n, double& lo, double& hi);

}  // namespace rgp
