#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rgp/inference.hpp"
#include "rgp/mcmc.hpp"
#include "rgp/scaling.hpp"
#include "rgp/truth.hpp"

namespace rgp {

struct RateFit {
  std::vector<double> n_values;
  std::vector<double> radii;          // mean contraction radius per n
  std::vector<double> median_radii;
  double slope = 0.0;
  double intercept = 0.0;
  double slope_se = 0.0;
  double target_slope = 0.0;          // -alpha / (1 + 2 alpha)
};

/// Ordinary least squares of log radius on log n. alpha, when finite,
/// fills the target slope.
RateFit rate_fit(const std::vector<double>& n_values, const std::vector<double>& radii,
                 double alpha = std::numeric_limits<double>::quiet_NaN());

struct ExperimentConfig {
  Setting setting = Setting::Regression;
  PriorFamilyKind prior_family = PriorFamilyKind::SquaredExponential;
  int k = 1;                           // ModifiedIbm order
  double alpha = 1.0;
  std::vector<double> n_values;
  int replications = 10;
  std::uint64_t seed = 0;
  std::size_t grid_size = 256;
  McmcConfig mcmc;
  std::optional<double> override_c;
  double sigma0 = 0.5;                 // regression noise level
  int posterior_draws = 500;           // exact-posterior settings
  int threads = 0;                     // 0: hardware concurrency
};

struct CellResult {
  double n = 0.0;
  int replication = 0;
  double c_used = 0.0;
  double radius = 0.0;
  double median = 0.0;
  double acceptance_rate = 1.0;
  std::uint64_t seed = 0;
};

struct ExperimentResult {
  RateFit fit;
  std::vector<CellResult> cells;
};

/// Full contraction-rate harness: per (n, replication) generate data from
/// the truth, scale the prior by the rule (or the override), run the
/// matching posterior, record the contraction radius; aggregate the
/// per-n mean radii into a log-log rate fit. Deterministic in
/// (seed, config); cells run concurrently with derived seeds.
ExperimentResult contraction_experiment(const ExperimentConfig& config);

}  // namespace rgp
