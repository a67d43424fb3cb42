#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

namespace rgp {

struct McmcConfig {
  int chain_length = 20000;
  int burn_in = 5000;
  int thin = 30;
  double beta_init = 0.5;
  double target_acceptance = 0.25;
  std::uint64_t seed = 0;
};

struct McmcResult {
  std::vector<Eigen::VectorXd> draws;   // thinned post-burn-in states
  double acceptance_rate = 0.0;         // post-burn-in
  double beta_final = 0.0;
  double ess_proxy = 0.0;               // N / tau_int of a probe coordinate
  Eigen::VectorXd mean;                 // over all post-burn-in states
  Eigen::VectorXd variance;
};

using LogLikelihood = std::function<double(const Eigen::VectorXd&)>;

/// Prior-reversible autoregressive chain on the grid coefficients:
/// proposal w' = sqrt(1 - beta^2) w + beta xi with xi a fresh prior draw
/// (xi = chol z), accepted with probability min(1, exp(ll(w') - ll(w))).
/// beta adapts toward the target acceptance during burn-in (multiplicative
/// updates on 50-iteration windows, clamped to [0.01, 1]), then freezes.
McmcResult pcn_chain(const Eigen::MatrixXd& prior_chol, const LogLikelihood& loglik,
                     const McmcConfig& config);

}  // namespace rgp
