#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "rgp/density.hpp"
#include "rgp/grid.hpp"
#include "rgp/mcmc.hpp"
#include "rgp/prior.hpp"
#include "rgp/truth.hpp"

namespace rgp {

struct RegressionData {
  std::vector<double> design;   // fixed, known points in [0,1]
  Eigen::VectorXd responses;
  double sigma0 = 0.0;          // generating noise sd (simulator-side knowledge)
};

struct ClassificationData {
  std::vector<double> covariates;
  std::vector<int> labels;      // in {0,1}
};

struct PosteriorSummary {
  Setting setting = Setting::Regression;
  std::vector<GridFunction> draws;
  std::vector<double> distances_to_truth;
  std::vector<double> sigma_draws;      // only for the sigma-augmented posterior
  double contraction_radius = 0.0;      // 0.9 quantile of distances
  double distance_median = 0.0;
  double acceptance_rate = 1.0;
  double ess_proxy = 0.0;
  std::uint64_t seed = 0;
};

/// Exact conjugate computation for the fixed-design Gaussian model.
/// Factorizations depend only on (prior, design, sigma, grid) and are
/// reused across response vectors.
class RegressionSolver {
 public:
  RegressionSolver(const GaussianPrior& prior, std::vector<double> design, double sigma,
                   Grid grid);

  const Grid& grid() const { return grid_; }
  double sigma() const { return sigma_; }

  Eigen::VectorXd posterior_mean(const Eigen::VectorXd& y) const;
  const Eigen::MatrixXd& posterior_cov() const { return post_cov_; }

  /// Draws from the posterior on the grid, one per column.
  Eigen::MatrixXd sample(const Eigen::VectorXd& y, int n_draws, std::uint64_t seed) const;

  /// Gaussian marginal log likelihood of the responses.
  double log_marginal(const Eigen::VectorXd& y) const;

 private:
  Grid grid_;
  std::vector<double> design_;
  double sigma_;
  Eigen::LLT<Eigen::MatrixXd> llt_;   // K_dd + sigma^2 I
  Eigen::MatrixXd weights_;           // (K_dd + sigma^2 I)^{-1} K_dg
  Eigen::MatrixXd post_cov_;          // K_gg - K_gd (K_dd + sigma^2 I)^{-1} K_dg
  Eigen::MatrixXd post_chol_;
  double half_log_det_ = 0.0;
};

struct RegressionPosterior {
  GridFunction mean;
  Eigen::MatrixXd cov;
  std::vector<GridFunction> draws;
};

RegressionPosterior regression_posterior(const GaussianPrior& prior, const RegressionData& data,
                                         double sigma, const Grid& grid, int n_draws = 500,
                                         std::uint64_t seed = 0);

/// Unknown noise level: uniform prior over [sigma_lo, sigma_hi]
/// discretized on sigma_grid_size nodes (midpoint rule); node weights are
/// normalized Gaussian marginal likelihoods, draws mix over nodes.
/// Distance to the truth: ||w - w0||_n + |sigma - sigma0|.
PosteriorSummary regression_posterior_sigma(const GaussianPrior& prior,
                                            const RegressionData& data, double sigma_lo,
                                            double sigma_hi, int sigma_grid_size,
                                            const Grid& grid, const SmoothTruth& truth,
                                            int n_draws = 500, std::uint64_t seed = 0);

/// Exponential-link density posterior via the prior-reversible chain;
/// distances are Hellinger to the truth density when a truth is given.
PosteriorSummary density_posterior(const GaussianPrior& prior,
                                   const std::vector<double>& samples,
                                   const McmcConfig& mcmc, const Grid& grid,
                                   const SmoothTruth* truth = nullptr);

/// Logistic-link classification posterior; distances are L2[0,1] between
/// response functions when a truth is given.
PosteriorSummary classification_posterior(const GaussianPrior& prior,
                                          const ClassificationData& data,
                                          const McmcConfig& mcmc, const Grid& grid,
                                          const SmoothTruth* truth = nullptr);

double logistic(double x);

/// ||f||_n-style empirical distance between a grid draw and truth values
/// at the design points (draw interpolated linearly).
double empirical_norm_distance(const GridFunction& draw, const std::vector<double>& design,
                               const std::vector<double>& truth_at_design);

}  // namespace rgp
