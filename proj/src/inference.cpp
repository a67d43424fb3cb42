#include "rgp/inference.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "rgp/rng.hpp"

namespace rgp {

namespace {

constexpr double kLogTwoPi = 1.8378770664093454836;

Eigen::MatrixXd cross_covariance(const GaussianPrior& prior, const Grid& grid,
                                 const std::vector<double>& design) {
  Eigen::MatrixXd k(grid.size(), design.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = 0; j < design.size(); ++j)
      k(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          prior.covariance(grid[i], design[j]);
  return k;
}

Eigen::MatrixXd design_covariance(const GaussianPrior& prior,
                                  const std::vector<double>& design) {
  const auto n = static_cast<Eigen::Index>(design.size());
  Eigen::MatrixXd k(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double v = prior.covariance(design[static_cast<std::size_t>(i)],
                                        design[static_cast<std::size_t>(j)]);
      k(i, j) = v;
      k(j, i) = v;
    }
  return k;
}

void summarize_distances(PosteriorSummary& summary) {
  if (summary.distances_to_truth.empty()) {
    summary.contraction_radius = std::numeric_limits<double>::quiet_NaN();
    summary.distance_median = std::numeric_limits<double>::quiet_NaN();
    return;
  }
  summary.contraction_radius = quantile(summary.distances_to_truth, 0.9);
  summary.distance_median = quantile(summary.distances_to_truth, 0.5);
}

}  // namespace

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

double empirical_norm_distance(const GridFunction& draw, const std::vector<double>& design,
                               const std::vector<double>& truth_at_design) {
  if (design.size() != truth_at_design.size())
    throw std::invalid_argument("empirical_norm_distance: length mismatch");
  if (design.empty()) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < design.size(); ++i) {
    const double d = interp_linear(draw.grid, draw.values, design[i]) - truth_at_design[i];
    s += d * d;
  }
  return std::sqrt(s / static_cast<double>(design.size()));
}

RegressionSolver::RegressionSolver(const GaussianPrior& prior, std::vector<double> design,
                                   double sigma, Grid grid)
    : grid_(std::move(grid)), design_(std::move(design)), sigma_(sigma) {
  if (!(sigma_ > 0.0)) throw std::invalid_argument("RegressionSolver: sigma must be > 0");
  validate_grid(grid_);
  for (double t : design_)
    if (t < 0.0 || t > 1.0)
      throw std::invalid_argument("RegressionSolver: design point outside [0,1]");

  const Eigen::MatrixXd k_gg = prior_covariance_matrix(prior, grid_);
  if (design_.empty()) {
    post_cov_ = k_gg;
    post_chol_ = cholesky_with_jitter(post_cov_);
    return;
  }

  Eigen::MatrixXd k_dd = design_covariance(prior, design_);
  k_dd.diagonal().array() += sigma_ * sigma_;
  llt_.compute(k_dd);
  if (llt_.info() != Eigen::Success)
    throw std::runtime_error("RegressionSolver: (K_dd + sigma^2 I) not positive definite");
  half_log_det_ = llt_.matrixLLT().diagonal().array().log().sum();

  const Eigen::MatrixXd k_gd = cross_covariance(prior, grid_, design_);
  weights_ = llt_.solve(k_gd.transpose());
  post_cov_ = k_gg - k_gd * weights_;
  post_chol_ = cholesky_with_jitter(post_cov_);
}

Eigen::VectorXd RegressionSolver::posterior_mean(const Eigen::VectorXd& y) const {
  if (design_.empty())
    return Eigen::VectorXd::Zero(static_cast<Eigen::Index>(grid_.size()));
  if (y.size() != static_cast<Eigen::Index>(design_.size()))
    throw std::invalid_argument("posterior_mean: response length mismatch");
  return weights_.transpose() * y;
}

Eigen::MatrixXd RegressionSolver::sample(const Eigen::VectorXd& y, int n_draws,
                                         std::uint64_t seed) const {
  const Eigen::VectorXd mean = posterior_mean(y);
  Eigen::MatrixXd draws = sample_path_matrix(post_chol_, n_draws, seed);
  draws.colwise() += mean;
  return draws;
}

double RegressionSolver::log_marginal(const Eigen::VectorXd& y) const {
  if (design_.empty()) return 0.0;
  const Eigen::VectorXd alpha = llt_.solve(y);
  const double n = static_cast<double>(design_.size());
  return -0.5 * y.dot(alpha) - half_log_det_ - 0.5 * n * kLogTwoPi;
}

RegressionPosterior regression_posterior(const GaussianPrior& prior, const RegressionData& data,
                                         double sigma, const Grid& grid, int n_draws,
                                         std::uint64_t seed) {
  RegressionSolver solver(prior, data.design, sigma, grid);
  RegressionPosterior post;
  const Eigen::VectorXd mean = solver.posterior_mean(data.responses);
  post.mean.grid = grid;
  post.mean.values.assign(mean.data(), mean.data() + mean.size());
  post.cov = solver.posterior_cov();
  if (n_draws > 0) {
    const Eigen::MatrixXd draws = solver.sample(data.responses, n_draws, seed);
    post.draws.reserve(static_cast<std::size_t>(n_draws));
    for (int j = 0; j < n_draws; ++j) {
      GridFunction f;
      f.grid = grid;
      f.values.assign(draws.col(j).data(), draws.col(j).data() + draws.rows());
      post.draws.push_back(std::move(f));
    }
  }
  return post;
}

PosteriorSummary regression_posterior_sigma(const GaussianPrior& prior,
                                            const RegressionData& data, double sigma_lo,
                                            double sigma_hi, int sigma_grid_size,
                                            const Grid& grid, const SmoothTruth& truth,
                                            int n_draws, std::uint64_t seed) {
  if (!(0.0 < sigma_lo && sigma_lo < sigma_hi))
    throw std::invalid_argument("regression_posterior_sigma: need 0 < sigma_lo < sigma_hi");
  if (sigma_grid_size < 1)
    throw std::invalid_argument("regression_posterior_sigma: sigma_grid_size must be >= 1");
  if (data.sigma0 > 0.0 && (data.sigma0 < sigma_lo || data.sigma0 > sigma_hi))
    throw std::invalid_argument("regression_posterior_sigma: sigma0 outside prior interval");

  // midpoint discretization of the uniform prior
  std::vector<double> nodes(static_cast<std::size_t>(sigma_grid_size));
  const double width = (sigma_hi - sigma_lo) / sigma_grid_size;
  for (int j = 0; j < sigma_grid_size; ++j) nodes[static_cast<std::size_t>(j)] = sigma_lo + (j + 0.5) * width;

  std::vector<RegressionSolver> solvers;
  solvers.reserve(nodes.size());
  std::vector<double> log_weights(nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    solvers.emplace_back(prior, data.design, nodes[j], grid);
    log_weights[j] = solvers[j].log_marginal(data.responses);
  }
  double wmax = log_weights[0];
  for (double lw : log_weights) wmax = std::max(wmax, lw);
  std::vector<double> weights(nodes.size());
  double wsum = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    weights[j] = std::exp(log_weights[j] - wmax);
    wsum += weights[j];
  }
  for (double& w : weights) w /= wsum;

  std::vector<double> truth_at_design(data.design.size());
  for (std::size_t i = 0; i < data.design.size(); ++i)
    truth_at_design[i] = truth.value(data.design[i]);

  PosteriorSummary summary;
  summary.setting = Setting::Regression;
  summary.seed = seed;
  summary.acceptance_rate = 1.0;
  summary.ess_proxy = n_draws;
  summary.draws.reserve(static_cast<std::size_t>(n_draws));
  summary.sigma_draws.reserve(static_cast<std::size_t>(n_draws));
  summary.distances_to_truth.reserve(static_cast<std::size_t>(n_draws));

  Rng rng(seed);
  for (int d = 0; d < n_draws; ++d) {
    const double u = rng.uniform();
    std::size_t node = 0;
    double acc = 0.0;
    for (std::size_t j = 0; j < weights.size(); ++j) {
      acc += weights[j];
      if (u <= acc || j + 1 == weights.size()) {
        node = j;
        break;
      }
    }
    const Eigen::MatrixXd draw =
        solvers[node].sample(data.responses, 1, mix_seed(seed, 0xd5a1ULL, static_cast<std::uint64_t>(d)));
    GridFunction f;
    f.grid = grid;
    f.values.assign(draw.col(0).data(), draw.col(0).data() + draw.rows());
    const double dist = empirical_norm_distance(f, data.design, truth_at_design) +
                        std::abs(nodes[node] - data.sigma0);
    summary.draws.push_back(std::move(f));
    summary.sigma_draws.push_back(nodes[node]);
    summary.distances_to_truth.push_back(dist);
  }
  summarize_distances(summary);
  return summary;
}

namespace {

struct InterpWeights {
  std::vector<std::size_t> idx;
  std::vector<double> frac;
};

InterpWeights interp_weights(const Grid& grid, const std::vector<double>& points) {
  InterpWeights w;
  w.idx.resize(points.size());
  w.frac.resize(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double t = std::min(std::max(points[i], grid.front()), grid.back());
    std::size_t hi = 1;
    while (hi + 1 < grid.size() && grid[hi] < t) ++hi;
    const std::size_t lo = hi - 1;
    w.idx[i] = lo;
    w.frac[i] = (t - grid[lo]) / (grid[hi] - grid[lo]);
  }
  return w;
}

PosteriorSummary run_grid_chain(const GaussianPrior& prior, const Grid& grid,
                                const LogLikelihood& loglik, const McmcConfig& mcmc,
                                Setting setting) {
  const Eigen::MatrixXd chol = cholesky_with_jitter(prior_covariance_matrix(prior, grid));
  const McmcResult chain = pcn_chain(chol, loglik, mcmc);
  if (chain.acceptance_rate <= 0.0)
    throw std::runtime_error("posterior chain: zero acceptance after adaptation");

  PosteriorSummary summary;
  summary.setting = setting;
  summary.seed = mcmc.seed;
  summary.acceptance_rate = chain.acceptance_rate;
  summary.ess_proxy = chain.ess_proxy;
  summary.draws.reserve(chain.draws.size());
  for (const Eigen::VectorXd& w : chain.draws) {
    GridFunction f;
    f.grid = grid;
    f.values.assign(w.data(), w.data() + w.size());
    summary.draws.push_back(std::move(f));
  }
  return summary;
}

}  // namespace

PosteriorSummary density_posterior(const GaussianPrior& prior,
                                   const std::vector<double>& samples,
                                   const McmcConfig& mcmc, const Grid& grid,
                                   const SmoothTruth* truth) {
  if (mcmc.chain_length < 10000)
    throw std::invalid_argument("density_posterior: chain length must be >= 1e4");
  const InterpWeights iw = interp_weights(grid, samples);
  const auto n = static_cast<double>(samples.size());

  LogLikelihood loglik = [&grid, iw, n](const Eigen::VectorXd& w) {
    // log p_w(x) = w(x) - log int e^w ; trapezoid normalizer
    double wmax = w.maxCoeff();
    double z = 0.0;
    for (std::size_t i = 1; i < grid.size(); ++i)
      z += 0.5 * (std::exp(w(static_cast<Eigen::Index>(i)) - wmax) +
                  std::exp(w(static_cast<Eigen::Index>(i - 1)) - wmax)) *
           (grid[i] - grid[i - 1]);
    const double log_z = std::log(z) + wmax;
    double s = 0.0;
    for (std::size_t i = 0; i < iw.idx.size(); ++i) {
      const auto lo = static_cast<Eigen::Index>(iw.idx[i]);
      s += (1.0 - iw.frac[i]) * w(lo) + iw.frac[i] * w(lo + 1);
    }
    return s - n * log_z;
  };

  PosteriorSummary summary = run_grid_chain(prior, grid, loglik, mcmc, Setting::Density);
  if (truth != nullptr) {
    const DensityModel p0 = make_density(GridFunction{grid, truth->values_on(grid)});
    summary.distances_to_truth.reserve(summary.draws.size());
    for (const GridFunction& f : summary.draws)
      summary.distances_to_truth.push_back(hellinger(make_density(f), p0));
    summarize_distances(summary);
  }
  return summary;
}

PosteriorSummary classification_posterior(const GaussianPrior& prior,
                                          const ClassificationData& data,
                                          const McmcConfig& mcmc, const Grid& grid,
                                          const SmoothTruth* truth) {
  if (mcmc.chain_length < 10000)
    throw std::invalid_argument("classification_posterior: chain length must be >= 1e4");
  if (data.covariates.size() != data.labels.size())
    throw std::invalid_argument("classification_posterior: covariate/label length mismatch");
  const InterpWeights iw = interp_weights(grid, data.covariates);

  LogLikelihood loglik = [iw, &data](const Eigen::VectorXd& w) {
    double s = 0.0;
    for (std::size_t i = 0; i < iw.idx.size(); ++i) {
      const auto lo = static_cast<Eigen::Index>(iw.idx[i]);
      const double wx = (1.0 - iw.frac[i]) * w(lo) + iw.frac[i] * w(lo + 1);
      // stable log Psi / log(1 - Psi)
      const double log_psi = wx >= 0.0 ? -std::log1p(std::exp(-wx)) : wx - std::log1p(std::exp(wx));
      const double log_one_minus = log_psi - wx;
      s += data.labels[i] == 1 ? log_psi : log_one_minus;
    }
    return s;
  };

  PosteriorSummary summary = run_grid_chain(prior, grid, loglik, mcmc, Setting::Classification);
  if (truth != nullptr) {
    std::vector<double> f0(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) f0[i] = logistic(truth->value(grid[i]));
    summary.distances_to_truth.reserve(summary.draws.size());
    for (const GridFunction& f : summary.draws) {
      std::vector<double> sq(grid.size());
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const double d = logistic(f.values[i]) - f0[i];
        sq[i] = d * d;
      }
      summary.distances_to_truth.push_back(std::sqrt(trapezoid(grid, sq)));
    }
    summarize_distances(summary);
  }
  return summary;
}

}  // namespace rgp
