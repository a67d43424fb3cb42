#include "rgp/smallball.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "rgp/rng.hpp"

namespace rgp {

void wilson_interval(long long hits, long long n, double& lo, double& hi) {
  const double z = 1.959963984540054;  // 97.5% normal quantile
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(hits) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = (p + z2 / (2.0 * nn)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
  lo = std::max(0.0, center - half);
  hi = std::min(1.0, center + half);
  // the boundary cases meet the endpoints exactly
  if (hits == 0) lo = 0.0;
  if (hits == n) hi = 1.0;
}

SmallBallEstimate smallball_mc(const GaussianPrior& prior, double epsilon, long long n_paths,
                               std::uint64_t seed, std::size_t grid_size, int batch_size) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("smallball_mc: epsilon must be > 0");
  if (n_paths < 1000) throw std::invalid_argument("smallball_mc: n_paths must be >= 1e3");
  if (batch_size < 1) throw std::invalid_argument("smallball_mc: batch_size must be >= 1");

  const Grid grid = make_grid(grid_size);
  const Eigen::MatrixXd chol = cholesky_with_jitter(prior_covariance_matrix(prior, grid));

  long long hits = 0;
  long long done = 0;
  std::uint64_t batch_index = 0;
  while (done < n_paths) {
    const int m = static_cast<int>(std::min<long long>(batch_size, n_paths - done));
    const Eigen::MatrixXd paths =
        sample_path_matrix(chol, m, mix_seed(seed, 0x5ba11ULL, batch_index));
    for (int j = 0; j < m; ++j)
      if (paths.col(j).cwiseAbs().maxCoeff() <= epsilon) ++hits;
    done += m;
    ++batch_index;
  }

  SmallBallEstimate est;
  if (prior.is_stationary()) {
    est.stationary = true;
    est.family = prior.as_stationary().kernel.family();
    est.c = prior.as_stationary().c;
    est.a = 0.0;
    est.k = -1;
  } else {
    est.stationary = false;
    est.c = prior.as_ibm().c;
    est.a = prior.as_ibm().a;
    est.k = prior.as_ibm().k;
  }
  est.epsilon = epsilon;
  est.n_paths = n_paths;
  est.hits = hits;
  est.grid_size = grid_size;
  est.seed = seed;

  double p_lo = 0.0, p_hi = 0.0;
  wilson_interval(hits, n_paths, p_lo, p_hi);
  est.ci_low = -std::log(p_hi);
  if (hits == 0) {
    est.zero_hits = true;
    est.neg_log_prob = std::log(static_cast<double>(n_paths));
    est.ci_high = std::numeric_limits<double>::infinity();
  } else {
    est.zero_hits = false;
    est.neg_log_prob =
        hits == n_paths ? 0.0
                        : -std::log(static_cast<double>(hits) / static_cast<double>(n_paths));
    est.ci_high = p_lo > 0.0 ? -std::log(p_lo) : std::numeric_limits<double>::infinity();
  }
  return est;
}

namespace {

double bound_predictor(const SmallBallEstimate& e) {
  if (e.stationary)
    return (1.0 / e.c) * std::pow(std::log(1.0 / (e.c * e.epsilon * e.epsilon)), 2);
  const double half_order = e.k + 0.5;
  double pred = std::pow(1.0 / (std::pow(e.c, half_order) * e.epsilon), 1.0 / half_order);
  if (std::isfinite(e.a) && e.k > 0)
    pred += e.k * std::log(1.0 / (std::sqrt(e.a) * e.epsilon));
  return pred;
}

}  // namespace

BoundFit bound_fit(const std::vector<SmallBallEstimate>& estimates) {
  if (estimates.size() < 6) throw std::invalid_argument("bound_fit: need at least 6 estimates");
  const bool stationary = estimates.front().stationary;
  for (const auto& e : estimates) {
    if (e.stationary != stationary)
      throw std::invalid_argument("bound_fit: mixed prior families");
    if (stationary && e.c > 1.0)
      throw std::invalid_argument("bound_fit: stationary bound requires c <= 1");
  }

  BoundFit fit;
  fit.predictor.reserve(estimates.size());
  fit.response.reserve(estimates.size());
  double sxy = 0.0, sxx = 0.0, sy = 0.0;
  for (const auto& e : estimates) {
    const double x = bound_predictor(e);
    const double y = e.neg_log_prob;
    fit.predictor.push_back(x);
    fit.response.push_back(y);
    sxy += x * y;
    sxx += x * x;
    sy += y;
  }
  fit.fitted_constant = sxy / sxx;
  // through-origin convention: R^2 against the uncentered total sum of
  // squares (as in lm(y ~ 0 + x))
  (void)sy;
  double ss_res = 0.0, ss_tot = 0.0;
  for (std::size_t i = 0; i < estimates.size(); ++i) {
    const double r = fit.response[i] - fit.fitted_constant * fit.predictor[i];
    ss_res += r * r;
    ss_tot += fit.response[i] * fit.response[i];
  }
  fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

}  // namespace rgp
