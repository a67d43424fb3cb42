#include "rgp/mcmc.hpp"

#include <cmath>
#include <stdexcept>

#include "rgp/rng.hpp"

namespace rgp {

namespace {

double integrated_autocorr(const std::vector<double>& x) {
  const std::size_t n = x.size();
  if (n < 10) return 1.0;
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (double v : x) var += (v - mean) * (v - mean);
  var /= static_cast<double>(n);
  if (var <= 0.0) return 1.0;
  double tau = 1.0;
  for (std::size_t lag = 1; lag < n / 2; ++lag) {
    double acf = 0.0;
    for (std::size_t i = 0; i + lag < n; ++i) acf += (x[i] - mean) * (x[i + lag] - mean);
    acf /= static_cast<double>(n) * var;
    if (acf <= 0.0) break;  // initial positive sequence
    tau += 2.0 * acf;
  }
  return tau;
}

}  // namespace

McmcResult pcn_chain(const Eigen::MatrixXd& prior_chol, const LogLikelihood& loglik,
                     const McmcConfig& config) {
  if (config.chain_length <= config.burn_in)
    throw std::invalid_argument("pcn_chain: chain_length must exceed burn_in");
  if (config.thin < 1) throw std::invalid_argument("pcn_chain: thin must be >= 1");
  if (!(config.beta_init > 0.0 && config.beta_init <= 1.0))
    throw std::invalid_argument("pcn_chain: beta_init must lie in (0,1]");

  const Eigen::Index dim = prior_chol.rows();
  Rng rng(config.seed);
  Eigen::VectorXd z(dim), xi(dim);
  auto prior_draw = [&]() {
    for (Eigen::Index i = 0; i < dim; ++i) z(i) = rng.normal();
    return Eigen::VectorXd(prior_chol.template triangularView<Eigen::Lower>() * z);
  };

  Eigen::VectorXd w = prior_draw();
  double ll = loglik(w);
  double beta = config.beta_init;

  McmcResult result;
  result.mean = Eigen::VectorXd::Zero(dim);
  result.variance = Eigen::VectorXd::Zero(dim);

  const int n_post = config.chain_length - config.burn_in;
  result.draws.reserve(static_cast<std::size_t>(n_post / config.thin + 1));
  std::vector<double> probe;
  probe.reserve(static_cast<std::size_t>(n_post));
  const Eigen::Index probe_idx = dim / 2;

  long long post_accepts = 0;
  for (int iter = 0; iter < config.chain_length; ++iter) {
    xi = prior_draw();
    const Eigen::VectorXd proposal = std::sqrt(1.0 - beta * beta) * w + beta * xi;
    const double ll_prop = loglik(proposal);
    const bool accept = std::log(rng.uniform()) < ll_prop - ll;
    if (accept) {
      w = proposal;
      ll = ll_prop;
    }

    const bool in_burn_in = iter < config.burn_in;
    if (in_burn_in) {
      // Robbins-Monro on log beta with decaying gain, frozen after burn-in
      const double gain = 0.2 / std::pow(1.0 + iter / 50.0, 0.7);
      beta *= std::exp(gain * ((accept ? 1.0 : 0.0) - config.target_acceptance));
      beta = std::min(1.0, std::max(0.01, beta));
    } else {
      post_accepts += accept ? 1 : 0;
      const int post_iter = iter - config.burn_in;
      result.mean += w;
      result.variance += w.cwiseProduct(w);
      probe.push_back(w(probe_idx));
      if (post_iter % config.thin == 0) result.draws.emplace_back(w);
    }
  }

  result.acceptance_rate = static_cast<double>(post_accepts) / static_cast<double>(n_post);
  result.beta_final = beta;
  result.mean /= static_cast<double>(n_post);
  result.variance = result.variance / static_cast<double>(n_post) -
                    result.mean.cwiseProduct(result.mean);
  result.variance = result.variance.cwiseMax(0.0);
  const double tau = integrated_autocorr(probe);
  result.ess_proxy = static_cast<double>(n_post) / tau;
  return result;
}

}  // namespace rgp
