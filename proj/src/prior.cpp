#include "rgp/prior.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "rgp/quadrature.hpp"
#include "rgp/rng.hpp"

namespace rgp {

double ibm_covariance(int k, double s, double t) {
  if (s < 0.0 || t < 0.0) throw std::invalid_argument("ibm_covariance: s,t must be >= 0");
  if (k < 0 || k > 4) throw std::invalid_argument("ibm_covariance: k outside supported range [0,4]");
  const double m = std::min(s, t);
  if (m == 0.0) return 0.0;
  switch (k) {
    case 0:
      return m;
    case 1:
      // int_0^m (s-u)(t-u) du
      return s * t * m - 0.5 * (s + t) * m * m + m * m * m / 3.0;
    default: {
      double kfact = 1.0;
      for (int i = 2; i <= k; ++i) kfact *= i;
      auto f = [&](double u) { return std::pow(s - u, k) * std::pow(t - u, k); };
      return adaptive_simpson(f, 0.0, m, 1e-12) / (kfact * kfact);
    }
  }
}

GaussianPrior::GaussianPrior(RescaledStationary stationary) : variant_(std::move(stationary)) {
  if (!(as_stationary().c > 0.0)) throw std::invalid_argument("scaling constant must be > 0");
}

GaussianPrior::GaussianPrior(ModifiedIbm ibm) : variant_(ibm) {
  const ModifiedIbm& m = as_ibm();
  if (m.k < 0 || m.k > 4) throw std::invalid_argument("k outside supported range [0,4]");
  if (!(m.c > 0.0)) throw std::invalid_argument("scaling constant must be > 0");
  if (!(m.a > 0.0)) throw std::invalid_argument("a must be > 0");
}

GaussianPrior GaussianPrior::stationary(SpectralFamily family, double c) {
  return GaussianPrior(RescaledStationary{StationaryKernel(family), c});
}

GaussianPrior GaussianPrior::modified_ibm(int k, double c, double a) {
  return GaussianPrior(ModifiedIbm{k, c, a});
}

const RescaledStationary& GaussianPrior::as_stationary() const {
  return std::get<RescaledStationary>(variant_);
}

const ModifiedIbm& GaussianPrior::as_ibm() const { return std::get<ModifiedIbm>(variant_); }

double GaussianPrior::scale() const {
  return is_stationary() ? as_stationary().c : as_ibm().c;
}

GaussianPrior GaussianPrior::rescaled(double c_new) const {
  if (!(c_new > 0.0)) throw std::invalid_argument("rescale: c_new must be > 0");
  if (is_stationary()) {
    RescaledStationary copy = as_stationary();
    copy.c = c_new;
    return GaussianPrior(copy);
  }
  ModifiedIbm copy = as_ibm();
  copy.c = c_new;
  return GaussianPrior(copy);
}

double GaussianPrior::covariance(double s, double t) const {
  if (is_stationary()) {
    const RescaledStationary& st = as_stationary();
    return st.kernel.phi((s - t) / st.c);
  }
  const ModifiedIbm& m = as_ibm();
  double cov = ibm_covariance(m.k, s / m.c, t / m.c);
  if (std::isfinite(m.a)) {
    double term = 0.0;
    double ifact = 1.0;
    for (int i = 0; i <= m.k; ++i) {
      if (i > 0) ifact *= i;
      term += std::pow(s * t, i) / (ifact * ifact);
    }
    cov += term / m.a;
  }
  return cov;
}

Eigen::MatrixXd prior_covariance_matrix(const GaussianPrior& prior, const Grid& grid) {
  validate_grid(grid);
  const auto n = static_cast<Eigen::Index>(grid.size());
  Eigen::MatrixXd cov(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double v = prior.covariance(grid[static_cast<std::size_t>(i)],
                                        grid[static_cast<std::size_t>(j)]);
      cov(i, j) = v;
      cov(j, i) = v;
    }
  }
  return cov;
}

Eigen::MatrixXd cholesky_with_jitter(const Eigen::MatrixXd& cov) {
  const double max_diag = cov.diagonal().maxCoeff();
  const double base = max_diag > 0.0 ? max_diag : 1.0;
  for (double level = 1e-12; level <= 1.000001e-6; level *= 10.0) {
    Eigen::MatrixXd jittered = cov;
    jittered.diagonal().array() += level * base;
    Eigen::LLT<Eigen::MatrixXd> llt(jittered);
    if (llt.info() == Eigen::Success) return llt.matrixL();
  }
  throw std::runtime_error("cholesky_with_jitter: factorization failed at maximal jitter");
}

Eigen::MatrixXd sample_path_matrix(const Eigen::MatrixXd& chol, int n_paths,
                                   std::uint64_t seed) {
  if (n_paths < 1) throw std::invalid_argument("n_paths must be >= 1");
  const Eigen::Index n = chol.rows();
  Rng rng(seed);
  Eigen::MatrixXd z(n, n_paths);
  for (Eigen::Index j = 0; j < n_paths; ++j)
    for (Eigen::Index i = 0; i < n; ++i) z(i, j) = rng.normal();
  return chol.template triangularView<Eigen::Lower>() * z;
}

Eigen::MatrixXd sample_path_matrix(const GaussianPrior& prior, const Grid& grid,
                                   int n_paths, std::uint64_t seed) {
  const Eigen::MatrixXd chol = cholesky_with_jitter(prior_covariance_matrix(prior, grid));
  return sample_path_matrix(chol, n_paths, seed);
}

std::vector<PathSample> sample_paths(const GaussianPrior& prior, const Grid& grid,
                                     int n_paths, std::uint64_t seed) {
  const Eigen::MatrixXd paths = sample_path_matrix(prior, grid, n_paths, seed);
  std::vector<PathSample> out;
  out.reserve(static_cast<std::size_t>(n_paths));
  for (int j = 0; j < n_paths; ++j) {
    PathSample p;
    p.grid = grid;
    p.seed = seed;
    p.values.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
      p.values[i] = paths(static_cast<Eigen::Index>(i), j);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace rgp
