#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <variant>
#include <vector>

#include "rgp/grid.hpp"
#include "rgp/spectral.hpp"

namespace rgp {

/// Stationary process rescaled in time: cov(s,t) = phi((s-t)/c).
struct RescaledStationary {
  StationaryKernel kernel;
  double c;
};

/// k-fold integrated Brownian motion, time-rescaled by c, plus an
/// independent random polynomial of degree k scaled by 1/sqrt(a).
/// a == +infinity drops the polynomial part (pure integrated BM).
struct ModifiedIbm {
  int k;
  double c;
  double a;
};

/// Covariance of the k-fold integrated Brownian motion,
/// E (I^k B)_s (I^k B)_t = int_0^{s ^ t} (s-u)^k (t-u)^k du / (k!)^2.
/// Closed form for k in {0,1}; adaptive quadrature (abs tol 1e-12) for
/// k in {2,3,4}. Rejects negative arguments and k outside [0,4].
double ibm_covariance(int k, double s, double t);

class GaussianPrior {
 public:
  explicit GaussianPrior(RescaledStationary stationary);
  explicit GaussianPrior(ModifiedIbm ibm);

  static GaussianPrior stationary(SpectralFamily family, double c);
  static GaussianPrior modified_ibm(int k, double c, double a);

  bool is_stationary() const { return std::holds_alternative<RescaledStationary>(variant_); }
  const RescaledStationary& as_stationary() const;
  const ModifiedIbm& as_ibm() const;

  double scale() const;

  /// Same family with the scaling constant replaced by c_new.
  GaussianPrior rescaled(double c_new) const;

  double covariance(double s, double t) const;

 private:
  std::variant<RescaledStationary, ModifiedIbm> variant_;
};

struct PathSample {
  Grid grid;
  std::vector<double> values;
  std::uint64_t seed;
};

Eigen::MatrixXd prior_covariance_matrix(const GaussianPrior& prior, const Grid& grid);

/// Lower Cholesky factor with escalating diagonal jitter: starts at
/// 1e-12 * max diagonal, multiplied by 10 up to 1e-6 * max diagonal.
/// Throws if no level succeeds.
Eigen::MatrixXd cholesky_with_jitter(const Eigen::MatrixXd& cov);

/// n_paths zero-mean Gaussian vectors with the prior covariance on the
/// grid, one per column. Deterministic in seed (column j consumes the
/// j-th block of the stream).
Eigen::MatrixXd sample_path_matrix(const GaussianPrior& prior, const Grid& grid,
                                   int n_paths, std::uint64_t seed);

/// Same draw, with a precomputed Cholesky factor.
Eigen::MatrixXd sample_path_matrix(const Eigen::MatrixXd& chol, int n_paths,
                                   std::uint64_t seed);

std::vector<PathSample> sample_paths(const GaussianPrior& prior, const Grid& grid,
                                     int n_paths, std::uint64_t seed);

}  // namespace rgp
