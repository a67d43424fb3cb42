#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "rgp/grid.hpp"
#include "rgp/prior.hpp"
#include "rgp/truth.hpp"

namespace rgp {

/// RKHS norm of a finite linear combination of kernel sections,
/// sqrt(c' K c) for K the prior covariance on the section points.
/// Quadratic forms below -1e-10 signal a covariance bug and throw;
/// values in [-1e-10, 0] clamp to zero.
double rkhs_norm_finite(const GaussianPrior& prior, const std::vector<double>& points,
                        const std::vector<double>& coeffs);

/// Finite kernel-section combination f(t) = sum_m coeff_m cov(point_m, t),
/// with derivatives through the kernel. Stationary priors only where
/// derivatives are requested.
class KernelSections {
 public:
  KernelSections(GaussianPrior prior, std::vector<double> points, std::vector<double> coeffs);

  double value(double t) const;
  double derivative(int order, double t) const;
  double rkhs_norm() const;
  std::vector<double> values_on(const Grid& grid) const;

  const GaussianPrior& prior() const { return prior_; }
  const std::vector<double>& points() const { return points_; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  /// Same sections rescaled to unit RKHS norm. Throws on the zero element.
  KernelSections normalized() const;

 private:
  GaussianPrior prior_;
  std::vector<double> points_;
  std::vector<double> coeffs_;
};

struct SpectralTransformResult {
  GridFunction function;   // real part of F_c h on the grid
  double norm_bound;       // sqrt( int |h|^2 d mu_c )
};

/// Transform (F_c h)(t) = int e^{-i t l} h(l) d mu_c(l) for a rescaled
/// stationary prior. Gauss-Legendre over the spectral support with the
/// panel count doubled until successive refinements agree to 1e-8.
SpectralTransformResult spectral_transform(
    const GaussianPrior& prior, const std::function<std::complex<double>(double)>& h,
    const Grid& grid);

/// Band-limiting smoothing kernel: psi_hat equals 1/(2 pi) on
/// [-plateau, plateau], vanishes outside [-support, support], with a
/// C-infinity bump taper between. psi itself (and its derivatives) come
/// from inverse-Fourier quadrature over the compact support.
class SmoothingKernelPsi {
 public:
  /// Plateau radius P; the taper vanishes beyond 2P.
  explicit SmoothingKernelPsi(double plateau = 2.0);

  double plateau_radius() const { return plateau_; }
  double support_radius() const { return 2.0 * plateau_; }

  double psi_hat(double lambda) const;
  double psi(double t) const;
  double psi_derivative(int order, double t) const;

  /// Quadrature moment int t^k psi(t) dt over |t| <= tail.
  double moment(int k, double tail = 200.0) const;

 private:
  double plateau_;
};

struct ApproxResult {
  GridFunction approx;
  double sup_error;
  double rkhs_norm_sq;
  double bandwidth;
};

/// Smoothing approximation of a truth inside the RKHS of a rescaled
/// stationary prior: the function (1/b)(psi_b * w) for bandwidth b,
/// evaluated through the Fourier multiplier 2 pi F_c(w_hat psi_hat_b /
/// phi_hat_c), with RKHS norm-squared
/// (2 pi)^2 c^{-1} int |w_hat(l)|^2 psi_hat(b l)^2 / phi_hat(c l) dl.
/// The canonical construction ties the bandwidth to the prior scale
/// (b == c); concentration estimates search over bandwidths.
ApproxResult holder_approx(const SmoothTruth& truth, double beta, double c,
                           const StationaryKernel& kernel, const Grid& grid);

ApproxResult holder_approx_bandwidth(const SmoothTruth& truth, double c,
                                     double bandwidth, const StationaryKernel& kernel,
                                     const Grid& grid);

/// Function with derivatives up to max_order, as needed by the Sobolev norm.
struct CkFunction {
  int max_order;
  std::function<double(double t, int order)> eval;
};

/// Norm of the modified integrated-BM RKHS:
/// sqrt( c^{2k+1} ||h^(k+1)||_2^2 + a sum_{i<=k} h^(i)(0)^2 ),
/// the L2 part by trapezoid quadrature on [0,1].
double sobolev_rkhs_norm(int k, double c, double a, const CkFunction& h,
                         std::size_t quad_points = 2049);

/// Kernel smoothing into the modified integrated-BM RKHS: w * psi_sigma
/// with bandwidth sigma = epsilon^(1/beta), returning the approximant and
/// its squared Sobolev norm. Requires beta <= k+1 and epsilon in (0,1).
ApproxResult ibm_approx(const SmoothTruth& truth, double beta, int k, double c,
                        double a, double epsilon, const Grid& grid);

/// The smoothed truth w * psi_sigma as a CkFunction (derivatives through
/// the kernel); shared by ibm_approx and the concentration search.
CkFunction smoothed_truth(const SmoothTruth& truth, double sigma, int max_order);

}  // namespace rgp
