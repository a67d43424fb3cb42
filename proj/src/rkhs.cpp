#include "rgp/rkhs.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "rgp/quadrature.hpp"

namespace rgp {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
}  // namespace

double rkhs_norm_finite(const GaussianPrior& prior, const std::vector<double>& points,
                        const std::vector<double>& coeffs) {
  if (points.size() != coeffs.size())
    throw std::invalid_argument("rkhs_norm_finite: points/coeffs length mismatch");
  double q = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j)
      q += coeffs[i] * coeffs[j] * prior.covariance(points[i], points[j]);
  if (q < -1e-10)
    throw std::runtime_error("rkhs_norm_finite: negative quadratic form (covariance bug)");
  return q > 0.0 ? std::sqrt(q) : 0.0;
}

KernelSections::KernelSections(GaussianPrior prior, std::vector<double> points,
                               std::vector<double> coeffs)
    : prior_(std::move(prior)), points_(std::move(points)), coeffs_(std::move(coeffs)) {
  if (points_.size() != coeffs_.size())
    throw std::invalid_argument("KernelSections: points/coeffs length mismatch");
}

double KernelSections::value(double t) const {
  double s = 0.0;
  for (std::size_t m = 0; m < points_.size(); ++m)
    s += coeffs_[m] * prior_.covariance(points_[m], t);
  return s;
}

double KernelSections::derivative(int order, double t) const {
  if (order == 0) return value(t);
  if (!prior_.is_stationary())
    throw std::invalid_argument("KernelSections: derivatives need a stationary prior");
  const RescaledStationary& st = prior_.as_stationary();
  const double cj = std::pow(st.c, order);
  double s = 0.0;
  for (std::size_t m = 0; m < points_.size(); ++m)
    s += coeffs_[m] * st.kernel.phi_derivative(order, (t - points_[m]) / st.c) / cj;
  return s;
}

double KernelSections::rkhs_norm() const { return rkhs_norm_finite(prior_, points_, coeffs_); }

std::vector<double> KernelSections::values_on(const Grid& grid) const {
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) v[i] = value(grid[i]);
  return v;
}

KernelSections KernelSections::normalized() const {
  const double n = rkhs_norm();
  if (!(n > 0.0)) throw std::invalid_argument("KernelSections: cannot normalize zero element");
  std::vector<double> scaled = coeffs_;
  for (double& c : scaled) c /= n;
  return KernelSections(prior_, points_, scaled);
}

SpectralTransformResult spectral_transform(
    const GaussianPrior& prior, const std::function<std::complex<double>(double)>& h,
    const Grid& grid) {
  if (!prior.is_stationary())
    throw std::invalid_argument("spectral_transform: stationary prior required");
  const RescaledStationary& st = prior.as_stationary();
  const SpectralMeasure& mu = st.kernel.spectral();
  const double L = mu.tail_cutoff();
  const double c = st.c;

  // integrate against the base measure; mu_c values enter as h(u/c)
  auto evaluate = [&](std::size_t panels, std::vector<double>& values, double& norm_sq) {
    values.assign(grid.size(), 0.0);
    norm_sq = 0.0;
    const double h_panel = 2.0 * L / static_cast<double>(panels);
    std::vector<double> x, w;
    for (std::size_t p = 0; p < panels; ++p) {
      gl_map(16, -L + p * h_panel, -L + (p + 1) * h_panel, x, w);
      for (std::size_t q = 0; q < x.size(); ++q) {
        const double dens = mu.density(x[q]);
        if (dens == 0.0) continue;
        const std::complex<double> hv = h(x[q] / c);
        norm_sq += w[q] * dens * std::norm(hv);
        for (std::size_t i = 0; i < grid.size(); ++i) {
          const double phase = -grid[i] * x[q] / c;
          values[i] +=
              w[q] * dens * (hv.real() * std::cos(phase) - hv.imag() * std::sin(phase));
        }
      }
    }
  };

  std::vector<double> values, next;
  double norm_sq = 0.0, norm_next = 0.0;
  std::size_t panels = 8;
  evaluate(panels, values, norm_sq);
  for (;;) {
    panels *= 2;
    if (panels > (1u << 14)) throw std::runtime_error("spectral_transform: divergent quadrature");
    evaluate(panels, next, norm_next);
    double diff = std::abs(norm_next - norm_sq);
    for (std::size_t i = 0; i < values.size(); ++i)
      diff = std::max(diff, std::abs(next[i] - values[i]));
    values.swap(next);
    norm_sq = norm_next;
    if (diff <= 1e-8) break;
  }
  if (!(norm_sq >= 0.0) || !std::isfinite(norm_sq))
    throw std::runtime_error("spectral_transform: norm integral diverged");
  return SpectralTransformResult{GridFunction{grid, values}, std::sqrt(norm_sq)};
}

// ---------------------------------------------------------------------------
// smoothing kernel

SmoothingKernelPsi::SmoothingKernelPsi(double plateau) : plateau_(plateau) {
  if (!(plateau > 0.0)) throw std::invalid_argument("SmoothingKernelPsi: plateau must be > 0");
}

double SmoothingKernelPsi::psi_hat(double lambda) const {
  const double x = std::abs(lambda);
  if (x <= plateau_) return 1.0 / kTwoPi;
  if (x >= 2.0 * plateau_) return 0.0;
  // bump transition flat at both ends: the glue is C-infinity on all of R,
  // which keeps psi decaying faster than any polynomial (a one-sided
  // taper like exp(1 - 1/(1-u^2)) would leave a curvature jump at the
  // plateau edge and only cubic decay)
  const double u = (x - plateau_) / plateau_;
  const double fa = std::exp(-1.0 / u);
  const double fb = std::exp(-1.0 / (1.0 - u));
  return fb / (fa + fb) / kTwoPi;
}

namespace {

// int_0^P l^j e^{-i t l} dl: upward by-parts recursion for large |t|,
// plain quadrature when the integrand barely oscillates
std::complex<double> plateau_integral(int j, double t, double plateau) {
  if (std::abs(t) * plateau < 8.0) {
    std::vector<double> x, w;
    gl_map(48, 0.0, plateau, x, w);
    std::complex<double> s(0.0, 0.0);
    for (std::size_t q = 0; q < x.size(); ++q)
      s += w[q] * std::pow(x[q], j) *
           std::complex<double>(std::cos(t * x[q]), -std::sin(t * x[q]));
    return s;
  }
  const std::complex<double> it(0.0, t);
  const std::complex<double> e(std::cos(t * plateau), -std::sin(t * plateau));
  std::complex<double> acc = (1.0 - e) / it;  // j = 0
  double pj = 1.0;
  for (int m = 1; m <= j; ++m) {
    pj *= plateau;
    acc = (static_cast<double>(m) * acc - pj * e) / it;
  }
  return acc;
}

// taper breakpoints on [P, 2P], clustered toward the flat points at both ends
std::vector<double> taper_breakpoints(double plateau) {
  std::vector<double> b;
  b.push_back(plateau);
  for (int m = 14; m >= 1; --m) b.push_back(plateau * (1.0 + std::pow(2.0, -m)));
  for (int m = 1; m <= 14; ++m) b.push_back(plateau * (2.0 - std::pow(2.0, -m)));
  b.push_back(2.0 * plateau);
  return b;
}

// int over the taper [P, 2P] of l^j e^{-i t l} psi_hat(l) dl
std::complex<double> taper_integral(int j, double t, const SmoothingKernelPsi& psi) {
  const std::vector<double> bp = taper_breakpoints(psi.plateau_radius());
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t p = 0; p + 1 < bp.size(); ++p) {
    const double a = bp[p], b = bp[p + 1];
    const int sub = std::max(1, static_cast<int>(std::ceil((b - a) * (std::abs(t) + 1.0) / 3.0)));
    const double h = (b - a) / sub;
    for (int s = 0; s < sub; ++s) {
      std::vector<double> x, w;
      gl_map(16, a + s * h, a + (s + 1) * h, x, w);
      for (std::size_t q = 0; q < x.size(); ++q) {
        const double f = w[q] * std::pow(x[q], j) * psi.psi_hat(x[q]);
        acc += f * std::complex<double>(std::cos(t * x[q]), -std::sin(t * x[q]));
      }
    }
  }
  return acc;
}

}  // namespace

double SmoothingKernelPsi::psi(double t) const { return psi_derivative(0, t); }

double SmoothingKernelPsi::psi_derivative(int order, double t) const {
  if (order < 0) throw std::invalid_argument("psi_derivative: order must be >= 0");
  // int (-i l)^j e^{-i t l} psi_hat(l) dl over the support, folded to twice
  // the real part of the positive half; plateau handled semi-analytically
  const std::complex<double> half =
      plateau_integral(order, t, plateau_) / kTwoPi + taper_integral(order, t, *this);
  std::complex<double> mi(0.0, -1.0);
  std::complex<double> phase(1.0, 0.0);
  for (int m = 0; m < order; ++m) phase *= mi;
  return 2.0 * (phase * half).real();
}

double SmoothingKernelPsi::moment(int k, double tail) const {
  auto f = [&](double t) { return std::pow(t, k) * psi(t); };
  // oscillation-resolved panels; the integrand cancels, so accuracy of
  // psi itself is what matters
  double s = 0.0;
  const int panels = static_cast<int>(std::ceil(tail));
  const double h = tail / panels;
  for (int p = 0; p < panels; ++p) {
    const double a = p * h;
    s += gl_integrate(f, a, a + h, 16);
    s += gl_integrate(f, -a - h, -a, 16);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Fourier-side machinery shared by the approximation constructions

namespace {

struct TruthSpectrum {
  std::vector<double> lambda;  // nodes on [0, Lambda]
  std::vector<double> weight;
  std::vector<double> re;      // w_hat real part
  std::vector<double> im;      // w_hat imaginary part
};

// w_hat(l) = (1/2pi) int e^{i t l} w_ext(t) dt over the compact support
TruthSpectrum truth_spectrum(const SmoothTruth& truth, double lambda_max) {
  TruthSpectrum sp;
  const auto n_lambda = static_cast<std::size_t>(std::max(768.0, 8.0 * lambda_max));
  const auto n_t = static_cast<std::size_t>(std::max(768.0, 6.0 * lambda_max));
  gl_map(n_lambda, 0.0, lambda_max, sp.lambda, sp.weight);

  std::vector<double> tx, tw;
  gl_map(n_t, -1.0, 2.0, tx, tw);
  std::vector<double> wv(n_t);
  for (std::size_t q = 0; q < n_t; ++q) wv[q] = tw[q] * truth.extended(tx[q]);

  sp.re.assign(n_lambda, 0.0);
  sp.im.assign(n_lambda, 0.0);
  for (std::size_t i = 0; i < n_lambda; ++i) {
    double a = 0.0, b = 0.0;
    const double l = sp.lambda[i];
    for (std::size_t q = 0; q < n_t; ++q) {
      a += wv[q] * std::cos(tx[q] * l);
      b += wv[q] * std::sin(tx[q] * l);
    }
    sp.re[i] = a / kTwoPi;
    sp.im[i] = b / kTwoPi;
  }
  return sp;
}

// g^(j)(t) = 2 pi int (-i l)^j e^{-i t l} w_hat(l) M(l) dl, folded onto [0, Lambda]
double spectrum_deriv(const TruthSpectrum& sp, const std::vector<double>& multiplier,
                      int order, double t) {
  double s = 0.0;
  const int phase = order % 4;
  for (std::size_t i = 0; i < sp.lambda.size(); ++i) {
    const double l = sp.lambda[i];
    const double lj = order == 0 ? 1.0 : std::pow(l, order);
    const double c = std::cos(t * l), sn = std::sin(t * l);
    double re;
    switch (phase) {
      case 0: re = sp.re[i] * c + sp.im[i] * sn; break;
      case 1: re = sp.im[i] * c - sp.re[i] * sn; break;
      case 2: re = -(sp.re[i] * c + sp.im[i] * sn); break;
      default: re = sp.re[i] * sn - sp.im[i] * c; break;
    }
    s += sp.weight[i] * multiplier[i] * lj * re;
  }
  return 2.0 * kTwoPi * s;
}

}  // namespace

ApproxResult holder_approx_bandwidth(const SmoothTruth& truth, double c, double bandwidth,
                                     const StationaryKernel& kernel, const Grid& grid) {
  if (!(c > 0.0) || !(bandwidth > 0.0))
    throw std::invalid_argument("holder_approx: c and bandwidth must be > 0");
  SmoothingKernelPsi psi;
  const double lambda_max = psi.support_radius() / bandwidth;
  const TruthSpectrum sp = truth_spectrum(truth, lambda_max);

  std::vector<double> mult(sp.lambda.size());
  for (std::size_t i = 0; i < sp.lambda.size(); ++i)
    mult[i] = psi.psi_hat(bandwidth * sp.lambda[i]);

  GridFunction approx{grid, std::vector<double>(grid.size(), 0.0)};
  double sup_err = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    approx.values[i] = spectrum_deriv(sp, mult, 0, grid[i]);
    sup_err = std::max(sup_err, std::abs(approx.values[i] - truth.value(grid[i])));
  }

  const SpectralMeasure& mu = kernel.spectral();
  double norm_sq = 0.0;
  for (std::size_t i = 0; i < sp.lambda.size(); ++i) {
    if (mult[i] == 0.0) continue;
    const double dens = mu.density(c * sp.lambda[i]);
    if (!(dens > 1e-300))
      throw std::runtime_error("holder_approx: spectral density underflow on the taper support");
    norm_sq += sp.weight[i] * (sp.re[i] * sp.re[i] + sp.im[i] * sp.im[i]) * mult[i] * mult[i] / dens;
  }
  norm_sq *= 2.0 * kTwoPi * kTwoPi / c;
  return ApproxResult{std::move(approx), sup_err, norm_sq, bandwidth};
}

ApproxResult holder_approx(const SmoothTruth& truth, double beta, double c,
                           const StationaryKernel& kernel, const Grid& grid) {
  if (!(beta > 0.0)) throw std::invalid_argument("holder_approx: beta must be > 0");
  if (!(c > 0.0 && c <= 1.0)) throw std::invalid_argument("holder_approx: c must lie in (0,1]");
  return holder_approx_bandwidth(truth, c, c, kernel, grid);
}

double sobolev_rkhs_norm(int k, double c, double a, const CkFunction& h,
                         std::size_t quad_points) {
  if (k < 0) throw std::invalid_argument("sobolev_rkhs_norm: k must be >= 0");
  if (!(c > 0.0) || !(a > 0.0)) throw std::invalid_argument("sobolev_rkhs_norm: c,a must be > 0");
  if (h.max_order < k + 1)
    throw std::invalid_argument("sobolev_rkhs_norm: derivatives up to k+1 required");
  const Grid g = make_grid(quad_points);
  std::vector<double> sq(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double d = h.eval(g[i], k + 1);
    sq[i] = d * d;
  }
  double norm_sq = std::pow(c, 2 * k + 1) * trapezoid(g, sq);
  for (int i = 0; i <= k; ++i) {
    const double d0 = h.eval(0.0, i);
    norm_sq += a * d0 * d0;
  }
  return std::sqrt(norm_sq);
}

CkFunction smoothed_truth(const SmoothTruth& truth, double sigma, int max_order) {
  if (!(sigma > 0.0)) throw std::invalid_argument("smoothed_truth: sigma must be > 0");
  SmoothingKernelPsi psi;
  const double lambda_max = psi.support_radius() / sigma;
  auto sp = std::make_shared<TruthSpectrum>(truth_spectrum(truth, lambda_max));
  auto mult = std::make_shared<std::vector<double>>(sp->lambda.size());
  for (std::size_t i = 0; i < sp->lambda.size(); ++i)
    (*mult)[i] = psi.psi_hat(sigma * sp->lambda[i]);  // psi_sigma_hat(l) = psi_hat(sigma l)
  CkFunction f;
  f.max_order = max_order;
  f.eval = [sp, mult](double t, int order) { return spectrum_deriv(*sp, *mult, order, t); };
  return f;
}

ApproxResult ibm_approx(const SmoothTruth& truth, double beta, int k, double c, double a,
                        double epsilon, const Grid& grid) {
  if (!(beta > 0.0) || beta > k + 1)
    throw std::invalid_argument("ibm_approx: beta must lie in (0, k+1]");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("ibm_approx: epsilon must lie in (0,1)");
  const double sigma = std::pow(epsilon, 1.0 / beta);
  CkFunction g = smoothed_truth(truth, sigma, k + 1);
  GridFunction approx{grid, std::vector<double>(grid.size(), 0.0)};
  double sup_err = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    approx.values[i] = g.eval(grid[i], 0);
    sup_err = std::max(sup_err, std::abs(approx.values[i] - truth.value(grid[i])));
  }
  const double norm = sobolev_rkhs_norm(k, c, a, g);
  return ApproxResult{std::move(approx), sup_err, norm * norm, sigma};
}

}  // namespace rgp
