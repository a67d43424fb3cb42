#include "rgp/spectral.hpp"

#include <cmath>
#include <complex>
#include <mutex>
#include <stdexcept>

#include "rgp/quadrature.hpp"

namespace rgp {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

const char* to_string(SpectralFamily family) {
  switch (family) {
    case SpectralFamily::GaussianSpectral: return "gaussian";
    case SpectralFamily::LaplaceSpectral: return "laplace";
  }
  return "?";
}

SpectralMeasure::SpectralMeasure(SpectralFamily family) : family_(family) {
  // Gaussian tails admit any delta; Laplace density exp(-|l|)/2 needs
  // delta < 1, kept at 1/2 for quadrature headroom.
  delta_ = (family == SpectralFamily::GaussianSpectral) ? 1.0 : 0.5;
}

double SpectralMeasure::density(double lambda) const {
  switch (family_) {
    case SpectralFamily::GaussianSpectral:
      // N(0,2) density: its characteristic function is exp(-t^2)
      return std::exp(-0.25 * lambda * lambda) / (2.0 * std::sqrt(kPi));
    case SpectralFamily::LaplaceSpectral:
      return 0.5 * std::exp(-std::abs(lambda));
  }
  return 0.0;
}

double SpectralMeasure::tail_cutoff() const {
  switch (family_) {
    case SpectralFamily::GaussianSpectral: return 14.0;
    case SpectralFamily::LaplaceSpectral: return 30.0;
  }
  return 0.0;
}

double SpectralMeasure::abs_moment_even(int j) const {
  if (j < 0) throw std::invalid_argument("moment order must be >= 0");
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(moment_cache_.size()) <= j) {
    const int jj = static_cast<int>(moment_cache_.size());
    if (jj == 0) {
      moment_cache_.push_back(mass());
      continue;
    }
    // order-dependent cutoff: the integrand lambda^{2j} density peaks far out
    double L;
    if (family_ == SpectralFamily::GaussianSpectral)
      L = 2.0 * std::sqrt(2.0 * jj) + 30.0;
    else
      L = 2.0 * jj + 40.0 * std::sqrt(static_cast<double>(jj)) + 40.0;
    auto f = [&](double l) { return std::pow(l, 2 * jj) * density(l); };
    const double val = 2.0 * gl_refine(f, 0.0, L, 1e-10, 16, 24);
    moment_cache_.push_back(val);
  }
  return moment_cache_[static_cast<std::size_t>(j)];
}

double SpectralMeasure::exp_moment(double d) const {
  const double L = tail_cutoff() + 20.0;
  auto f = [&](double l) { return std::exp(d * l) * density(l); };
  return 2.0 * gl_refine(f, 0.0, L, 1e-8, 16, 24);
}

StationaryKernel::StationaryKernel(SpectralFamily family) : spectral_(family) {}

double StationaryKernel::phi(double t) const {
  switch (spectral_.family()) {
    case SpectralFamily::GaussianSpectral: return std::exp(-t * t);
    case SpectralFamily::LaplaceSpectral: return 1.0 / (1.0 + t * t);
  }
  return 0.0;
}

double StationaryKernel::phi_derivative(int j, double t) const {
  if (j < 0) throw std::invalid_argument("derivative order must be >= 0");
  if (j == 0) return phi(t);
  switch (spectral_.family()) {
    case SpectralFamily::GaussianSpectral: {
      // d^j/dt^j exp(-t^2) = (-1)^j H_j(t) exp(-t^2), physicists' Hermite
      double h0 = 1.0, h1 = 2.0 * t;
      double h = (j == 1) ? h1 : h0;
      for (int m = 1; m < j; ++m) {
        const double h2 = 2.0 * t * h1 - 2.0 * m * h0;
        h0 = h1;
        h1 = h2;
        h = h2;
      }
      const double sign = (j % 2 == 0) ? 1.0 : -1.0;
      return sign * h * std::exp(-t * t);
    }
    case SpectralFamily::LaplaceSpectral: {
      // 1/(1+t^2) = Im[(t - i)^{-1}]; derivatives via the complex pole
      std::complex<double> z(t, -1.0);
      std::complex<double> p = std::pow(z, -(j + 1));
      double fact = 1.0;
      for (int m = 2; m <= j; ++m) fact *= m;
      const double sign = (j % 2 == 0) ? 1.0 : -1.0;
      return sign * fact * p.imag();
    }
  }
  return 0.0;
}

}  // namespace rgp
