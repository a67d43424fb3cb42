#pragma once

#include <vector>

namespace rgp {

/// The two built-in spectral families. GaussianSpectral pairs with the
/// covariance phi(t) = exp(-t^2), LaplaceSpectral with phi(t) = 1/(1+t^2).
enum class SpectralFamily { GaussianSpectral, LaplaceSpectral };

const char* to_string(SpectralFamily family);

/// Symmetric finite measure on R with a Lebesgue density, carrying the
/// tail exponent delta of its exponential-moment condition
/// (integral of exp(delta |lambda|) d mu finite).
class SpectralMeasure {
 public:
  explicit SpectralMeasure(SpectralFamily family);

  SpectralFamily family() const { return family_; }
  double delta() const { return delta_; }

  double density(double lambda) const;

  /// Total mass (equals phi(0) = 1 for both built-ins).
  double mass() const { return 1.0; }

  /// Cutoff L with mass of {|lambda| > L} below 1e-12.
  double tail_cutoff() const;

  /// Absolute moment of even order 2j, by cached quadrature at 1e-10
  /// relative tolerance.
  double abs_moment_even(int j) const;

  /// Quadrature value of the exponential moment at exponent d.
  double exp_moment(double d) const;

 private:
  SpectralFamily family_;
  double delta_;
  mutable std::vector<double> moment_cache_;
};

/// Stationary covariance function together with its spectral measure.
class StationaryKernel {
 public:
  explicit StationaryKernel(SpectralFamily family);

  const SpectralMeasure& spectral() const { return spectral_; }
  SpectralFamily family() const { return spectral_.family(); }

  double phi(double t) const;

  /// j-th derivative of phi, via quadrature of (-i lambda)^j against mu.
  double phi_derivative(int j, double t) const;

 private:
  SpectralMeasure spectral_;
};

}  // namespace rgp
