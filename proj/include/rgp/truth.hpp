#pragma once

#include <vector>

#include "rgp/grid.hpp"

namespace rgp {

enum class Setting { Density, Regression, Classification };

const char* to_string(Setting setting);

enum class TruthFormula { WeierstrassType, PolySmooth, TrigSmooth, Constant };

/// Ground-truth function on [0,1] with a certified Hoelder exponent.
///
/// Construction: a lacunary cosine sum sum_{j=1..J} 2^{-j gamma} cos(2^j pi t)
/// antidifferentiated m times in closed form (each antidifferentiation raises
/// the exponent by exactly one), with alpha = m + gamma, renormalized to
/// sup-norm 1 on [0,1]. TrigSmooth is the analytic benchmark sin(2 pi t).
class SmoothTruth {
 public:
  double alpha() const { return alpha_; }
  TruthFormula formula() const { return formula_; }
  int terms() const { return terms_; }

  /// Value on [0,1] (the raw formula also extends to all of R).
  double value(double t) const;

  /// Compactly supported extension to R: zero outside (-1,2), equal to the
  /// truth on [0,1]. For alpha <= 1 the truth is continued by reflection
  /// about 0 and 1 before the smooth cutoff; for alpha > 1 the global
  /// formula is used directly under the cutoff.
  double extended(double t) const;

  std::vector<double> values_on(const Grid& grid) const;

  static SmoothTruth weierstrass(double alpha, int terms = 12);
  static SmoothTruth trig(double declared_alpha);
  static SmoothTruth constant(double kappa);

 private:
  SmoothTruth() = default;
  double raw(double t) const;

  double alpha_ = 1.0;
  TruthFormula formula_ = TruthFormula::Constant;
  int terms_ = 12;
  int antiderivatives_ = 0;
  double gamma_ = 1.0;
  double amplitude_ = 0.0;
};

/// Truth for a statistical setting at the requested exponent. The w-level
/// object is the same in all three settings; only the data model differs.
SmoothTruth make_truth(Setting setting, double alpha);

/// Smooth cutoff: 1 on [-0.5, 1.5], 0 outside (-1, 2), C-infinity between.
double smooth_cutoff(double t);

/// Empirical Hoelder quotient sup |v_i - v_j| / |t_i - t_j|^alpha over
/// dyadic lags on an equispaced grid.
double holder_quotient(const std::vector<double>& values, double spacing, double alpha);

/// Second-difference quotient sup |v_{i+l} - 2 v_i + v_{i-l}| / (l h)^2
/// over dyadic lags (bounded exactly when the first derivative is
/// Lipschitz up to the Zygmund class).
double second_difference_quotient(const std::vector<double>& values, double spacing);

}  // namespace rgp
