#pragma once

#include "rgp/rkhs.hpp"
#include "rgp/smallball.hpp"

namespace rgp {

struct ConcentrationEstimate {
  double epsilon = 0.0;
  double approx_norm_sq = 0.0;   // squared RKHS norm of the constructive witness
  double approx_sup_error = 0.0;
  double approx_bandwidth = 0.0;
  double smallball_neg_log = 0.0;
  bool feasible = false;

  /// Upper estimate of the concentration function: witness norm-squared
  /// plus the small-ball exponent.
  double value() const { return approx_norm_sq + smallball_neg_log; }
};

/// Upper estimate at resolution epsilon: the infimum over the RKHS ball
/// is replaced by the best constructive witness (bandwidth search over
/// the smoothing construction) meeting sup-error <= epsilon, plus the
/// Monte Carlo small-ball term. Throws (via feasible == false) nothing;
/// reports infeasible when no bandwidth on the ladder meets the target.
ConcentrationEstimate concentration_estimate(const GaussianPrior& prior,
                                             const SmoothTruth& truth, double epsilon,
                                             const SmallBallEstimate& smallball,
                                             const Grid& grid);

}  // namespace rgp
