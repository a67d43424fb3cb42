#include "rgp/concentration.hpp"

#include <cmath>

namespace rgp {

ConcentrationEstimate concentration_estimate(const GaussianPrior& prior,
                                             const SmoothTruth& truth, double epsilon,
                                             const SmallBallEstimate& smallball,
                                             const Grid& grid) {
  ConcentrationEstimate out;
  out.epsilon = epsilon;
  out.smallball_neg_log = smallball.neg_log_prob;

  // zero witness if the truth already fits in the epsilon-tube
  double sup_truth = 0.0;
  for (double t : grid) sup_truth = std::max(sup_truth, std::abs(truth.value(t)));
  if (sup_truth <= epsilon) {
    out.feasible = true;
    out.approx_norm_sq = 0.0;
    out.approx_sup_error = sup_truth;
    out.approx_bandwidth = 0.0;
    return out;
  }

  // largest bandwidth on a geometric ladder meeting the sup-error target
  const double ladder_ratio = 0.85;
  const int ladder_steps = 60;
  if (prior.is_stationary()) {
    const RescaledStationary& st = prior.as_stationary();
    double b = 2.0;
    for (int step = 0; step < ladder_steps; ++step, b *= ladder_ratio) {
      ApproxResult res;
      try {
        res = holder_approx_bandwidth(truth, st.c, b, st.kernel, grid);
      } catch (const std::runtime_error&) {
        // spectral-density underflow: the witness norm left the double
        // range before the error target was met
        break;
      }
      if (res.sup_error <= epsilon) {
        out.feasible = true;
        out.approx_norm_sq = res.rkhs_norm_sq;
        out.approx_sup_error = res.sup_error;
        out.approx_bandwidth = b;
        return out;
      }
    }
    out.feasible = false;
    return out;
  }

  const ModifiedIbm& ibm = prior.as_ibm();
  double sigma = std::pow(std::min(epsilon, 0.99), 1.0 / truth.alpha());
  for (int step = 0; step < ladder_steps; ++step, sigma *= ladder_ratio) {
    CkFunction g = smoothed_truth(truth, sigma, ibm.k + 1);
    double sup_err = 0.0;
    for (double t : grid) sup_err = std::max(sup_err, std::abs(g.eval(t, 0) - truth.value(t)));
    if (sup_err <= epsilon) {
      const double norm = sobolev_rkhs_norm(ibm.k, ibm.c, ibm.a, g);
      out.feasible = true;
      out.approx_norm_sq = norm * norm;
      out.approx_sup_error = sup_err;
      out.approx_bandwidth = sigma;
      return out;
    }
  }
  out.feasible = false;
  return out;
}

}  // namespace rgp
