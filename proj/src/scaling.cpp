#include "rgp/scaling.hpp"

#include <cmath>
#include <stdexcept>

namespace rgp {

const char* to_string(PriorFamilyKind kind) {
  switch (kind) {
    case PriorFamilyKind::SquaredExponential: return "squared-exp";
    case PriorFamilyKind::LaplaceStationary: return "laplace";
    case PriorFamilyKind::ModifiedIbmFamily: return "ibm";
  }
  return "?";
}

GaussianPrior build_prior(PriorFamilyKind kind, double c, double a, int k) {
  switch (kind) {
    case PriorFamilyKind::SquaredExponential:
      return GaussianPrior::stationary(SpectralFamily::GaussianSpectral, c);
    case PriorFamilyKind::LaplaceStationary:
      return GaussianPrior::stationary(SpectralFamily::LaplaceSpectral, c);
    case PriorFamilyKind::ModifiedIbmFamily:
      return GaussianPrior::modified_ibm(k, c, a);
  }
  throw std::invalid_argument("build_prior: unknown family");
}

ScalingResult scaling_rule(PriorFamilyKind family, double alpha, double n, int k) {
  if (!(alpha > 0.0)) throw std::invalid_argument("scaling_rule: alpha must be > 0");
  if (!(n >= 2.0)) throw std::invalid_argument("scaling_rule: n must be >= 2");
  ScalingResult out;
  if (family != PriorFamilyKind::ModifiedIbmFamily) {
    const double log_n = std::log(n);
    out.c_n = std::pow(log_n * log_n / n, 1.0 / (2.0 * alpha + 1.0));
    out.a_n = 1.0;
    return out;
  }
  if (alpha > k + 1)
    throw std::invalid_argument("scaling_rule: ModifiedIbm requires alpha <= k+1");
  const double half_order = k + 0.5;
  out.c_n = std::pow(n, (alpha - half_order) / (half_order * (1.0 + 2.0 * alpha)));
  out.a_n = std::pow(n, (1.0 + 2.0 * alpha - 2.0 * k) / (1.0 + 2.0 * alpha));
  return out;
}

double rate_epsilon_stationary(double alpha, double n) {
  const double log_n = std::log(n);
  return std::pow(n / (log_n * log_n), -alpha / (1.0 + 2.0 * alpha));
}

double rate_epsilon_ibm(double alpha, double n) {
  return std::pow(n, -alpha / (1.0 + 2.0 * alpha));
}

namespace {

std::vector<double> log_ladder(double n_lo, double n_hi, int points) {
  std::vector<double> n(static_cast<std::size_t>(points));
  const double l0 = std::log(n_lo), l1 = std::log(n_hi);
  for (int i = 0; i < points; ++i)
    n[static_cast<std::size_t>(i)] =
        std::exp(l0 + (l1 - l0) * static_cast<double>(i) / (points - 1));
  return n;
}

InequalityCheck assemble(std::string name, std::vector<double> n, std::vector<double> ratio) {
  InequalityCheck chk;
  chk.name = std::move(name);
  chk.n = std::move(n);
  chk.ratio = std::move(ratio);
  const double mid = std::sqrt(chk.n.front() * chk.n.back());
  chk.fitted_low = 0.0;
  chk.fitted_high = 0.0;
  bool finite = true;
  for (std::size_t i = 0; i < chk.n.size(); ++i) {
    if (!std::isfinite(chk.ratio[i])) finite = false;
    if (chk.n[i] <= mid) chk.fitted_low = std::max(chk.fitted_low, chk.ratio[i]);
    if (chk.n[i] >= mid) chk.fitted_high = std::max(chk.fitted_high, chk.ratio[i]);
  }
  chk.holds = finite && chk.fitted_high <= 2.0 * chk.fitted_low;
  return chk;
}

}  // namespace

std::vector<InequalityCheck> rate_balance_stationary(double alpha, double n_lo, double n_hi,
                                                     int points) {
  const std::vector<double> n = log_ladder(n_lo, n_hi, points);
  std::vector<double> r1(n.size()), r2(n.size()), r3(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) {
    const double c = scaling_rule(PriorFamilyKind::SquaredExponential, alpha, n[i]).c_n;
    const double eps = rate_epsilon_stationary(alpha, n[i]);
    const double rhs = n[i] * eps * eps;
    const double log_term = std::log(1.0 / (c * eps * eps));
    r1[i] = (1.0 / c) * log_term * log_term / rhs;
    r2[i] = std::pow(c, alpha) / eps;
    r3[i] = (1.0 / c) / rhs;
  }
  return {assemble("smallball vs n*eps^2", n, r1), assemble("c^alpha vs eps", n, r2),
          assemble("1/c vs n*eps^2", n, r3)};
}

std::vector<InequalityCheck> rate_balance_ibm(double alpha, int k, double n_lo, double n_hi,
                                              int points) {
  if (alpha > k + 1)
    throw std::invalid_argument("rate_balance_ibm: alpha must be <= k+1");
  const std::vector<double> n = log_ladder(n_lo, n_hi, points);
  std::vector<double> ra(n.size()), rb(n.size());
  const double half_order = k + 0.5;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const double c = scaling_rule(PriorFamilyKind::ModifiedIbmFamily, alpha, n[i], k).c_n;
    const double eps = rate_epsilon_ibm(alpha, n[i]);
    const double rhs = n[i] * eps * eps;
    ra[i] = std::pow(1.0 / (std::pow(c, half_order) * eps), 1.0 / half_order) / rhs;
    rb[i] = std::pow(c, 2 * k + 1) *
            std::pow(1.0 / eps, (2.0 * k + 2.0 - 2.0 * alpha) / alpha) / rhs;
  }
  return {assemble("smallball vs n*eps^2", n, ra), assemble("approx vs n*eps^2", n, rb)};
}

}  // namespace rgp
