#include "rgp/truth.hpp"

#include <cmath>
#include <stdexcept>

namespace rgp {

namespace {
constexpr double kPi = 3.14159265358979323846;

double transition01(double s) {
  if (s <= 0.0) return 0.0;
  if (s >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / s);
  const double b = std::exp(-1.0 / (1.0 - s));
  return a / (a + b);
}

// map t to [0,1] by reflection about 0 and 1 (period-2 triangle map)
double reflect01(double t) {
  double r = std::fmod(t, 2.0);
  if (r < 0.0) r += 2.0;
  return r <= 1.0 ? r : 2.0 - r;
}

}  // namespace

const char* to_string(Setting setting) {
  switch (setting) {
    case Setting::Density: return "density";
    case Setting::Regression: return "regression";
    case Setting::Classification: return "classification";
  }
  return "?";
}

double smooth_cutoff(double t) {
  if (t <= -1.0 || t >= 2.0) return 0.0;
  if (t >= -0.5 && t <= 1.5) return 1.0;
  if (t < -0.5) return transition01((t + 1.0) / 0.5);
  return transition01((2.0 - t) / 0.5);
}

double SmoothTruth::raw(double t) const {
  switch (formula_) {
    case TruthFormula::Constant:
      return amplitude_;
    case TruthFormula::TrigSmooth:
      return amplitude_ * std::sin(2.0 * kPi * t);
    case TruthFormula::WeierstrassType:
    case TruthFormula::PolySmooth: {
      // m-fold antiderivative of cos(w t) is cos(w t - m pi/2) / w^m
      double s = 0.0;
      const double shift = antiderivatives_ * kPi / 2.0;
      for (int j = 1; j <= terms_; ++j) {
        const double w = std::pow(2.0, j) * kPi;
        s += std::pow(2.0, -j * gamma_) * std::cos(w * t - shift) /
             std::pow(w, antiderivatives_);
      }
      return amplitude_ * s;
    }
  }
  return 0.0;
}

double SmoothTruth::value(double t) const { return raw(t); }

double SmoothTruth::extended(double t) const {
  if (t <= -1.0 || t >= 2.0) return 0.0;
  if (formula_ == TruthFormula::Constant) return amplitude_ * smooth_cutoff(t);
  if (alpha_ <= 1.0) return raw(reflect01(t)) * smooth_cutoff(t);
  return raw(t) * smooth_cutoff(t);
}

std::vector<double> SmoothTruth::values_on(const Grid& grid) const {
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) v[i] = value(grid[i]);
  return v;
}

SmoothTruth SmoothTruth::weierstrass(double alpha, int terms) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be > 0");
  if (terms < 1) throw std::invalid_argument("terms must be >= 1");
  SmoothTruth w;
  w.alpha_ = alpha;
  w.terms_ = terms;
  // alpha = m + gamma with integer m >= 0 and gamma in (0, 1]
  int m = static_cast<int>(std::ceil(alpha)) - 1;
  if (m < 0) m = 0;
  w.antiderivatives_ = m;
  w.gamma_ = alpha - m;
  w.formula_ = alpha < 1.0 ? TruthFormula::WeierstrassType : TruthFormula::PolySmooth;
  w.amplitude_ = 1.0;
  double sup = 0.0;
  const int n = 8192;
  for (int i = 0; i <= n; ++i) sup = std::max(sup, std::abs(w.raw(static_cast<double>(i) / n)));
  w.amplitude_ = sup > 0.0 ? 1.0 / sup : 0.0;
  return w;
}

SmoothTruth SmoothTruth::trig(double declared_alpha) {
  SmoothTruth w;
  w.alpha_ = declared_alpha;
  w.formula_ = TruthFormula::TrigSmooth;
  w.amplitude_ = 1.0;
  return w;
}

SmoothTruth SmoothTruth::constant(double kappa) {
  SmoothTruth w;
  w.alpha_ = 1.0;
  w.formula_ = TruthFormula::Constant;
  w.amplitude_ = kappa;
  return w;
}

SmoothTruth make_truth(Setting /*setting*/, double alpha) {
  return SmoothTruth::weierstrass(alpha);
}

double holder_quotient(const std::vector<double>& values, double spacing, double alpha) {
  if (values.size() < 2) return 0.0;
  double q = 0.0;
  for (std::size_t lag = 1; lag < values.size(); lag *= 2) {
    const double denom = std::pow(lag * spacing, alpha);
    for (std::size_t i = 0; i + lag < values.size(); ++i)
      q = std::max(q, std::abs(values[i + lag] - values[i]) / denom);
  }
  return q;
}

double second_difference_quotient(const std::vector<double>& values, double spacing) {
  if (values.size() < 3) return 0.0;
  double q = 0.0;
  for (std::size_t lag = 1; 2 * lag < values.size(); lag *= 2) {
    const double denom = (lag * spacing) * (lag * spacing);
    for (std::size_t i = lag; i + lag < values.size(); ++i)
      q = std::max(q, std::abs(values[i + lag] - 2.0 * values[i] + values[i - lag]) / denom);
  }
  return q;
}

}  // namespace rgp
