#include "entropic/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace entropic {

EntropyOrder::EntropyOrder(double q) : q_(q) {
  if (!(q >= 0.0) || !std::isfinite(q)) {
    throw DomainError("entropy order q must be a finite value >= 0, got " +
                      std::to_string(q));
  }
  is_limit_ = std::abs(q - 1.0) < kOrderSwitchBand;
}

Spectrum::Spectrum(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) {
    throw DomainError("spectrum must not be empty");
  }
  for (double& p : probs_) {
    p = checked_probability(p, "spectrum entry");
  }
  const double total = std::accumulate(probs_.begin(), probs_.end(), 0.0);
  if (std::abs(total - 1.0) > kNormalizationTolerance) {
    throw DomainError("spectrum entries sum to " + std::to_string(total) +
                      ", expected 1");
  }
}

double checked_probability(double x, const char* what) {
  if (!std::isfinite(x) || x < -kProbabilityClamp ||
      x > 1.0 + kProbabilityClamp) {
    throw DomainError(std::string(what) + " must lie in [0, 1], got " +
                      std::to_string(x));
  }
  return std::clamp(x, 0.0, 1.0);
}

double power_q(double x, double q) {
  if (x == 0.0) {
    return q == 0.0 ? 1.0 : 0.0;
  }
  return std::pow(x, q);
}

namespace detail {

double eta_unchecked(double x) { return x == 0.0 ? 0.0 : -x * std::log(x); }

double eta_q_unchecked(double x, double q) {
  return -power_q(x, q) / (q - 1.0);
}

}  // namespace detail

double eta(double x) { return detail::eta_unchecked(checked_probability(x)); }

double binary_shannon(double x) {
  x = checked_probability(x);
  return detail::eta_unchecked(x) + detail::eta_unchecked(1.0 - x);
}

double eta_q(double x, EntropyOrder q) {
  if (q.is_limit()) {
    throw DomainError("eta_q has no limit at q = 1");
  }
  return detail::eta_q_unchecked(checked_probability(x), q.value());
}

double tsallis_point(double x, EntropyOrder q) {
  x = checked_probability(x);
  if (q.is_limit()) {
    return detail::eta_unchecked(x) + detail::eta_unchecked(1.0 - x);
  }
  const double qv = q.value();
  return (1.0 - power_q(x, qv) - power_q(1.0 - x, qv)) / (qv - 1.0);
}

double tsallis_point_derivative(double x, EntropyOrder q) {
  x = checked_probability(x);
  if (q.is_limit()) {
    return std::log1p(-x) - std::log(x);
  }
  const double qv = q.value();
  return qv * (std::pow(1.0 - x, qv - 1.0) - std::pow(x, qv - 1.0)) /
         (qv - 1.0);
}

double tsallis_entropy(const Spectrum& s, EntropyOrder q) {
  if (q.is_limit()) {
    double sum = 0.0;
    for (double p : s.probs()) sum += detail::eta_unchecked(p);
    return sum;
  }
  const double qv = q.value();
  double moment = 0.0;
  for (double p : s.probs()) moment += power_q(p, qv);
  return (1.0 - moment) / (qv - 1.0);
}

double conditional_tsallis(const Spectrum& joint, const Spectrum& marginal,
                           EntropyOrder q) {
  return tsallis_entropy(joint, q) - tsallis_entropy(marginal, q);
}

}  // namespace entropic
