#include "entropic/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace entropic {

namespace {

constexpr double kAngleClamp = 1e-12;

// Both eigenvalues straight from the angle: near theta = 0 or pi/2 the small
// one is far more accurate than 1 - mu1.
EigenPair direct_eigs(double lambda, double theta) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return {lambda * s * s + (1.0 - lambda) * c * c,
          lambda * c * c + (1.0 - lambda) * s * s};
}

double pair_entropy(const EigenPair& m, EntropyOrder q) {
  if (q.is_limit()) {
    return detail::eta_unchecked(m.mu1) + detail::eta_unchecked(m.mu2);
  }
  const double qv = q.value();
  return (1.0 - power_q(m.mu1, qv) - power_q(m.mu2, qv)) / (qv - 1.0);
}

// d/dtheta of t_q(mu1(lambda, theta)); mu1' = (2 lambda - 1) sin(2 theta).
double point_entropy_slope(double lambda, double theta, EntropyOrder q) {
  const double dmu = (2.0 * lambda - 1.0) * std::sin(2.0 * theta);
  if (dmu == 0.0) return 0.0;
  const EigenPair m = direct_eigs(lambda, theta);
  if (m.mu1 <= 0.0 || m.mu2 <= 0.0) return 0.0;
  if (q.is_limit()) return (std::log(m.mu2) - std::log(m.mu1)) * dmu;
  const double qv = q.value();
  return qv * (std::pow(m.mu2, qv - 1.0) - std::pow(m.mu1, qv - 1.0)) /
         (qv - 1.0) * dmu;
}

}  // namespace

Scenario::Scenario(double lambda_, double theta_, double epsilon_,
                   EntropyOrder q_)
    : lambda(checked_probability(lambda_, "lambda")),
      theta(checked_angle(theta_, "theta")),
      epsilon(checked_angle(epsilon_, "epsilon")),
      q(q_) {}

double checked_angle(double radians, const char* what) {
  if (!std::isfinite(radians) || radians < -kAngleClamp ||
      radians > kHalfPi + kAngleClamp) {
    throw DomainError(std::string(what) + " must lie in [0, pi/2], got " +
                      std::to_string(radians));
  }
  return std::clamp(radians, 0.0, kHalfPi);
}

double overlap_c(double epsilon) {
  epsilon = checked_angle(epsilon, "epsilon");
  return epsilon <= kQuarterPi ? std::cos(epsilon) : std::sin(epsilon);
}

Matrix2 rotation(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {{{c, -s}, {s, c}}};
}

EigenPair post_measurement_eigs(double lambda, double theta) {
  lambda = checked_probability(lambda, "lambda");
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double mu1 =
      std::clamp(lambda * s * s + (1.0 - lambda) * c * c, 0.0, 1.0);
  return {mu1, 1.0 - mu1};
}

double conditional_sum(const Scenario& s) {
  return detail::conditional_sum_at(s.lambda, s.theta, s.epsilon, s.q);
}

double schmidt_conditional_entropy(double lambda, EntropyOrder q) {
  return -tsallis_point(checked_probability(lambda, "lambda"), q);
}

namespace detail {

double conditional_sum_at(double lambda, double theta, double epsilon,
                          EntropyOrder q) {
  lambda = checked_probability(lambda, "lambda");
  return pair_entropy(direct_eigs(lambda, theta), q) +
         pair_entropy(direct_eigs(lambda, theta + epsilon), q) -
         2.0 * tsallis_point(lambda, q);
}

double conditional_sum_derivative(double lambda, double theta, double epsilon,
                                  EntropyOrder q) {
  return point_entropy_slope(lambda, theta, q) +
         point_entropy_slope(lambda, theta + epsilon, q);
}

}  // namespace detail

}  // namespace entropic
