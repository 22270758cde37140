#include "entropic/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace entropic {

namespace {

constexpr double kMinQubitOverlap = std::numbers::sqrt2 / 2.0;
constexpr double kOverlapClamp = 1e-12;

double checked_overlap(double c) {
  if (!std::isfinite(c) || c <= 0.0 || c > 1.0 + kOverlapClamp) {
    throw DomainError("overlap c must lie in (0, 1], got " + std::to_string(c));
  }
  return std::min(c, 1.0);
}

double checked_qubit_overlap(double c) {
  if (!std::isfinite(c) || c < kMinQubitOverlap - kOverlapClamp ||
      c > 1.0 + kOverlapClamp) {
    throw DomainError("qubit overlap c must lie in [sqrt(2)/2, 1], got " +
                      std::to_string(c));
  }
  return std::clamp(c, kMinQubitOverlap, 1.0);
}

EntropyOrder checked_positive_order(EntropyOrder q) {
  if (q.value() <= 0.0) {
    throw DomainError("entropy order q = 0 is not supported here");
  }
  return q;
}

}  // namespace

double bound_deutsch(double c) {
  c = checked_overlap(c);
  return -2.0 * std::log((1.0 + c) / 2.0);
}

double bound_mu(double c) { return -2.0 * std::log(checked_overlap(c)); }

double bound_maj2(double c) { return binary_shannon(checked_overlap(c)); }

double bound_bccrr(double c, double lambda) {
  return bound_mu(c) +
         schmidt_conditional_entropy(lambda, EntropyOrder::von_neumann());
}

double kpp_coefficient(double lambda, EntropyOrder q) {
  lambda = checked_probability(lambda, "lambda");
  checked_positive_order(q);
  if (lambda == 0.5) return 0.0;
  if (q.is_limit()) {
    return 2.0 * (std::numbers::ln2 - binary_shannon(lambda));
  }
  const double qv = q.value();
  const double moment = power_q(lambda, qv) + power_q(1.0 - lambda, qv);
  const double ratio =
      (moment - std::pow(2.0, 1.0 - qv)) / (moment + qv - 2.0);
  return 2.0 * ratio * (1.0 - tsallis_point(lambda, q));
}

double bound_kpp_tsallis(double lambda, double c, EntropyOrder q) {
  c = checked_qubit_overlap(c);
  return kpp_coefficient(lambda, q) * (1.0 - c * c);
}

double bound_state_dependent(double lambda, double theta, double epsilon,
                             EntropyOrder q) {
  theta = checked_angle(theta, "theta");
  epsilon = checked_angle(epsilon, "epsilon");
  const double s1 = std::sin(2.0 * theta + 2.0 * epsilon);
  const double s2 = std::sin(2.0 * theta);
  return 0.5 * kpp_coefficient(lambda, q) * (s1 * s1 + s2 * s2);
}

double bound_mixed_vn(double s_b, double c) {
  if (!std::isfinite(s_b) || s_b < 0.0 ||
      s_b > std::numbers::ln2 + kOverlapClamp) {
    throw DomainError("memory entropy S(B) must lie in [0, ln 2], got " +
                      std::to_string(s_b));
  }
  c = checked_qubit_overlap(c);
  return 2.0 * (std::numbers::ln2 - s_b) * (1.0 - c * c);
}

double analytic_min_vn(double lambda, double c) {
  lambda = checked_probability(lambda, "lambda");
  c = checked_qubit_overlap(c);
  const double shift = 2.0 * lambda * c;
  return 2.0 * std::numbers::ln2 + detail::eta_unchecked(1.0 + c - shift) +
         detail::eta_unchecked(1.0 - c + shift) -
         2.0 * binary_shannon(lambda);
}

double analytic_min_tsallis(double lambda, double c, EntropyOrder q) {
  if (q.is_limit()) return analytic_min_vn(lambda, c);
  lambda = checked_probability(lambda, "lambda");
  c = checked_qubit_overlap(c);
  const double qv = q.value();
  const double shift = 2.0 * lambda * c;
  return 2.0 / (qv - 1.0) +
         std::pow(2.0, 1.0 - qv) *
             (detail::eta_q_unchecked(1.0 + c - shift, qv) +
              detail::eta_q_unchecked(1.0 - c + shift, qv)) -
         2.0 * tsallis_point(lambda, q);
}

double boundary_lhs(double lambda, double c, EntropyOrder q) {
  lambda = checked_probability(lambda, "lambda");
  c = checked_qubit_overlap(c);
  checked_positive_order(q);
  if (c >= 1.0) {
    throw DomainError("boundary inequality is singular at c = 1");
  }
  // The inequalities are odd in (1 - 2 lambda); the minimisation problem is
  // symmetric under lambda -> 1 - lambda.
  const double k = 1.0 - 2.0 * std::min(lambda, 1.0 - lambda);
  if (q.is_limit()) {
    return -c * std::atanh(k * c) + (-k) * (1.0 - c * c) / (c * c * k * k - 1.0);
  }
  const double qv = q.value();
  const double plus = 1.0 + k * c;
  const double minus = 1.0 - k * c;
  return std::pow(plus, qv - 2.0) *
             (-k + (qv * c * c * k + c) / (qv - 1.0)) +
         std::pow(minus, qv - 2.0) * (-k + (qv * c * c * k - c) / (qv - 1.0));
}

double boundary_margin(double lambda, double c, EntropyOrder q) {
  const double lhs = boundary_lhs(lambda, c, q);
  return q.is_limit() ? -lhs : lhs;
}

bool boundary_condition(double lambda, double c, EntropyOrder q) {
  c = checked_qubit_overlap(c);
  if (c >= 1.0) {
    checked_probability(lambda, "lambda");
    checked_positive_order(q);
    return true;
  }
  return boundary_margin(lambda, c, q) >= 0.0;
}

BoundSet all_bounds(const Scenario& s) {
  BoundSet out;
  const double c = overlap_c(s.epsilon);
  out.overlap = c;
  out.b_deutsch = bound_deutsch(c);
  out.b_mu = bound_mu(c);
  out.b_maj2 = bound_maj2(c);
  if (s.q.is_limit()) {
    out.b_bccrr = bound_bccrr(c, s.lambda);
  }
  out.b_kpp = bound_kpp_tsallis(s.lambda, c, s.q);
  out.b_theta = bound_state_dependent(s.lambda, s.theta, s.epsilon, s.q);
  if (boundary_condition(s.lambda, c, s.q)) {
    out.analytic_min = analytic_min_tsallis(s.lambda, c, s.q);
  }
  return out;
}

}  // namespace entropic
