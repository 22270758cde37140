#include "entropic/keyrate.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "entropic/entropy.hpp"
#include "entropic/scenario.hpp"

namespace entropic {

namespace {

constexpr double kSlack = 1e-12;

void check_range(double v, double lo, double hi, const char* name) {
  if (!std::isfinite(v) || v < lo - kSlack || v > hi + kSlack) {
    throw DomainError(std::string(name) + " must lie in [" + std::to_string(lo) +
                      ", " + std::to_string(hi) + "], got " + std::to_string(v));
  }
}

}  // namespace

void validate(const KeyRateInputs& in) {
  constexpr double ln2 = std::numbers::ln2;
  check_range(in.c, std::numbers::sqrt2 / 2.0, 1.0, "c");
  check_range(in.s_b, 0.0, ln2, "S(B)");
  check_range(in.s_a_given_b, -ln2, ln2, "S(A|B)");
  check_range(in.s_x_given_xp, 0.0, ln2, "S(X|X')");
  check_range(in.s_y_given_yp, 0.0, ln2, "S(Y|Y')");
}

double key_rate_lower_bound(const KeyRateInputs& in) {
  validate(in);
  return 2.0 * (1.0 - in.c * in.c) * (std::numbers::ln2 - in.s_b) -
         in.s_a_given_b - in.s_x_given_xp - in.s_y_given_yp;
}

bool positive_key(const KeyRateInputs& in) {
  return key_rate_lower_bound(in) > 0.0;
}

KeyRateInputs scenario_key_inputs(double lambda, double epsilon,
                                  double s_x_given_xp, double s_y_given_yp) {
  const double h = binary_shannon(checked_probability(lambda, "lambda"));
  return {overlap_c(epsilon), h, -h, s_x_given_xp, s_y_given_yp};
}

double key_rate_for_scenario(double lambda, double epsilon,
                             double s_x_given_xp, double s_y_given_yp) {
  return key_rate_lower_bound(
      scenario_key_inputs(lambda, epsilon, s_x_given_xp, s_y_given_yp));
}

}  // namespace entropic
