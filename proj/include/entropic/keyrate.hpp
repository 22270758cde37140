#pragma once

namespace entropic {

/// Entropic quantities (nats) entering the extractable-key bound.
struct KeyRateInputs {
  double c;             ///< overlap of Alice's two measurements
  double s_b;           ///< S(B)
  double s_a_given_b;   ///< S(A|B), negative for entangled states
  double s_x_given_xp;  ///< S(X|X')
  double s_y_given_yp;  ///< S(Y|Y')
};

/// Throws DomainError when an input leaves its qubit range.
void validate(const KeyRateInputs& in);

/// K >= 2 (1 - c^2)(ln 2 - S(B)) - S(A|B) - S(X|X') - S(Y|Y').
/// Negative values are returned unclamped.
double key_rate_lower_bound(const KeyRateInputs& in);

bool positive_key(const KeyRateInputs& in);

/// Inputs for the Schmidt state: c = overlap_c(epsilon), S(B) = h(lambda),
/// S(A|B) = -h(lambda).
KeyRateInputs scenario_key_inputs(double lambda, double epsilon,
                                  double s_x_given_xp, double s_y_given_yp);

double key_rate_for_scenario(double lambda, double epsilon,
                             double s_x_given_xp, double s_y_given_yp);

}  // namespace entropic
