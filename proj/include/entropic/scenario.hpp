#pragma once

#include <array>
#include <numbers>

#include "entropic/entropy.hpp"

namespace entropic {

inline constexpr double kHalfPi = std::numbers::pi / 2.0;
inline constexpr double kQuarterPi = std::numbers::pi / 4.0;

/// Two-qubit setting: the pure state sqrt(lambda)|00> + sqrt(1-lambda)|11>,
/// observable X with eigenbasis O(theta)|i>, observable Y with eigenbasis
/// O(theta + epsilon)|i>, and an entropy order q.
struct Scenario {
  Scenario(double lambda, double theta, double epsilon, EntropyOrder q);

  double lambda;
  double theta;
  double epsilon;
  EntropyOrder q;
};

/// Nonzero eigenvalues of a rank-2 post-measurement state.
struct EigenPair {
  double mu1;
  double mu2;
};

using Matrix2 = std::array<std::array<double, 2>, 2>;

/// Validates an angle in [0, pi/2]; values within 1e-12 of the ends are
/// clamped.
double checked_angle(double radians, const char* what);

/// Maximal overlap between the two measurement bases: cos(eps) for
/// eps <= pi/4, sin(eps) otherwise.
double overlap_c(double epsilon);

/// SO(2) rotation by theta.
Matrix2 rotation(double theta);

/// Eigenvalues of rho_XB when X is measured in the basis O(theta)|i>.
/// theta is not range-checked; both eigenvalues have period pi in theta.
EigenPair post_measurement_eigs(double lambda, double theta);

/// T_q(X|B) + T_q(Y|B) for the scenario.
double conditional_sum(const Scenario& s);

/// T_q(A|B) of the Schmidt state, i.e. -t_q(lambda).
double schmidt_conditional_entropy(double lambda, EntropyOrder q);

namespace detail {

// Objective of the theta minimisation. Accepts any real theta (period pi/2).
double conditional_sum_at(double lambda, double theta, double epsilon,
                          EntropyOrder q);

// Analytic d/dtheta of conditional_sum_at.
double conditional_sum_derivative(double lambda, double theta, double epsilon,
                                  EntropyOrder q);

}  // namespace detail

}  // namespace entropic
