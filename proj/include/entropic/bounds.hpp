#pragma once

#include <optional>

#include "entropic/entropy.hpp"
#include "entropic/scenario.hpp"

namespace entropic {

/// Lower bounds on T_q(X|B) + T_q(Y|B) evaluated for one scenario.
/// Literature bounds (Deutsch, Maassen-Uffink, majorization) depend on the
/// overlap only; b_bccrr is defined for the von Neumann case only and
/// analytic_min is set only when the symmetric extremum is the global minimum.
struct BoundSet {
  double overlap = 0.0;
  double b_deutsch = 0.0;
  double b_mu = 0.0;
  double b_maj2 = 0.0;
  std::optional<double> b_bccrr;
  double b_kpp = 0.0;
  std::optional<double> b_theta;
  std::optional<double> analytic_min;
};

// State-independent bounds on H(X) + H(Y), c in (0, 1].
double bound_deutsch(double c);
double bound_mu(double c);
double bound_maj2(double c);

/// Memory-assisted bound B_MU + S(A|B) for the Schmidt state (nats).
double bound_bccrr(double c, double lambda);

/// Entanglement-dependent prefactor of (1 - c^2):
///   2 (l^q + (1-l)^q - 2^(1-q)) / (l^q + (1-l)^q + q - 2) * (1 - t_q(l)),
/// which tends to 2 (ln 2 - h(l)) as q -> 1. Rejects q = 0 where the ratio is
/// 0/0.
double kpp_coefficient(double lambda, EntropyOrder q);

/// State-independent Tsallis bound kpp_coefficient(lambda, q) * (1 - c^2).
double bound_kpp_tsallis(double lambda, double c, EntropyOrder q);

/// Theta-dependent bound
///   kpp_coefficient / 2 * (sin^2(2 theta + 2 eps) + sin^2(2 theta)).
/// Its minimum over theta is bound_kpp_tsallis.
double bound_state_dependent(double lambda, double theta, double epsilon,
                             EntropyOrder q);

/// von Neumann bound for a mixed state with memory entropy s_b (nats).
double bound_mixed_vn(double s_b, double c);

/// Conditional von Neumann sum at the symmetric extremum:
///   ln 4 + eta(1 + c - 2 l c) + eta(1 - c + 2 l c) - 2 h(l).
/// This is the global minimum only when boundary_condition holds.
double analytic_min_vn(double lambda, double c);

/// Tsallis counterpart of analytic_min_vn; delegates to it in the q -> 1 band.
double analytic_min_tsallis(double lambda, double c, EntropyOrder q);

/// Left-hand side of the single-minimum inequality, as written for
/// lambda <= 1/2 (lambda > 1/2 is folded onto 1 - lambda). For the von Neumann
/// case the condition reads lhs < 0, for Tsallis orders lhs > 0.
double boundary_lhs(double lambda, double c, EntropyOrder q);

/// Signed margin of the single-minimum condition: positive when the
/// symmetric extremum is a strict minimum, negative when it is a maximum.
double boundary_margin(double lambda, double c, EntropyOrder q);

/// True iff the symmetric extremum is the global minimum of the conditional
/// sum. Ties (margin exactly zero) and commuting observables (c = 1) count as
/// true.
bool boundary_condition(double lambda, double c, EntropyOrder q);

/// Every applicable bound for the scenario.
BoundSet all_bounds(const Scenario& s);

}  // namespace entropic
