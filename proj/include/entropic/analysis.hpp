#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "entropic/entropy.hpp"

namespace entropic {

enum class Regime { SingleMinimum, DoubleMinimum, Flat };

std::string to_string(Regime r);

struct LocalMinimum {
  double theta;
  double value;
};

/// Outcome of minimising T_q(X|B) + T_q(Y|B) over theta in [0, pi/2).
struct MinimizationResult {
  double theta_star = 0.0;
  double min_value = 0.0;
  std::vector<LocalMinimum> local_minima;
  Regime regime = Regime::SingleMinimum;
};

struct MinimizeOptions {
  double tol = 1e-9;              ///< target accuracy in theta
  std::size_t grid_points = 2000; ///< coarse scan resolution on [0, pi/2)
};

/// Deterministic global minimisation over theta: a periodic coarse scan
/// brackets every local minimum, each bracket is narrowed by golden-section
/// search and then polished by bisection on the analytic derivative.
/// Minimisers closer than 10 * tol are merged.
MinimizationResult minimize_conditional_sum(double lambda, double epsilon,
                                            EntropyOrder q,
                                            MinimizeOptions opts = {});

struct BoundaryPoint {
  double lambda;
  double c_star;
};

struct BoundaryCurve {
  double q;
  std::vector<BoundaryPoint> points;
};

/// Resolution of the bisection in c.
inline constexpr double kBoundaryResolution = 1e-10;

/// For each lambda in [0, 1/2], the overlap c* in (sqrt(2)/2, 1) at which the
/// single-minimum condition changes sign. Lambdas without a sign change on the
/// open interval are omitted.
BoundaryCurve boundary_curve(EntropyOrder q,
                             std::span<const double> lambda_grid);

/// Gap of the point-entropy inequality used to derive the theta-dependent
/// bound:
///   f(p) = t_q(a p + (1-a)(1-p)) - 2 kpp_coefficient(a, q) p (1-p) - t_q(a).
/// f(0) = f(1/2) = 0; f >= 0 for q in (0, 2] and [3, inf), with equality
/// everywhere at q = 2 and q = 3.
double proposition_gap(double alpha, double p, EntropyOrder q);

/// Closed form of d f / d p at p = 0 (requires q outside the q -> 1 band).
double proposition_slope_origin(double alpha, EntropyOrder q);

/// True when the gap inequality is claimed for this order: q in (0, 2] or
/// q >= 3.
bool in_proposition_range(double q);

struct GapViolation {
  double alpha;
  double p;
  double q;
  double gap;
};

struct OrderGap {
  double q;
  double min_gap;
  bool in_range;
};

struct PropositionReport {
  std::vector<double> q_values;
  double grid_min_gap = 0.0;
  /// max |f| over the grid at q = 2 and q = 3 (0 when neither is present).
  double equality_max_abs = 0.0;
  /// Gaps below -tol at orders inside the proposition range.
  std::vector<GapViolation> violations;
  std::vector<OrderGap> per_order;
};

PropositionReport verify_proposition(std::span<const double> alpha_grid,
                                     std::span<const double> p_grid,
                                     std::span<const double> q_list,
                                     double tol);

/// n evenly spaced points covering [lo, hi] inclusive (n >= 2).
std::vector<double> linspace(double lo, double hi, std::size_t n);

struct BoundFailure {
  double lambda;
  double epsilon;
  double theta;
  double q;
  double exact;
  double bound;
  std::string which;
};

struct BoundValidityReport {
  std::size_t checked = 0;
  double min_slack_kpp = 0.0;
  double min_slack_theta = 0.0;
  std::vector<BoundFailure> failures;
};

/// Checks conditional_sum >= bound_kpp_tsallis - tol and
/// conditional_sum >= bound_state_dependent - tol on a uniform
/// lambda x epsilon x theta grid (endpoints included) for each q.
BoundValidityReport verify_bound_validity(std::size_t points_per_axis,
                                          std::span<const double> q_list,
                                          double tol);

}  // namespace entropic
