#include "entropic/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "entropic/bounds.hpp"
#include "entropic/parallel.hpp"
#include "entropic/scenario.hpp"

namespace entropic {

namespace {

constexpr double kInvPhi = 0.6180339887498949;  // (sqrt(5) - 1) / 2
constexpr double kFlatVariation = 1e-12;
constexpr double kMaxTolerance = 1e-3;

void check_tolerance(double tol) {
  if (!(tol > 0.0 && tol <= kMaxTolerance)) {
    throw DomainError("tolerance must lie in (0, 1e-3], got " +
                      std::to_string(tol));
  }
}

double wrap_quarter_turn(double theta) {
  double w = std::fmod(theta, kHalfPi);
  if (w < 0.0) w += kHalfPi;
  if (w >= kHalfPi) w = 0.0;
  return w;
}

double circular_distance(double a, double b) {
  const double d = std::abs(a - b);
  return std::min(d, kHalfPi - d);
}

template <typename F>
double golden_section(F&& f, double a, double b, double tol) {
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

// Bisection on the sign of df in [a, b] given df(a) < 0 < df(b).
template <typename DF>
double derivative_root(DF&& df, double a, double b) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    if (df(mid) < 0.0) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::string to_string(Regime r) {
  switch (r) {
    case Regime::SingleMinimum:
      return "single";
    case Regime::DoubleMinimum:
      return "double";
    case Regime::Flat:
      return "flat";
  }
  return "unknown";
}

MinimizationResult minimize_conditional_sum(double lambda, double epsilon,
                                            EntropyOrder q,
                                            MinimizeOptions opts) {
  lambda = checked_probability(lambda, "lambda");
  epsilon = checked_angle(epsilon, "epsilon");
  check_tolerance(opts.tol);
  if (opts.grid_points < 8) {
    throw DomainError("minimisation grid needs at least 8 points");
  }

  auto objective = [&](double theta) {
    return detail::conditional_sum_at(lambda, theta, epsilon, q);
  };
  auto slope = [&](double theta) {
    return detail::conditional_sum_derivative(lambda, theta, epsilon, q);
  };

  const std::size_t n = opts.grid_points;
  const double step = kHalfPi / static_cast<double>(n);
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = objective(static_cast<double>(i) * step);
  }

  double variation = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    variation += std::abs(values[(i + 1) % n] - values[i]);
  }

  MinimizationResult result;
  if (variation < kFlatVariation) {
    const double guess = wrap_quarter_turn(kHalfPi - epsilon / 2.0);
    result.regime = Regime::Flat;
    result.theta_star = guess;
    result.min_value = objective(guess);
    result.local_minima.push_back({guess, result.min_value});
    return result;
  }

  std::vector<LocalMinimum> found;
  for (std::size_t i = 0; i < n; ++i) {
    const double prev = values[(i + n - 1) % n];
    const double next = values[(i + 1) % n];
    if (!(values[i] < prev && values[i] <= next)) continue;

    const double lo = (static_cast<double>(i) - 1.0) * step;
    const double hi = (static_cast<double>(i) + 1.0) * step;
    double theta = golden_section(objective, lo, hi, opts.tol);
    double value = objective(theta);
    if (slope(lo) < 0.0 && slope(hi) > 0.0) {
      const double polished = derivative_root(slope, lo, hi);
      const double polished_value = objective(polished);
      if (polished_value <= value) {
        theta = polished;
        value = polished_value;
      }
    }
    theta = wrap_quarter_turn(theta);
    // a minimiser sitting on the period seam is reported at 0, not just below pi/2
    if (kHalfPi - theta < 10.0 * opts.tol) theta = 0.0;
    found.push_back({theta, value});
  }

  std::sort(found.begin(), found.end(),
            [](const LocalMinimum& a, const LocalMinimum& b) {
              return a.theta < b.theta;
            });
  const double merge_radius = 10.0 * opts.tol;
  for (const auto& m : found) {
    auto close = std::find_if(
        result.local_minima.begin(), result.local_minima.end(),
        [&](const LocalMinimum& k) {
          return circular_distance(k.theta, m.theta) < merge_radius;
        });
    if (close == result.local_minima.end()) {
      result.local_minima.push_back(m);
    } else if (m.value < close->value) {
      *close = m;
    }
  }

  const auto best = std::min_element(
      result.local_minima.begin(), result.local_minima.end(),
      [](const LocalMinimum& a, const LocalMinimum& b) {
        return a.value < b.value;
      });
  result.theta_star = best->theta;
  result.min_value = best->value;
  result.regime = result.local_minima.size() == 1 ? Regime::SingleMinimum
                                                  : Regime::DoubleMinimum;
  return result;
}

BoundaryCurve boundary_curve(EntropyOrder q,
                             std::span<const double> lambda_grid) {
  constexpr double kEdge = 1e-9;
  const double lo_c = std::numbers::sqrt2 / 2.0 + kEdge;
  const double hi_c = 1.0 - kEdge;

  BoundaryCurve curve{q.value(), {}};
  for (double lambda : lambda_grid) {
    lambda = checked_probability(lambda, "lambda");
    if (lambda > 0.5 + kProbabilityClamp) {
      throw DomainError("boundary curve lambda must lie in [0, 1/2]");
    }
    lambda = std::min(lambda, 0.5);
    double a = lo_c;
    double b = hi_c;
    const double fa = boundary_margin(lambda, a, q);
    const double fb = boundary_margin(lambda, b, q);
    if (!(fa * fb < 0.0)) continue;
    const bool rising = fa < 0.0;
    while (b - a > kBoundaryResolution) {
      const double mid = 0.5 * (a + b);
      const double fm = boundary_margin(lambda, mid, q);
      if ((fm < 0.0) == rising) {
        a = mid;
      } else {
        b = mid;
      }
    }
    curve.points.push_back({lambda, 0.5 * (a + b)});
  }
  return curve;
}

double proposition_gap(double alpha, double p, EntropyOrder q) {
  alpha = checked_probability(alpha, "alpha");
  p = checked_probability(p, "p");
  const double mixed = alpha * p + (1.0 - alpha) * (1.0 - p);
  return tsallis_point(std::clamp(mixed, 0.0, 1.0), q) -
         2.0 * kpp_coefficient(alpha, q) * p * (1.0 - p) -
         tsallis_point(alpha, q);
}

double proposition_slope_origin(double alpha, EntropyOrder q) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("alpha must lie in (0, 1), got " + std::to_string(alpha));
  }
  if (q.is_limit() || q.value() <= 0.0) {
    throw DomainError("slope at the origin needs q > 0 outside the q = 1 band");
  }
  const double qv = q.value();
  const double head =
      std::pow(alpha, qv - 1.0) * (2.0 * alpha * (qv - 2.0) - qv);
  const double tail =
      (4.0 * alpha - 2.0 * alpha * qv + qv - 4.0) *
          std::pow(1.0 - alpha, qv - 1.0) +
      std::pow(2.0, 3.0 - qv);
  return (head + tail) / (qv - 1.0);
}

bool in_proposition_range(double q) {
  return (q > 0.0 && q <= 2.0) || q >= 3.0;
}

PropositionReport verify_proposition(std::span<const double> alpha_grid,
                                     std::span<const double> p_grid,
                                     std::span<const double> q_list,
                                     double tol) {
  check_tolerance(tol);
  if (alpha_grid.empty() || p_grid.empty() || q_list.empty()) {
    throw DomainError("proposition grids must not be empty");
  }
  std::vector<EntropyOrder> orders;
  for (double q : q_list) {
    EntropyOrder order(q);
    if (q <= 0.0) throw DomainError("proposition check needs q > 0");
    orders.push_back(order);
  }

  struct Cell {
    double min_gap = std::numeric_limits<double>::infinity();
    double max_abs = 0.0;
    std::vector<GapViolation> violations;
  };
  const std::size_t na = alpha_grid.size();
  std::vector<Cell> cells(orders.size() * na);
  parallel_for(cells.size(), [&](std::size_t idx) {
    const EntropyOrder q = orders[idx / na];
    const double alpha = alpha_grid[idx % na];
    const bool in_range = in_proposition_range(q.value());
    Cell& cell = cells[idx];
    for (double p : p_grid) {
      const double gap = proposition_gap(alpha, p, q);
      cell.min_gap = std::min(cell.min_gap, gap);
      cell.max_abs = std::max(cell.max_abs, std::abs(gap));
      if (in_range && gap < -tol) {
        cell.violations.push_back({alpha, p, q.value(), gap});
      }
    }
  });

  PropositionReport report;
  report.q_values.assign(q_list.begin(), q_list.end());
  report.grid_min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < orders.size(); ++k) {
    const double qv = orders[k].value();
    OrderGap og{qv, std::numeric_limits<double>::infinity(),
                in_proposition_range(qv)};
    for (std::size_t a = 0; a < na; ++a) {
      const Cell& cell = cells[k * na + a];
      og.min_gap = std::min(og.min_gap, cell.min_gap);
      if (qv == 2.0 || qv == 3.0) {
        report.equality_max_abs = std::max(report.equality_max_abs, cell.max_abs);
      }
      report.violations.insert(report.violations.end(), cell.violations.begin(),
                               cell.violations.end());
    }
    report.grid_min_gap = std::min(report.grid_min_gap, og.min_gap);
    report.per_order.push_back(og);
  }
  return report;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n < 2) throw DomainError("grid needs at least 2 points");
  std::vector<double> out(n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = lo + step * static_cast<double>(i);
  }
  out.back() = hi;
  return out;
}

BoundValidityReport verify_bound_validity(std::size_t points_per_axis,
                                          std::span<const double> q_list,
                                          double tol) {
  check_tolerance(tol);
  const auto lambdas = linspace(0.0, 1.0, points_per_axis);
  const auto angles = linspace(0.0, kHalfPi, points_per_axis);
  std::vector<EntropyOrder> orders;
  for (double q : q_list) orders.emplace_back(q);

  struct Cell {
    double min_kpp = std::numeric_limits<double>::infinity();
    double min_theta = std::numeric_limits<double>::infinity();
    std::vector<BoundFailure> failures;
  };
  const std::size_t nl = lambdas.size();
  std::vector<Cell> cells(orders.size() * nl);
  parallel_for(cells.size(), [&](std::size_t idx) {
    const EntropyOrder q = orders[idx / nl];
    const double lambda = lambdas[idx % nl];
    Cell& cell = cells[idx];
    for (double eps : angles) {
      const double kpp = bound_kpp_tsallis(lambda, overlap_c(eps), q);
      for (double theta : angles) {
        const double exact = conditional_sum(Scenario(lambda, theta, eps, q));
        const double b_theta = bound_state_dependent(lambda, theta, eps, q);
        cell.min_kpp = std::min(cell.min_kpp, exact - kpp);
        cell.min_theta = std::min(cell.min_theta, exact - b_theta);
        if (exact < kpp - tol) {
          cell.failures.push_back({lambda, eps, theta, q.value(), exact, kpp, "b_kpp"});
        }
        if (exact < b_theta - tol) {
          cell.failures.push_back(
              {lambda, eps, theta, q.value(), exact, b_theta, "b_theta"});
        }
      }
    }
  });

  BoundValidityReport report;
  report.checked = cells.size() * angles.size() * angles.size();
  report.min_slack_kpp = std::numeric_limits<double>::infinity();
  report.min_slack_theta = std::numeric_limits<double>::infinity();
  for (const Cell& cell : cells) {
    report.min_slack_kpp = std::min(report.min_slack_kpp, cell.min_kpp);
    report.min_slack_theta = std::min(report.min_slack_theta, cell.min_theta);
    report.failures.insert(report.failures.end(), cell.failures.begin(),
                           cell.failures.end());
  }
  return report;
}

}  // namespace entropic
