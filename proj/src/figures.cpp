#include "entropic/figures.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "entropic/analysis.hpp"
#include "entropic/bounds.hpp"
#include "entropic/parallel.hpp"
#include "entropic/scenario.hpp"

namespace entropic {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Table theta_sweep(double lambda, double epsilon, const FigureConfig& cfg) {
  const EntropyOrder q = EntropyOrder::von_neumann();
  const double c = overlap_c(epsilon);
  const double bccrr = bound_bccrr(c, lambda);
  Table t({{"theta", false}, {"exact", true}, {"b_theta", true}, {"b_bccrr", true}});
  for (double theta : linspace(0.0, kHalfPi, cfg.points)) {
    t.add_row({theta, conditional_sum(Scenario(lambda, theta, epsilon, q)),
               bound_state_dependent(lambda, theta, epsilon, q), bccrr});
  }
  return t;
}

Table figure_one(const FigureConfig& cfg) {
  const EntropyOrder q = EntropyOrder::von_neumann();
  const auto eps = linspace(0.0, kHalfPi, cfg.points);
  std::vector<double> optimal(eps.size());
  parallel_for(eps.size(), [&](std::size_t i) {
    optimal[i] = minimize_conditional_sum(0.0, eps[i], q,
                                          {cfg.tol, cfg.minimize_grid})
                     .min_value;
  });
  Table t({{"epsilon", false},
           {"optimal", true},
           {"b_mu", true},
           {"b_maj2", true},
           {"b_kpp", true}});
  for (std::size_t i = 0; i < eps.size(); ++i) {
    const double c = overlap_c(eps[i]);
    t.add_row({eps[i], optimal[i], bound_mu(c), bound_maj2(c),
               bound_kpp_tsallis(0.0, c, q)});
  }
  return t;
}

Table figure_three(const FigureConfig& cfg) {
  const EntropyOrder q = EntropyOrder::von_neumann();
  const double epsilon = cfg.fig3_epsilon;
  const double theta = kHalfPi - epsilon / 2.0;
  const double c = overlap_c(epsilon);
  Table t({{"lambda", false}, {"exact", true}, {"b_theta", true}, {"b_bccrr", true}});
  for (double lambda : linspace(0.0, 1.0, cfg.points)) {
    t.add_row({lambda, conditional_sum(Scenario(lambda, theta, epsilon, q)),
               bound_state_dependent(lambda, theta, epsilon, q),
               bound_bccrr(c, lambda)});
  }
  return t;
}

Table figure_four(const FigureConfig& cfg) {
  const auto lambdas = linspace(0.0, 0.5, cfg.points);
  Table t({{"q", false}, {"lambda", false}, {"c_star", false}});
  for (double qv : cfg.fig4_orders) {
    const BoundaryCurve curve = boundary_curve(EntropyOrder(qv), lambdas);
    for (const auto& pt : curve.points) {
      t.add_row({qv, pt.lambda, pt.c_star});
    }
  }
  return t;
}

}  // namespace

Table::Table(std::vector<Column> columns) : columns_(std::move(columns)) {}

void Table::add_row(std::vector<double> row) {
  if (row.size() != columns_.size()) {
    throw std::logic_error("row width does not match column count");
  }
  rows_.push_back(std::move(row));
}

std::size_t Table::column_index(std::string_view name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i].name == name) return i;
  }
  throw std::out_of_range("no column named " + std::string(name));
}

std::string format_value(double v) {
  if (std::isnan(v)) return {};
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string to_csv(const Table& t, std::string_view comment, Unit unit) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << '\n';
  const auto& cols = t.columns();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    out << (i ? "," : "") << cols[i].name;
  }
  out << '\n';
  for (const auto& row : t.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      double v = row[i];
      if (unit == Unit::Bits && cols[i].entropic) v /= std::numbers::ln2;
      out << (i ? "," : "") << format_value(v);
    }
    out << '\n';
  }
  return out.str();
}

FigureId parse_figure_id(std::string_view id) {
  if (id == "1") return FigureId::Fig1;
  if (id == "2a") return FigureId::Fig2a;
  if (id == "2b") return FigureId::Fig2b;
  if (id == "3") return FigureId::Fig3;
  if (id == "4") return FigureId::Fig4;
  throw std::invalid_argument("unknown figure id '" + std::string(id) +
                              "' (expected 1, 2a, 2b, 3 or 4)");
}

std::string to_string(FigureId id) {
  switch (id) {
    case FigureId::Fig1:
      return "1";
    case FigureId::Fig2a:
      return "2a";
    case FigureId::Fig2b:
      return "2b";
    case FigureId::Fig3:
      return "3";
    case FigureId::Fig4:
      return "4";
  }
  return "?";
}

void validate(const FigureConfig& cfg) {
  if (cfg.points < 2 || cfg.minimize_grid < 8) {
    throw DomainError("grid resolutions must be at least 2 (minimiser grid 8)");
  }
  if (!(cfg.tol > 0.0 && cfg.tol <= 1e-3)) {
    throw DomainError("tolerance must lie in (0, 1e-3]");
  }
}

Table make_figure(FigureId id, const FigureConfig& cfg) {
  validate(cfg);
  switch (id) {
    case FigureId::Fig1:
      return figure_one(cfg);
    case FigureId::Fig2a:
      return theta_sweep(cfg.fig2_lambda, cfg.fig2a_epsilon, cfg);
    case FigureId::Fig2b:
      return theta_sweep(cfg.fig2_lambda, cfg.fig2b_epsilon, cfg);
    case FigureId::Fig3:
      return figure_three(cfg);
    case FigureId::Fig4:
      return figure_four(cfg);
  }
  throw std::logic_error("unhandled figure id");
}

std::string describe(FigureId id, const FigureConfig& cfg, Unit unit) {
  std::ostringstream out;
  out << "figure=" << to_string(id) << " points=" << cfg.points
      << " minimize_grid=" << cfg.minimize_grid
      << " tol=" << format_value(cfg.tol)
      << " unit=" << (unit == Unit::Bits ? "bits" : "nats");
  switch (id) {
    case FigureId::Fig1:
      out << " lambda=0 q=1";
      break;
    case FigureId::Fig2a:
      out << " lambda=" << format_value(cfg.fig2_lambda)
          << " epsilon=" << format_value(cfg.fig2a_epsilon) << " q=1";
      break;
    case FigureId::Fig2b:
      out << " lambda=" << format_value(cfg.fig2_lambda)
          << " epsilon=" << format_value(cfg.fig2b_epsilon) << " q=1";
      break;
    case FigureId::Fig3:
      out << " epsilon=" << format_value(cfg.fig3_epsilon)
          << " theta=pi/2-epsilon/2 q=1";
      break;
    case FigureId::Fig4: {
      out << " orders=";
      for (std::size_t i = 0; i < cfg.fig4_orders.size(); ++i) {
        out << (i ? ";" : "") << format_value(cfg.fig4_orders[i]);
      }
      break;
    }
  }
  return out.str();
}

}  // namespace entropic
