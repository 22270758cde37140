#pragma once

#include <cstddef>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

namespace entropic {

enum class Unit { Nats, Bits };

struct Column {
  std::string name;
  bool entropic;  ///< rescaled when displaying in bits
};

/// Rows of named real columns. Missing values are stored as NaN and printed
/// as empty fields.
class Table {
 public:
  explicit Table(std::vector<Column> columns);

  void add_row(std::vector<double> row);

  const std::vector<Column>& columns() const { return columns_; }
  const std::vector<std::vector<double>>& rows() const { return rows_; }
  std::size_t column_index(std::string_view name) const;

 private:
  std::vector<Column> columns_;
  std::vector<std::vector<double>> rows_;
};

/// 12 significant digits, "" for NaN.
std::string format_value(double v);

/// Comma-separated rendering: an optional "# ..." provenance line, the header
/// row, then one line per row. Entropic columns are divided by ln 2 for
/// Unit::Bits.
std::string to_csv(const Table& t, std::string_view comment, Unit unit);

enum class FigureId { Fig1, Fig2a, Fig2b, Fig3, Fig4 };

/// Parses "1", "2a", "2b", "3" or "4"; throws std::invalid_argument.
FigureId parse_figure_id(std::string_view id);
std::string to_string(FigureId id);

struct FigureConfig {
  std::size_t points = 201;          ///< samples along the swept axis
  std::size_t minimize_grid = 2000;  ///< coarse scan used for optimal values
  double tol = 1e-9;                 ///< theta tolerance of the minimiser
  double fig2_lambda = 0.1;
  double fig2a_epsilon = std::numbers::pi / 4.2;
  double fig2b_epsilon = std::numbers::pi / 6.0;
  double fig3_epsilon = std::numbers::pi / 8.0;
  std::vector<double> fig4_orders{0.5, 1.0, 1.5, 2.0};
};

/// Validates resolutions (>= 2) and tolerance (in (0, 1e-3]).
void validate(const FigureConfig& cfg);

/// Figure data:
///   1:     epsilon, optimal, b_mu, b_maj2, b_kpp        (lambda = 0, q = 1)
///   2a/2b: theta, exact, b_theta, b_bccrr               (fixed lambda, eps)
///   3:     lambda, exact, b_theta, b_bccrr  (eps fixed, theta = pi/2 - eps/2)
///   4:     q, lambda, c_star                 (lambda in [0, 1/2])
Table make_figure(FigureId id, const FigureConfig& cfg);

/// Provenance line carrying the full configuration.
std::string describe(FigureId id, const FigureConfig& cfg, Unit unit);

}  // namespace entropic
