#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "entropic/figures.hpp"

using namespace entropic;
using doctest::Approx;

namespace {

struct Csv {
  std::string comment;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

Csv parse(const std::string& text) {
  Csv csv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0) {
      csv.comment = line.substr(2);
    } else if (csv.header.empty()) {
      csv.header = split(line);
    } else {
      csv.rows.push_back(split(line));
    }
  }
  return csv;
}

FigureConfig small_config() {
  FigureConfig cfg;
  cfg.points = 41;
  return cfg;
}

}  // namespace

TEST_CASE("value formatting") {
  CHECK(format_value(std::numbers::ln2) == "0.69314718056");
  CHECK(format_value(0.1) == "0.1");
  CHECK(format_value(-0.0) == "0");
  CHECK(format_value(1.0 / 3.0) == "0.333333333333");
  CHECK(format_value(std::nan("")) == "");
}

TEST_CASE("CSV rendering and unit scaling") {
  Table t({{"x", false}, {"s", true}});
  t.add_row({0.5, std::numbers::ln2});
  t.add_row({1.0, std::nan("")});
  CHECK(to_csv(t, "", Unit::Nats) == "x,s\n0.5,0.69314718056\n1,\n");
  CHECK(to_csv(t, "cfg=1", Unit::Bits) == "# cfg=1\nx,s\n0.5,1\n1,\n");
  CHECK_THROWS_AS(t.add_row({1.0}), std::logic_error);
  CHECK(t.column_index("s") == 1);
  CHECK_THROWS_AS(t.column_index("nope"), std::out_of_range);
}

TEST_CASE("figure ids") {
  CHECK(parse_figure_id("2a") == FigureId::Fig2a);
  CHECK(to_string(FigureId::Fig4) == "4");
  CHECK_THROWS_AS(parse_figure_id("5"), std::invalid_argument);
}

TEST_CASE("figure output is deterministic and rectangular") {
  const FigureConfig cfg = small_config();
  for (auto id : {FigureId::Fig1, FigureId::Fig2a, FigureId::Fig2b, FigureId::Fig3,
                  FigureId::Fig4}) {
    const std::string a = to_csv(make_figure(id, cfg), describe(id, cfg, Unit::Nats), Unit::Nats);
    const std::string b = to_csv(make_figure(id, cfg), describe(id, cfg, Unit::Nats), Unit::Nats);
    CHECK(a == b);
    const Csv csv = parse(a);
    CHECK(!csv.comment.empty());
    CHECK(!csv.rows.empty());
    for (const auto& row : csv.rows) CHECK(row.size() == csv.header.size());
  }
}

TEST_CASE("figure 1 columns") {
  const Table t = make_figure(FigureId::Fig1, small_config());
  const auto kpp = t.column_index("b_kpp");
  const auto mu = t.column_index("b_mu");
  const auto opt = t.column_index("optimal");
  for (const auto& row : t.rows()) {
    CHECK(row[kpp] >= row[mu] - 1e-12);
    CHECK(row[opt] >= row[kpp] - 1e-9);
  }
}

TEST_CASE("figures 2a, 2b and 3 stay above their bounds") {
  for (auto id : {FigureId::Fig2a, FigureId::Fig2b, FigureId::Fig3}) {
    const Table t = make_figure(id, small_config());
    const auto exact = t.column_index("exact");
    for (const auto& row : t.rows()) {
      CHECK(row[exact] >= row[t.column_index("b_theta")] - 1e-9);
      CHECK(row[exact] >= row[t.column_index("b_bccrr")] - 1e-9);
    }
  }
}

TEST_CASE("figure 3 at maximal entanglement") {
  const Table t = make_figure(FigureId::Fig3, small_config());
  const auto& mid = t.rows()[20];
  CHECK(mid[0] == 0.5);
  CHECK(std::abs(mid[1]) < 1e-12);
  CHECK(std::abs(mid[2]) < 1e-12);
}

TEST_CASE("figure 4 product-state threshold") {
  const Table t = make_figure(FigureId::Fig4, small_config());
  bool found = false;
  for (const auto& row : t.rows()) {
    if (row[0] == 1.0 && row[1] == 0.0) {
      CHECK(row[2] == Approx(0.8336).epsilon(5e-4));
      found = true;
    }
    CHECK(row[1] <= 0.5);
  }
  CHECK(found);
}

TEST_CASE("figure configuration validation") {
  FigureConfig cfg;
  cfg.points = 1;
  CHECK_THROWS(make_figure(FigureId::Fig3, cfg));
  cfg = FigureConfig{};
  cfg.tol = 0.0;
  CHECK_THROWS(make_figure(FigureId::Fig1, cfg));
}
