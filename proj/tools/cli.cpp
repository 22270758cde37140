#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "entropic/analysis.hpp"
#include "entropic/bounds.hpp"
#include "entropic/figures.hpp"
#include "entropic/keyrate.hpp"
#include "entropic/scenario.hpp"

namespace entropic::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << text;
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool given(const std::vector<std::string>& args, const std::string& flag) {
  return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
    return a == flag || a.rfind(flag + "=", 0) == 0;
  });
}

// Replaces `--config FILE` with one `--key=value` per line of FILE
// (blank lines and # comments skipped). Options given on the command line win.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  std::vector<std::string> from_file;
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string path;
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw CLI::ArgumentMismatch("--config needs a file");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      out.push_back(args[i]);
      continue;
    }
    std::ifstream file(path);
    if (!file) throw IoError("cannot read config file '" + path + "'");
    std::string line;
    while (std::getline(file, line)) {
      line = trim(line);
      if (line.empty() || line[0] == '#') continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        throw CLI::ConversionError("config line without '=': " + line);
      }
      from_file.push_back("--" + trim(line.substr(0, eq)) + "=" + trim(line.substr(eq + 1)));
    }
  }
  for (const auto& opt : from_file) {
    if (!given(out, opt.substr(0, opt.find('=')))) out.push_back(opt);
  }
  return out;
}

void check_tolerance(double tol, const char* name) {
  if (!(tol > 0.0 && tol <= 1e-3)) {
    throw DomainError(std::string(name) + " must lie in (0, 1e-3]");
  }
}

void check_resolution(std::size_t n, const char* name) {
  if (n < 2) throw DomainError(std::string(name) + " must be at least 2");
}

struct EvaluateArgs {
  double lambda = 0.0;
  double theta = 0.0;
  double epsilon = 0.0;
  double q = 1.0;
  bool bits = false;
};

int cmd_evaluate(const EvaluateArgs& a, std::ostream& out) {
  const Scenario s(a.lambda, a.theta, a.epsilon, EntropyOrder(a.q));
  const double exact = conditional_sum(s);
  const BoundSet b = all_bounds(s);
  Table t({{"lambda", false},
           {"theta", false},
           {"epsilon", false},
           {"q", false},
           {"c", false},
           {"exact", true},
           {"b_deutsch", true},
           {"b_mu", true},
           {"b_maj2", true},
           {"b_bccrr", true},
           {"b_kpp", true},
           {"b_theta", true},
           {"analytic_min", true}});
  t.add_row({s.lambda, s.theta, s.epsilon, s.q.value(), b.overlap, exact,
             b.b_deutsch, b.b_mu, b.b_maj2, b.b_bccrr.value_or(kNaN), b.b_kpp,
             b.b_theta.value_or(kNaN), b.analytic_min.value_or(kNaN)});
  out << to_csv(t, "", a.bits ? Unit::Bits : Unit::Nats);
  return kSuccess;
}

struct FigureArgs {
  std::string id;
  FigureConfig cfg;
  double fig2_epsilon = kNaN;
  double fig3_epsilon = kNaN;
  bool bits = false;
  std::string output;
};

int cmd_figure(FigureArgs a, std::ostream& out) {
  const FigureId id = parse_figure_id(a.id);
  if (!std::isnan(a.fig2_epsilon)) {
    a.cfg.fig2a_epsilon = a.cfg.fig2b_epsilon = a.fig2_epsilon;
  }
  if (!std::isnan(a.fig3_epsilon)) a.cfg.fig3_epsilon = a.fig3_epsilon;
  const Unit unit = a.bits ? Unit::Bits : Unit::Nats;
  const Table t = make_figure(id, a.cfg);
  emit(to_csv(t, describe(id, a.cfg, unit), unit), a.output, out);
  return kSuccess;
}

struct VerifyArgs {
  std::size_t alpha_points = 201;
  std::size_t p_points = 201;
  std::vector<double> orders{0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 10.0};
  double tol = 1e-10;
  std::size_t grid = 50;
  std::vector<double> bound_orders{0.5, 1.0, 1.5, 2.0, 3.0, 5.0};
  double bound_tol = 1e-9;
  bool strict_range = false;
  std::string output;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  check_resolution(a.alpha_points, "--alpha-points");
  check_resolution(a.p_points, "--p-points");
  check_resolution(a.grid, "--grid");
  check_tolerance(a.tol, "--tol");
  check_tolerance(a.bound_tol, "--bound-tol");
  for (double q : a.orders) {
    if (!(q > 0.0)) throw DomainError("--orders entries must be > 0");
  }
  for (double q : a.bound_orders) {
    if (!(q > 0.0)) throw DomainError("--bound-orders entries must be > 0");
  }

  const auto alphas = linspace(0.0, 1.0, a.alpha_points);
  const auto ps = linspace(0.0, 1.0, a.p_points);
  const PropositionReport prop = verify_proposition(alphas, ps, a.orders, a.tol);
  const BoundValidityReport bounds =
      verify_bound_validity(a.grid, a.bound_orders, a.bound_tol);

  std::vector<OrderGap> warnings;
  for (const auto& og : prop.per_order) {
    if (!og.in_range && og.min_gap < -a.tol) warnings.push_back(og);
  }

  std::ostringstream r;
  r << "# verify alpha_points=" << a.alpha_points << " p_points=" << a.p_points
    << " tol=" << format_value(a.tol) << " grid=" << a.grid
    << " bound_tol=" << format_value(a.bound_tol)
    << " strict_range=" << (a.strict_range ? 1 : 0) << '\n';
  r << "[proposition]\n";
  r << "grid_min_gap=" << format_value(prop.grid_min_gap) << '\n';
  r << "equality_max_abs=" << format_value(prop.equality_max_abs) << '\n';
  for (const auto& og : prop.per_order) {
    r << "q=" << format_value(og.q) << " min_gap=" << format_value(og.min_gap)
      << (og.in_range ? "" : " (outside proven range)") << '\n';
  }
  r << "violations=" << prop.violations.size() << '\n';
  for (const auto& v : prop.violations) {
    r << "  alpha=" << format_value(v.alpha) << " p=" << format_value(v.p)
      << " q=" << format_value(v.q) << " gap=" << format_value(v.gap) << '\n';
  }
  r << "[bounds]\n";
  r << "checked=" << bounds.checked << '\n';
  r << "min_slack_kpp=" << format_value(bounds.min_slack_kpp) << '\n';
  r << "min_slack_theta=" << format_value(bounds.min_slack_theta) << '\n';
  r << "failures=" << bounds.failures.size() << '\n';
  for (const auto& f : bounds.failures) {
    r << "  " << f.which << " lambda=" << format_value(f.lambda)
      << " epsilon=" << format_value(f.epsilon)
      << " theta=" << format_value(f.theta) << " q=" << format_value(f.q)
      << " exact=" << format_value(f.exact)
      << " bound=" << format_value(f.bound) << '\n';
  }
  if (!warnings.empty()) {
    r << "[warnings]\n";
    for (const auto& og : warnings) {
      r << "q=" << format_value(og.q)
        << " lies outside the proven range and has negative gap "
        << format_value(og.min_gap) << '\n';
    }
  }

  const bool failed = !prop.violations.empty() || !bounds.failures.empty() ||
                      (a.strict_range && !warnings.empty());
  r << "status=" << (failed ? "FAIL" : "PASS") << '\n';
  emit(r.str(), a.output, out);
  return failed ? kVerificationFailed : kSuccess;
}

struct KeyRateArgs {
  bool scenario = false;
  double c = kNaN;
  double sb = kNaN;
  double sab = kNaN;
  double sx = kNaN;
  double sy = kNaN;
  double lambda = kNaN;
  double epsilon = kNaN;
  bool bits = false;
};

int cmd_keyrate(const KeyRateArgs& a, std::ostream& out) {
  auto need = [](double v, const char* flag) {
    if (std::isnan(v)) throw DomainError(std::string(flag) + " is required");
    return v;
  };
  KeyRateInputs in{};
  if (a.scenario) {
    in = scenario_key_inputs(need(a.lambda, "--lambda"),
                             need(a.epsilon, "--epsilon"), need(a.sx, "--sx"),
                             need(a.sy, "--sy"));
  } else {
    double c = need(a.c, "--c");
    // accept sqrt(2)/2 typed to four decimals (0.7071)
    constexpr double kRootHalf = std::numbers::sqrt2 / 2.0;
    if (c < kRootHalf && c >= kRootHalf - 1e-4) c = kRootHalf;
    in = {c, need(a.sb, "--sb"), need(a.sab, "--sab"), need(a.sx, "--sx"),
          need(a.sy, "--sy")};
  }
  const double k = key_rate_lower_bound(in);
  Table t({{"k_lower_bound", true}, {"positive_key", false}});
  t.add_row({k, positive_key(in) ? 1.0 : 0.0});
  out << to_csv(t, "", a.bits ? Unit::Bits : Unit::Nats);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Conditional entropic uncertainty bounds for two-qubit states",
               "entropic_bounds"};
  app.require_subcommand(1);
  std::string config_path;  // consumed by expand_config; declared for --help

  EvaluateArgs ev;
  auto* evaluate =
      app.add_subcommand("evaluate", "Exact conditional sum and all bounds");
  evaluate->add_option("--config", config_path, "key=value file with option values");
  evaluate->add_option("--lambda", ev.lambda, "Schmidt weight")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  evaluate->add_option("--theta", ev.theta, "basis angle of X (radians)")
      ->required()
      ->check(CLI::Range(0.0, kHalfPi + 1e-12));
  evaluate->add_option("--epsilon", ev.epsilon, "angle between bases (radians)")
      ->required()
      ->check(CLI::Range(0.0, kHalfPi + 1e-12));
  evaluate->add_option("--q", ev.q, "entropy order")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  evaluate->add_flag("--bits", ev.bits, "report entropies in bits");

  FigureArgs fig;
  auto* figure = app.add_subcommand("figure", "Emit figure data as CSV");
  figure->add_option("--config", config_path, "key=value file with option values");
  figure->add_option("id", fig.id, "figure id: 1, 2a, 2b, 3 or 4")->required();
  figure->add_option("--points", fig.cfg.points, "samples along the swept axis")
      ->capture_default_str();
  figure->add_option("--minimize-grid", fig.cfg.minimize_grid,
                     "coarse scan of the theta minimiser")
      ->capture_default_str();
  figure->add_option("--tol", fig.cfg.tol, "theta tolerance of the minimiser")
      ->capture_default_str();
  figure->add_option("--lambda", fig.cfg.fig2_lambda, "lambda for figures 2a/2b")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  figure->add_option("--epsilon", fig.fig2_epsilon,
                     "epsilon override for figures 2a/2b")
      ->check(CLI::Range(0.0, kHalfPi + 1e-12));
  figure->add_option("--fig3-epsilon", fig.fig3_epsilon,
                     "epsilon override for figure 3")
      ->check(CLI::Range(0.0, kHalfPi + 1e-12));
  figure->add_option("--orders", fig.cfg.fig4_orders, "entropy orders for figure 4")
      ->delimiter(',')
      ->capture_default_str();
  figure->add_flag("--bits", fig.bits, "report entropies in bits");
  figure->add_option("-o,--output", fig.output, "output file (default stdout)");

  VerifyArgs ver;
  auto* verify = app.add_subcommand(
      "verify", "Check the gap inequality and bound validity on grids");
  verify->add_option("--config", config_path, "key=value file with option values");
  verify->add_option("--alpha-points", ver.alpha_points, "alpha samples on [0, 1]")
      ->capture_default_str();
  verify->add_option("--p-points", ver.p_points, "p samples on [0, 1]")
      ->capture_default_str();
  verify->add_option("--orders", ver.orders, "orders for the gap inequality")
      ->delimiter(',')
      ->capture_default_str();
  verify->add_option("--tol", ver.tol, "allowed negative gap")
      ->capture_default_str();
  verify->add_option("--grid", ver.grid, "points per axis of the bound sweep")
      ->capture_default_str();
  verify->add_option("--bound-orders", ver.bound_orders,
                     "orders for the bound sweep")
      ->delimiter(',')
      ->capture_default_str();
  verify->add_option("--bound-tol", ver.bound_tol, "allowed bound violation")
      ->capture_default_str();
  verify->add_flag("--strict-range", ver.strict_range,
                   "treat negative gaps outside the proven range as failures");
  verify->add_option("-o,--output", ver.output, "report file (default stdout)");

  KeyRateArgs kr;
  auto* keyrate = app.add_subcommand("keyrate", "Extractable key lower bound");
  keyrate->add_option("--config", config_path, "key=value file with option values");
  keyrate->add_flag("--scenario", kr.scenario,
                    "derive c, S(B), S(A|B) from --lambda and --epsilon");
  keyrate->add_option("--c", kr.c, "measurement overlap");
  keyrate->add_option("--sb", kr.sb, "S(B) in nats");
  keyrate->add_option("--sab", kr.sab, "S(A|B) in nats");
  keyrate->add_option("--sx", kr.sx, "S(X|X') in nats");
  keyrate->add_option("--sy", kr.sy, "S(Y|Y') in nats");
  keyrate->add_option("--lambda", kr.lambda, "Schmidt weight (with --scenario)");
  keyrate->add_option("--epsilon", kr.epsilon,
                      "angle between bases (with --scenario)");
  keyrate->add_flag("--bits", kr.bits, "report the bound in bits");

  std::vector<std::string> expanded;
  try {
    expanded = expand_config(args);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  std::vector<std::string> reversed(expanded.rbegin(), expanded.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*evaluate) return cmd_evaluate(ev, out);
    if (*figure) return cmd_figure(fig, out);
    if (*verify) return cmd_verify(ver, out);
    if (*keyrate) return cmd_keyrate(kr, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace entropic::cli
