#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "entropic/analysis.hpp"
#include "entropic/bounds.hpp"
#include "entropic/entropy.hpp"
#include "entropic/figures.hpp"
#include "entropic/keyrate.hpp"
#include "entropic/scenario.hpp"

namespace py = pybind11;
using namespace entropic;

namespace {

EntropyOrder order(double q) { return EntropyOrder(q); }

py::dict bound_set_dict(const BoundSet& b) {
  py::dict d;
  d["c"] = b.overlap;
  d["b_deutsch"] = b.b_deutsch;
  d["b_mu"] = b.b_mu;
  d["b_maj2"] = b.b_maj2;
  d["b_bccrr"] = b.b_bccrr ? py::cast(*b.b_bccrr) : py::none();
  d["b_kpp"] = b.b_kpp;
  d["b_theta"] = b.b_theta ? py::cast(*b.b_theta) : py::none();
  d["analytic_min"] = b.analytic_min ? py::cast(*b.analytic_min) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Conditional entropic uncertainty bounds for two-qubit states";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  // entropies
  m.def("eta", &eta, py::arg("x"));
  m.def("binary_shannon", &binary_shannon, py::arg("x"));
  m.def("eta_q", [](double x, double q) { return eta_q(x, order(q)); },
        py::arg("x"), py::arg("q"));
  m.def("tsallis_point",
        [](double x, double q) { return tsallis_point(x, order(q)); },
        py::arg("x"), py::arg("q"));
  m.def("tsallis_entropy",
        [](std::vector<double> probs, double q) {
          return tsallis_entropy(Spectrum(std::move(probs)), order(q));
        },
        py::arg("probs"), py::arg("q"));
  m.def("conditional_tsallis",
        [](std::vector<double> joint, std::vector<double> marginal, double q) {
          return conditional_tsallis(Spectrum(std::move(joint)),
                                     Spectrum(std::move(marginal)), order(q));
        },
        py::arg("joint"), py::arg("marginal"), py::arg("q"));

  // two-qubit model
  m.def("overlap_c", &overlap_c, py::arg("epsilon"));
  m.def("rotation", &rotation, py::arg("theta"));
  m.def("post_measurement_eigs",
        [](double lambda, double theta) {
          const EigenPair e = post_measurement_eigs(lambda, theta);
          return py::make_tuple(e.mu1, e.mu2);
        },
        py::arg("lambda_"), py::arg("theta"));
  m.def("conditional_sum",
        [](double lambda, double theta, double epsilon, double q) {
          return conditional_sum(Scenario(lambda, theta, epsilon, order(q)));
        },
        py::arg("lambda_"), py::arg("theta"), py::arg("epsilon"),
        py::arg("q") = 1.0);
  m.def("schmidt_conditional_entropy",
        [](double lambda, double q) {
          return schmidt_conditional_entropy(lambda, order(q));
        },
        py::arg("lambda_"), py::arg("q") = 1.0);

  // bounds
  m.def("bound_deutsch", &bound_deutsch, py::arg("c"));
  m.def("bound_mu", &bound_mu, py::arg("c"));
  m.def("bound_maj2", &bound_maj2, py::arg("c"));
  m.def("bound_bccrr", &bound_bccrr, py::arg("c"), py::arg("lambda_"));
  m.def("kpp_coefficient",
        [](double lambda, double q) { return kpp_coefficient(lambda, order(q)); },
        py::arg("lambda_"), py::arg("q") = 1.0);
  m.def("bound_kpp_tsallis",
        [](double lambda, double c, double q) {
          return bound_kpp_tsallis(lambda, c, order(q));
        },
        py::arg("lambda_"), py::arg("c"), py::arg("q") = 1.0);
  m.def("bound_state_dependent",
        [](double lambda, double theta, double epsilon, double q) {
          return bound_state_dependent(lambda, theta, epsilon, order(q));
        },
        py::arg("lambda_"), py::arg("theta"), py::arg("epsilon"),
        py::arg("q") = 1.0);
  m.def("bound_mixed_vn", &bound_mixed_vn, py::arg("s_b"), py::arg("c"));
  m.def("analytic_min_vn", &analytic_min_vn, py::arg("lambda_"), py::arg("c"));
  m.def("analytic_min_tsallis",
        [](double lambda, double c, double q) {
          return analytic_min_tsallis(lambda, c, order(q));
        },
        py::arg("lambda_"), py::arg("c"), py::arg("q"));
  m.def("boundary_condition",
        [](double lambda, double c, double q) {
          return boundary_condition(lambda, c, order(q));
        },
        py::arg("lambda_"), py::arg("c"), py::arg("q") = 1.0);
  m.def("all_bounds",
        [](double lambda, double theta, double epsilon, double q) {
          return bound_set_dict(
              all_bounds(Scenario(lambda, theta, epsilon, order(q))));
        },
        py::arg("lambda_"), py::arg("theta"), py::arg("epsilon"),
        py::arg("q") = 1.0);

  // numerical analysis
  py::class_<LocalMinimum>(m, "LocalMinimum")
      .def_readonly("theta", &LocalMinimum::theta)
      .def_readonly("value", &LocalMinimum::value)
      .def("__repr__", [](const LocalMinimum& lm) {
        return "LocalMinimum(theta=" + std::to_string(lm.theta) +
               ", value=" + std::to_string(lm.value) + ")";
      });
  py::class_<MinimizationResult>(m, "MinimizationResult")
      .def_readonly("theta_star", &MinimizationResult::theta_star)
      .def_readonly("min_value", &MinimizationResult::min_value)
      .def_readonly("local_minima", &MinimizationResult::local_minima)
      .def_property_readonly(
          "regime", [](const MinimizationResult& r) { return to_string(r.regime); });
  m.def("minimize_conditional_sum",
        [](double lambda, double epsilon, double q, double tol,
           std::size_t grid_points) {
          return minimize_conditional_sum(lambda, epsilon, order(q),
                                          {tol, grid_points});
        },
        py::arg("lambda_"), py::arg("epsilon"), py::arg("q") = 1.0,
        py::arg("tol") = 1e-9, py::arg("grid_points") = 2000);
  m.def("boundary_curve",
        [](double q, std::vector<double> lambdas) {
          std::vector<std::pair<double, double>> pts;
          for (const auto& p : boundary_curve(order(q), lambdas).points) {
            pts.emplace_back(p.lambda, p.c_star);
          }
          return pts;
        },
        py::arg("q"), py::arg("lambdas"));
  m.def("proposition_gap",
        [](double alpha, double p, double q) {
          return proposition_gap(alpha, p, order(q));
        },
        py::arg("alpha"), py::arg("p"), py::arg("q"));
  m.def("proposition_slope_origin",
        [](double alpha, double q) {
          return proposition_slope_origin(alpha, order(q));
        },
        py::arg("alpha"), py::arg("q"));
  m.def("verify_proposition",
        [](std::vector<double> alphas, std::vector<double> ps,
           std::vector<double> qs, double tol) {
          const PropositionReport r = verify_proposition(alphas, ps, qs, tol);
          py::dict d;
          d["grid_min_gap"] = r.grid_min_gap;
          d["equality_max_abs"] = r.equality_max_abs;
          d["violations"] = r.violations.size();
          return d;
        },
        py::arg("alphas"), py::arg("ps"), py::arg("qs"), py::arg("tol") = 1e-10);

  // key rate
  m.def("key_rate_lower_bound",
        [](double c, double s_b, double s_ab, double s_x, double s_y) {
          return key_rate_lower_bound({c, s_b, s_ab, s_x, s_y});
        },
        py::arg("c"), py::arg("s_b"), py::arg("s_a_given_b"),
        py::arg("s_x_given_xp"), py::arg("s_y_given_yp"));
  m.def("key_rate_for_scenario", &key_rate_for_scenario, py::arg("lambda_"),
        py::arg("epsilon"), py::arg("s_x_given_xp"), py::arg("s_y_given_yp"));

  // figure data
  m.def("figure_csv",
        [](const std::string& id, std::size_t points, bool bits) {
          FigureConfig cfg;
          cfg.points = points;
          const FigureId fid = parse_figure_id(id);
          const Unit unit = bits ? Unit::Bits : Unit::Nats;
          return to_csv(make_figure(fid, cfg), describe(fid, cfg, unit), unit);
        },
        py::arg("id"), py::arg("points") = 201, py::arg("bits") = false);
}
