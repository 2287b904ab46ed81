#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "optpred/chebyshev.hpp"
#include "optpred/design.hpp"
#include "optpred/errors.hpp"
#include "optpred/imaginary.hpp"
#include "optpred/io.hpp"
#include "optpred/regression.hpp"
#include "optpred/verify.hpp"

namespace py = pybind11;
using namespace optpred;

namespace {

std::vector<cplx> coeff_list(const ComplexPoly& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

std::vector<double> node_list(const NodeSet& nodes) { return {nodes.begin(), nodes.end()}; }

DiscreteMeasure measure_of(std::vector<double> nodes, std::vector<double> weights) {
  return DiscreteMeasure(NodeSet(std::move(nodes)), std::move(weights));
}

} // namespace

PYBIND11_MODULE(_optpred, m) {
  m.doc() = "Optimal polynomial prediction measures on [-1, 1]";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", error);
  py::register_exception<DomainError>(m, "DomainError", error);
  py::register_exception<RankDeficiencyError>(m, "RankDeficiencyError", error);
  py::register_exception<BracketError>(m, "BracketError", error);

  m.def("cheb_T", py::overload_cast<int, cplx>(&chebyshev::T), py::arg("n"), py::arg("z"));
  m.def("cheb_U", py::overload_cast<int, cplx>(&chebyshev::U), py::arg("n"), py::arg("z"));

  py::class_<ComplexPoly>(m, "ComplexPoly")
      .def(py::init<std::vector<cplx>>(), py::arg("chebyshev_coeffs"))
      .def_static("from_monomial", [](std::vector<cplx> c) { return ComplexPoly::from_monomial(c); })
      .def_property_readonly("degree", &ComplexPoly::degree)
      .def_property_readonly("coeffs", &coeff_list)
      .def("to_monomial", &ComplexPoly::to_monomial)
      .def("__call__", py::overload_cast<cplx>(&ComplexPoly::operator(), py::const_), py::arg("z"))
      .def("sup_norm", [](const ComplexPoly& p) { return sup_norm_interval(p).value; })
      .def("__repr__", [](const ComplexPoly& p) { return "ComplexPoly(degree=" + std::to_string(p.degree()) + ")"; });

  m.def("max_coeff_distance", &max_coeff_distance);

  m.def("christoffel",
        [](std::vector<double> nodes, std::vector<double> weights, int n, cplx z0) {
          return christoffel(measure_of(std::move(nodes), std::move(weights)), n, z0).value;
        },
        py::arg("nodes"), py::arg("weights"), py::arg("n"), py::arg("z0"));
  m.def("kernel_poly",
        [](std::vector<double> nodes, std::vector<double> weights, int n, cplx z0) {
          return kernel_poly(measure_of(std::move(nodes), std::move(weights)), n, z0);
        },
        py::arg("nodes"), py::arg("weights"), py::arg("n"), py::arg("z0"));
  m.def("directional_derivative_K",
        [](std::vector<double> nodes, std::vector<double> weights, double a, int n, cplx z0) {
          return directional_derivative_K(measure_of(std::move(nodes), std::move(weights)), a, n, z0);
        },
        py::arg("nodes"), py::arg("weights"), py::arg("a"), py::arg("n"), py::arg("z0"));

  m.def("hoel_levine_weights", [](std::vector<double> nodes, cplx z0) { return hoel_levine_weights(NodeSet(std::move(nodes)), z0); },
        py::arg("nodes"), py::arg("z0"));
  m.def("lebesgue_at", [](std::vector<double> nodes, cplx z0) { return lebesgue_at(NodeSet(std::move(nodes)), z0); },
        py::arg("nodes"), py::arg("z0"));
  m.def("extremal_signed_poly",
        [](std::vector<double> nodes, cplx z0) { return extremal_signed_poly(NodeSet(std::move(nodes)), z0); },
        py::arg("nodes"), py::arg("z0"));

  py::class_<Certificate>(m, "Certificate")
      .def_readonly("sup_norm", &Certificate::sup_norm)
      .def_readonly("max_violation", &Certificate::max_violation)
      .def_readonly("l2_mu_norm", &Certificate::l2_mu_norm)
      .def_readonly("on_support_moduli", &Certificate::on_support_moduli)
      .def_readonly("duality_gap", &Certificate::duality_gap)
      .def_property_readonly("certified", &Certificate::certified);

  py::class_<Design>(m, "Design")
      .def_property_readonly("nodes", [](const Design& d) { return node_list(d.measure.nodes()); })
      .def_property_readonly("weights",
                             [](const Design& d) { return std::vector<double>(d.measure.weights().begin(), d.measure.weights().end()); })
      .def_readonly("z0", &Design::z0)
      .def_readonly("n", &Design::n)
      .def_readonly("K_value", &Design::K_value)
      .def_readonly("lebesgue", &Design::lebesgue)
      .def_readonly("extremal_poly", &Design::extremal_poly)
      .def_readonly("certificate", &Design::certificate)
      .def_readonly("converged", &Design::converged)
      .def_readonly("evaluations", &Design::evaluations)
      .def("to_json", [](const Design& d) { return io::to_json(d).dump(2); })
      .def_static("from_json", [](const std::string& s) { return io::design_from_json(io::json::parse(s)); });

  m.def("make_design", [](std::vector<double> nodes, cplx z0) { return make_design(NodeSet(std::move(nodes)), z0); },
        py::arg("nodes"), py::arg("z0"));
  m.def("certify", &certify, py::arg("design"));
  m.def("is_exterior", &is_exterior, py::arg("z0"));
  m.def("optimize_support",
        [](int n, cplx z0, std::uint64_t seed, int starts, unsigned threads) {
          OptimizerOptions opts;
          opts.seed = seed;
          opts.starts = starts;
          opts.threads = threads;
          py::gil_scoped_release release;
          return optimize_support(n, z0, opts);
        },
        py::arg("n"), py::arg("z0"), py::arg("seed") = 0, py::arg("starts") = 8, py::arg("threads") = 1);

  m.def("q_poly", &imaginary::q_poly, py::arg("n"), py::arg("a"));
  m.def("r_poly", &imaginary::r_poly, py::arg("n"), py::arg("a"));
  m.def("r_zeros", &imaginary::r_zeros, py::arg("m"), py::arg("a"));
  m.def("pell_residual", &imaginary::pell_residual, py::arg("n"), py::arg("a"), py::arg("x"));
  m.def("imaginary_design", &imaginary::imaginary_design, py::arg("n"), py::arg("a"));
  m.def("growth_value", &imaginary::growth_value, py::arg("n"), py::arg("a"));
  m.def("optimal_K", &imaginary::optimal_K, py::arg("n"), py::arg("a"));
  m.def("growth_gap",
        [](int n, double a) {
          const auto g = imaginary::growth_gap(n, a);
          return py::make_tuple(g.lhs, g.rhs);
        },
        py::arg("n"), py::arg("a"));

  py::class_<regression::RegressionPlan>(m, "RegressionPlan")
      .def(py::init([](std::vector<double> nodes, std::vector<int> counts, double sigma, std::vector<double> theta) {
             regression::RegressionPlan plan{NodeSet(std::move(nodes)), std::move(counts), sigma, std::move(theta)};
             regression::validate(plan);
             return plan;
           }),
           py::arg("nodes"), py::arg("counts"), py::arg("sigma"), py::arg("theta"))
      .def_static("from_design",
                  [](const Design& d, int m, double sigma, std::vector<double> theta) {
                    return regression::make_plan(d.measure, m, sigma, std::move(theta));
                  },
                  py::arg("design"), py::arg("m"), py::arg("sigma"), py::arg("theta"))
      .def_property_readonly("nodes", [](const regression::RegressionPlan& p) { return node_list(p.nodes); })
      .def_readonly("counts", &regression::RegressionPlan::counts)
      .def_readonly("sigma", &regression::RegressionPlan::sigma)
      .def_readonly("theta", &regression::RegressionPlan::theta)
      .def_property_readonly("m", &regression::RegressionPlan::m);

  py::class_<regression::VarianceEstimate>(m, "VarianceEstimate")
      .def_readonly("empirical", &regression::VarianceEstimate::empirical)
      .def_readonly("predicted", &regression::VarianceEstimate::predicted)
      .def_readonly("replicates", &regression::VarianceEstimate::replicates)
      .def_readonly("rel_error", &regression::VarianceEstimate::rel_error)
      .def_readonly("half_width", &regression::VarianceEstimate::half_width)
      .def_readonly("seed", &regression::VarianceEstimate::seed);

  m.def("mc_predictor_variance",
        [](const regression::RegressionPlan& plan, cplx z0, int replicates, std::uint64_t seed, unsigned threads) {
          py::gil_scoped_release release;
          return regression::mc_predictor_variance(plan, z0, replicates, seed, threads);
        },
        py::arg("plan"), py::arg("z0"), py::arg("replicates") = 100000, py::arg("seed") = 0, py::arg("threads") = 1);

  m.def("verify",
        [](const std::string& suite, std::uint64_t seed) {
          py::list out;
          for (const auto& r : verify::run(suite, seed)) {
            py::dict d;
            d["name"] = r.name;
            d["passed"] = r.passed;
            d["worst"] = r.worst;
            d["threshold"] = r.threshold;
            d["cases"] = r.cases;
            out.append(d);
          }
          return out;
        },
        py::arg("suite") = "all", py::arg("seed") = 0);
}
