#include "pmg/casimir.hpp"
#include "pmg/checks.hpp"
#include "pmg/extended_phase.hpp"
#include "pmg/lorentz.hpp"
#include "pmg/orbit_dynamics.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pmg;

namespace {

CoalgebraPoint to_point(const Vec9& v) { return CoalgebraPoint{v}; }

GroupParams to_params(const Vec9& v) {
  GroupParams g;
  for (Generator gen : kGenerators) g[gen] = v[slot(gen)];
  return g;
}

Generator to_generator(const py::object& o) {
  if (py::isinstance<py::str>(o)) {
    const auto name = o.cast<std::string>();
    for (Generator g : kGenerators)
      if (generator_name(g) == name) return g;
    throw py::value_error("unknown generator '" + name + "'");
  }
  return generator_from_index(o.cast<int>());
}

py::list report_to_list(const Report& r) {
  py::list out;
  for (const auto& c : r) out.append(py::make_tuple(c.name, c.passed(), c.max_residual, c.threshold));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Poincare-Maxwell group PM(2+1): Lie algebra, coadjoint orbits, orbit and Lorentz dynamics.";

  py::list names;
  for (Generator g : kGenerators) names.append(std::string(generator_name(g)));
  m.attr("GENERATORS") = names;

  // Base first: later registrations are tried first.
  auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ChartSingularError>(m, "ChartSingularError", domain.ptr());
  py::register_exception<IntegrationError>(m, "IntegrationError", PyExc_RuntimeError);

  py::class_<LieAlgebra>(m, "LieAlgebra")
      .def(py::init<double>(), py::arg("c") = 1.0)
      .def_property_readonly("c", &LieAlgebra::c)
      .def("bracket",
           [](const LieAlgebra& a, const Vec9& x, const Vec9& y) {
             return a.bracket(AlgebraElement{x}, AlgebraElement{y}).coeffs;
           })
      .def("ad_matrix", [](const LieAlgebra& a, const py::object& g) { return a.ad_matrix(to_generator(g)); })
      .def("lie_poisson_matrix", [](const LieAlgebra& a, const Vec9& xi) { return a.lie_poisson_matrix(to_point(xi)); });

  m.def("exp_ad_closed", [](const py::object& g, double s, double c) { return exp_ad_closed(to_generator(g), s, c); },
        py::arg("generator"), py::arg("s"), py::arg("c") = 1.0);
  m.def("exp_matrix_generic", &exp_matrix_generic);
  m.def("coadjoint_matrix", [](const Vec9& params, double c) { return coadjoint_matrix(to_params(params), c); },
        py::arg("params"), py::arg("c") = 1.0);
  m.def("coad_apply",
        [](const Vec9& params, const Vec9& xi, double c) { return coad_apply(to_params(params), to_point(xi), c).coords; },
        py::arg("params"), py::arg("xi"), py::arg("c") = 1.0);

  py::class_<CasimirTriple>(m, "CasimirTriple")
      .def(py::init<>())
      .def(py::init([](double c0, double c1, double c2) { return CasimirTriple{c0, c1, c2}; }))
      .def_readwrite("c0", &CasimirTriple::c0)
      .def_readwrite("c1", &CasimirTriple::c1)
      .def_readwrite("c2", &CasimirTriple::c2)
      .def("__repr__", [](const CasimirTriple& t) {
        return "CasimirTriple(" + std::to_string(t.c0) + ", " + std::to_string(t.c1) + ", " + std::to_string(t.c2) + ")";
      });

  m.def("eval_casimirs", [](const Vec9& xi, double c) { return eval_casimirs(to_point(xi), c); }, py::arg("xi"),
        py::arg("c") = 1.0);
  m.def("kernel_residual", [](const Vec9& xi, double c) { return kernel_residual(to_point(xi), c); }, py::arg("xi"),
        py::arg("c") = 1.0);
  m.def(
      "classify",
      [](const Vec9& xi, double c, double tol) {
        const OrbitClass oc = classify(to_point(xi), c, tol);
        py::dict d;
        d["tag"] = std::string(orbit_tag_name(oc.tag));
        d["branch"] = oc.branch;
        d["chart_valid"] = oc.chart_valid;
        d["casimirs"] = oc.casimirs;
        return d;
      },
      py::arg("xi"), py::arg("c") = 1.0, py::arg("tol") = kDefaultClassifyTol);

  py::class_<OrbitChartPoint>(m, "ChartPoint")
      .def(py::init<>())
      .def_readwrite("E", &OrbitChartPoint::E)
      .def_readwrite("P", &OrbitChartPoint::P)
      .def_readwrite("K", &OrbitChartPoint::K)
      .def_readwrite("casimirs", &OrbitChartPoint::casimirs)
      .def_readwrite("branch", &OrbitChartPoint::branch)
      .def("coords", &OrbitChartPoint::coords);

  m.def("chart_embed", [](const OrbitChartPoint& p, double c) { return chart_embed(p, c).coords; }, py::arg("p"),
        py::arg("c") = 1.0);
  m.def("chart_project", [](const Vec9& xi, double c) { return chart_project(to_point(xi), c); }, py::arg("xi"),
        py::arg("c") = 1.0);
  m.def("poisson_matrix", [](const OrbitChartPoint& p, double c) { return poisson_matrix(p, c).entries; },
        py::arg("p"), py::arg("c") = 1.0);
  m.def("symplectic_matrix", [](const OrbitChartPoint& p, double c) { return symplectic_matrix(p, c).entries; },
        py::arg("p"), py::arg("c") = 1.0);
  m.def("orbit_hamiltonian", &orbit_hamiltonian, py::arg("p"), py::arg("c") = 1.0);
  m.def(
      "orbit_flow",
      [](const OrbitChartPoint& p0, double t_end, double c, int samples) {
        const OrbitTrajectory tr = orbit_flow(p0, t_end, c, samples);
        Eigen::MatrixXd coords(static_cast<Eigen::Index>(tr.numeric.size()), 6);
        for (std::size_t i = 0; i < tr.numeric.size(); ++i)
          coords.row(static_cast<Eigen::Index>(i)) = tr.numeric[i].coords().transpose();
        py::dict d;
        d["times"] = tr.times;
        d["coords"] = coords;
        d["max_deviation"] = tr.max_deviation;
        d["hamiltonian_drift"] = tr.hamiltonian_drift;
        d["casimir_drift"] = tr.casimir_drift;
        return d;
      },
      py::arg("p0"), py::arg("t_end"), py::arg("c") = 1.0, py::arg("samples") = 1000);

  py::class_<ParticleParams>(m, "ParticleParams")
      .def(py::init([](double q, double m0, double c) { return ParticleParams{q, m0, c}; }), py::arg("q") = 1.0,
           py::arg("m0") = 1.0, py::arg("c") = 1.0)
      .def_readwrite("q", &ParticleParams::q)
      .def_readwrite("m0", &ParticleParams::m0)
      .def_readwrite("c", &ParticleParams::c);

  py::class_<ExtendedPhaseState>(m, "PhaseState")
      .def(py::init<>())
      .def_readwrite("x", &ExtendedPhaseState::x)
      .def_readwrite("y", &ExtendedPhaseState::y)
      .def_readwrite("Px", &ExtendedPhaseState::Px)
      .def_readwrite("Py", &ExtendedPhaseState::Py)
      .def_readwrite("Ex", &ExtendedPhaseState::Ex)
      .def_readwrite("Ey", &ExtendedPhaseState::Ey)
      .def_readwrite("pix", &ExtendedPhaseState::pix)
      .def_readwrite("piy", &ExtendedPhaseState::piy)
      .def_readwrite("B", &ExtendedPhaseState::B)
      .def_readwrite("beta", &ExtendedPhaseState::beta)
      .def_readwrite("t", &ExtendedPhaseState::t);

  m.def("hamiltonian", &hamiltonian);
  m.def("moment_map", [](const ExtendedPhaseState& s, const ParticleParams& pp) { return moment_map(s, pp).coords; });
  m.def(
      "bracket_table_check",
      [](int samples, std::uint64_t seed, const ParticleParams& pp, bool finite_difference) {
        return bracket_table_check(samples, seed, pp,
                                   finite_difference ? GradientMode::FiniteDifference : GradientMode::Analytic)
            .max_deviation;
      },
      py::arg("samples"), py::arg("seed"), py::arg("pp"), py::arg("finite_difference") = false);
  m.def(
      "integrate_lorentz",
      [](const ExtendedPhaseState& s0, const ParticleParams& pp, double t_end, int samples) {
        const ClassicalTrajectory tr = integrate_lorentz(s0, pp, t_end, samples);
        Eigen::MatrixXd states(static_cast<Eigen::Index>(tr.samples.size()), kPhaseDim + 1);
        for (std::size_t i = 0; i < tr.samples.size(); ++i) {
          states(static_cast<Eigen::Index>(i), 0) = tr.samples[i].t;
          states.row(static_cast<Eigen::Index>(i)).tail<kPhaseDim>() = to_vector(tr.samples[i]).transpose();
        }
        py::dict d;
        d["states"] = states;
        d["energy_drift"] = tr.energy_drift;
        d["min_speed_margin"] = tr.min_speed_margin;
        return d;
      },
      py::arg("s0"), py::arg("pp"), py::arg("t_end"), py::arg("samples") = 1000);
  m.def(
      "equivalence_check",
      [](const ExtendedPhaseState& s0, const ParticleParams& pp, double t_end, int samples) {
        const EquivalenceReport r = equivalence_check(s0, pp, t_end, samples);
        py::dict d;
        d["orbit_deviation"] = r.max_orbit_deviation;
        d["integral_drift"] = r.max_integral_drift;
        d["casimir_drift"] = r.max_casimir_drift;
        d["constant_drift"] = r.max_constant_drift;
        d["orbit_flow_deviation"] = r.orbit_flow_deviation;
        return d;
      },
      py::arg("s0"), py::arg("pp"), py::arg("t_end"), py::arg("samples") = 1000);
  m.def(
      "measure_cyclotron",
      [](const ParticleParams& pp, double B, double p) {
        const CyclotronMeasurement c = measure_cyclotron(pp, B, p);
        return py::make_tuple(c.radius, c.period, c.expected_radius, c.expected_period);
      },
      py::arg("pp"), py::arg("B"), py::arg("p"));
  m.def(
      "algebra_check",
      [](std::uint64_t seed, double c) {
        AlgebraCheckOptions o;
        o.seed = seed;
        o.c = c;
        return report_to_list(algebra_check(o));
      },
      py::arg("seed") = 42, py::arg("c") = 1.0);
}
