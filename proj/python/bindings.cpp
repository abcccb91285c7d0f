#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wright/floquet.hpp"
#include "wright/prover.hpp"
#include "wright/seed.hpp"
#include "wright/simulate.hpp"

namespace py = pybind11;
using namespace wright;

namespace {

std::pair<double, double> ends(const Interval& x) { return {x.lo(), x.hi()}; }

py::dict region_dict(const Region& r) {
  py::dict d;
  d["q"] = ends(r.q());
  d["qbar"] = ends(r.qbar());
  d["m"] = ends(r.m());
  return d;
}

}  // namespace

PYBIND11_MODULE(_wright, m) {
  m.doc() = "Interval-arithmetic uniqueness certificates for periodic orbits of x'(t) = -a(e^{x(t-1)} - 1)";

  py::class_<Interval>(m, "Interval")
      .def(py::init<double>())
      .def(py::init<double, double>())
      .def_property_readonly("lo", &Interval::lo)
      .def_property_readonly("hi", &Interval::hi)
      .def("contains", py::overload_cast<double>(&Interval::contains, py::const_))
      .def("__add__", [](const Interval& a, const Interval& b) { return a + b; })
      .def("__sub__", [](const Interval& a, const Interval& b) { return a - b; })
      .def("__mul__", [](const Interval& a, const Interval& b) { return a * b; })
      .def("__truediv__", [](const Interval& a, const Interval& b) { return a / b; })
      .def("__eq__", [](const Interval& a, const Interval& b) { return a == b; })
      .def("__repr__", [](const Interval& a) { return "Interval(" + std::to_string(a.lo()) + ", " + std::to_string(a.hi()) + ")"; });
  m.def("iexp", [](const Interval& x) { return exp(x); });
  m.def("ilog", [](const Interval& x) { return log(x); });

  py::enum_<FloquetKind>(m, "FloquetKind")
      .value("BoundedStable", FloquetKind::BoundedStable)
      .value("StableByContradiction", FloquetKind::StableByContradiction)
      .value("Inconclusive", FloquetKind::Inconclusive);

  py::class_<ProofConfig>(m, "ProofConfig")
      .def(py::init<>())
      .def_readwrite("alpha_lo", &ProofConfig::alpha_lo)
      .def_readwrite("alpha_hi", &ProofConfig::alpha_hi)
      .def_readwrite("delta_alpha", &ProofConfig::delta_alpha)
      .def_readwrite("eps1", &ProofConfig::eps1)
      .def_readwrite("eps2", &ProofConfig::eps2)
      .def_readwrite("n_time", &ProofConfig::n_time)
      .def_readwrite("i0", &ProofConfig::i0)
      .def_readwrite("j0", &ProofConfig::j0)
      .def_readwrite("n_period", &ProofConfig::n_period)
      .def_readwrite("n_prune", &ProofConfig::n_prune)
      .def_readwrite("n_floquet", &ProofConfig::n_floquet)
      .def_readwrite("m_floquet", &ProofConfig::m_floquet)
      .def_readwrite("max_pushes", &ProofConfig::max_pushes)
      .def_readwrite("wall_budget_seconds", &ProofConfig::wall_budget_seconds)
      .def("to_json", &config_to_json)
      .def_static("from_json", &config_from_json)
      .def("hash", &config_hash);
  m.def("table_row", &table_row, py::arg("row"));

  m.def(
      "seed_long_is_empty",
      [](double lo, double hi, int i0, int j0, int n_time, int n_period) {
        return !seed_long(Interval(lo, hi), AprioriParams{i0, j0}, n_time, n_period).has_value();
      },
      py::arg("alpha_lo"), py::arg("alpha_hi"), py::arg("i0") = 2, py::arg("j0") = 20, py::arg("n_time") = 128,
      py::arg("n_period") = 10);

  m.def(
      "seed_regions",
      [](double lo, double hi, int i0, int j0, int n_time, int n_period) {
        py::list out;
        for (const Region& r : seed_pair(Interval(lo, hi), AprioriParams{i0, j0}, n_time, n_period))
          out.append(region_dict(r));
        return out;
      },
      py::arg("alpha_lo"), py::arg("alpha_hi"), py::arg("i0") = 2, py::arg("j0") = 20, py::arg("n_time") = 32,
      py::arg("n_period") = 10);

  m.def(
      "branch_and_prune",
      [](double lo, double hi, const ProofConfig& cfg, int jobs) {
        py::list out;
        std::vector<Region> regions;
        {
          py::gil_scoped_release release;
          regions = branch_and_prune(Interval(lo, hi), cfg, jobs);
        }
        for (const Region& r : regions) out.append(region_dict(r));
        return out;
      },
      py::arg("alpha_lo"), py::arg("alpha_hi"), py::arg("config"), py::arg("jobs") = 1);

  m.def(
      "prove_interval",
      [](double lo, double hi, const ProofConfig& cfg, int jobs) {
        ProofCertificate c;
        {
          py::gil_scoped_release release;
          c = prove_interval(Interval(lo, hi), cfg, jobs);
        }
        return certificate_to_json(c);
      },
      py::arg("alpha_lo"), py::arg("alpha_hi"), py::arg("config"), py::arg("jobs") = 1,
      "Run the proof and return the certificate as a JSON string.");

  m.def(
      "simulate",
      [](double alpha, double horizon, double step) {
        const Simulation s = simulate_sops(alpha, horizon, step);
        py::dict d;
        d["q"] = s.orbit.q();
        d["qbar"] = s.orbit.qbar();
        d["max"] = s.orbit.max_value();
        d["min"] = s.orbit.min_value();
        d["t"] = s.trajectory.t;
        d["x"] = s.trajectory.x;
        return d;
      },
      py::arg("alpha"), py::arg("horizon") = 400.0, py::arg("step") = 1.0 / 256);

  py::register_exception<NonConvergence>(m, "NonConvergence", PyExc_RuntimeError);
  py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_RuntimeError);
  py::register_exception<InvalidConfig>(m, "InvalidConfig", PyExc_ValueError);
}
