#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fockspace/clifford.hpp"
#include "fockspace/hydrogen.hpp"
#include "fockspace/identities.hpp"
#include "fockspace/quadmaps.hpp"
#include "fockspace/specfun.hpp"
#include "fockspace/verify.hpp"

namespace py = pybind11;
namespace fs = fockspace;

namespace {

fs::PhaseConvention phase_from(const std::string& s) {
  if (s == "printed") return fs::PhaseConvention::printed;
  if (s == "fourier") return fs::PhaseConvention::fourier;
  throw fs::DomainError("phase must be 'printed' or 'fourier'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hydrogen wavefunctions, quadratic maps and Clifford determinant identities";

  py::register_exception<fs::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<fs::IndexError>(m, "IndexError", PyExc_IndexError);
  py::register_exception<fs::SingularityError>(m, "SingularityError", PyExc_ArithmeticError);
  py::register_exception<fs::DimensionError>(m, "DimensionError", PyExc_ValueError);

  m.def("laguerre", &fs::laguerre, py::arg("k"), py::arg("a"), py::arg("x"));
  m.def("gegenbauer", &fs::gegenbauer, py::arg("m"), py::arg("a"), py::arg("x"));
  m.def("spherical_harmonic", &fs::spherical_harmonic, py::arg("l"), py::arg("m"), py::arg("theta"), py::arg("phi"));

  m.def("radial_position", [](int n, int l, double r) { return fs::radial_position(n, l, r); }, py::arg("n"),
        py::arg("l"), py::arg("r"));
  m.def("momentum_radial", &fs::momentum_radial, py::arg("n"), py::arg("l"), py::arg("p"));
  m.def(
      "psi_position",
      [](int n, int l, int mm, const fs::Vec3& r) { return fs::psi_position(fs::QuantumNumbers::make(n, l, mm), r); },
      py::arg("n"), py::arg("l"), py::arg("m"), py::arg("r"));
  m.def(
      "psi_momentum",
      [](int n, int l, int mm, const fs::Vec3& p, const std::string& phase) {
        return fs::psi_momentum(fs::QuantumNumbers::make(n, l, mm), p, phase_from(phase));
      },
      py::arg("n"), py::arg("l"), py::arg("m"), py::arg("p"), py::arg("phase") = "printed");
  m.def("energy", &fs::energy, py::arg("n"));
  m.def("fock_map", [](const fs::Vec3& p, double delta) { return fs::fock_map(p, delta).y; }, py::arg("p"),
        py::arg("delta"));

  m.def("ks_map", [](const fs::Vec4& u) { return fs::ks_map(u).x; }, py::arg("u"));
  m.def("hurwitz_map", [](const fs::Vec8& u) { return fs::hurwitz_map(u).x; }, py::arg("u"));
  m.def("ks_jacobian", [](const fs::Vec4& u) { return fs::ks_jacobian(u); }, py::arg("u"));
  m.def(
      "ks_integral",
      [](const std::function<double(const fs::Vec3&)>& f, const std::string& method, int nodes,
         std::uint64_t samples, std::uint64_t seed) {
        fs::KsIntegralOptions o;
        if (method == "quadrature") o.method = fs::KsMethod::quadrature;
        else if (method == "monte_carlo") o.method = fs::KsMethod::monte_carlo;
        else throw fs::DomainError("method must be 'quadrature' or 'monte_carlo'");
        o.nodes = nodes;
        o.samples = samples;
        o.seed = seed;
        const fs::KsIntegralResult r = fs::ks_integral(f, o);
        return py::make_tuple(r.value, r.error_estimate);
      },
      py::arg("f"), py::arg("method") = "quadrature", py::arg("nodes") = 40, py::arg("samples") = 1'000'000,
      py::arg("seed") = 42);

  m.def("build_A", [](int n, const std::vector<double>& x) { return fs::build_A(n, x).entries; }, py::arg("n"),
        py::arg("x"));
  m.def("gammas", &fs::gammas, py::arg("n"));
  m.def(
      "det_identity",
      [](int n, const std::vector<double>& x, fs::cplx alpha) {
        const fs::GaussianResult r = fs::det_identity(n, x, alpha);
        return py::make_tuple(r.value, r.closed_form, r.residual);
      },
      py::arg("n"), py::arg("x"), py::arg("alpha"));

  m.def(
      "duplication_check",
      [](int n) {
        const fs::Duplication d = fs::duplication_check(n);
        return py::make_tuple(d.printed_ratio, d.corrected_residual);
      },
      py::arg("n"));

  m.def("suite_names", &fs::suite_names);
  m.def(
      "run_suite_json",
      [](const std::string& suite, std::uint64_t seed, const std::map<std::string, double>& tol) {
        fs::VerifyOptions o;
        o.seed = seed;
        o.tolerance_overrides = tol;
        py::gil_scoped_release release;
        return fs::run_suite(suite, o).to_json().dump();
      },
      py::arg("suite"), py::arg("seed") = 42, py::arg("tol") = std::map<std::string, double>{});
}
