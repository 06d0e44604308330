#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "poincare/finite_group.hpp"
#include "poincare/json_io.hpp"
#include "poincare/orbits.hpp"
#include "poincare/spinstat.hpp"
#include "poincare/verify.hpp"

namespace py = pybind11;
using namespace poincare;

namespace {

// report structs already have JSON forms; hand them over as plain dicts
py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

FourVector vec4(const std::array<double, 4>& x) { return {x[0], x[1], x[2], x[3]}; }

BoostChoice section(const std::string& name) {
  if (name == "canonical") return BoostChoice::canonical;
  if (name == "helicity") return BoostChoice::helicity;
  throw DomainError("section must be canonical or helicity, got " + name);
}

KernelConfig kernel(const std::vector<double>& eps, const std::string& damping) {
  KernelConfig k;
  k.eps = eps;
  k.damping = parse_damping(damping);
  return k;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def(
      "covering_map", [](const Mat2& a) { return Eigen::Matrix4d(covering_map(SL2C::from(a)).m); }, py::arg("a"),
      "Lorentz matrix Lambda(A) of an SL(2,C) element (row mu, column nu).");
  m.def(
      "spin_rep", [](int twice_spin, const Mat2& a) { return spin_rep(SpinLabel(twice_spin), a); },
      py::arg("twice_spin"), py::arg("a"), "Spin-s matrix D^s(A) on symmetric tensors.");
  m.def(
      "boost",
      [](double mass, const std::array<double, 4>& p, const std::string& sec) {
        return Mat2(boost(section(sec), mass, vec4(p)).matrix());
      },
      py::arg("mass"), py::arg("p"), py::arg("section") = "canonical");
  m.def(
      "wigner_rotation",
      [](double mass, const std::array<double, 4>& p, const Mat2& a, const std::string& sec) {
        return Mat2(wigner_rotation(section(sec), mass, vec4(p), SL2C::from(a)).matrix());
      },
      py::arg("mass"), py::arg("p"), py::arg("a"), py::arg("section") = "canonical");

  m.def("builtin_groups", &builtin_group_names);
  m.def(
      "mackey", [](const std::string& name, std::uint64_t seed) { return to_python(mackey_json(verify_mackey(builtin_group(name), seed))); },
      py::arg("name"), py::arg("seed") = 1);
  m.def(
      "mackey_custom",
      [](const std::string& spec, std::uint64_t seed) {
        Json j;
        try {
          j = Json::parse(spec);
        } catch (const Json::parse_error& e) {
          throw DomainError(std::string("group spec is not valid JSON: ") + e.what());
        }
        return to_python(mackey_json(verify_mackey(group_from_json(j), seed)));
      },
      py::arg("spec_json"), py::arg("seed") = 1, "Mackey analysis of {A, H, action} given as a JSON string.");

  m.def(
      "jordan_pauli_delta",
      [](double mass, const std::array<double, 4>& xi) {
        const JordanPauli d = jordan_pauli_delta(mass, vec4(xi));
        py::dict out;
        out["value"] = d.value;
        out["extrapolation_error"] = d.extrapolation_error;
        out["near_light_cone"] = d.near_light_cone;
        return out;
      },
      py::arg("mass"), py::arg("xi"));
  m.def(
      "bracket_verdict",
      [](std::vector<int> twice_spins, double mass, std::vector<std::array<double, 4>> points, double ratio,
         std::vector<double> eps, const std::string& damping) {
        VerdictConfig c;
        c.twice_spins = std::move(twice_spins);
        c.mass = mass;
        for (const auto& p : points) c.points.push_back(vec4(p));
        c.ratio = ratio;
        c.kernel = kernel(eps, damping);
        py::gil_scoped_release release;
        const StatisticsReport r = spin_statistics_verdict(c);
        py::gil_scoped_acquire acquire;
        return to_python(statistics_json(r));
      },
      py::arg("twice_spins") = std::vector<int>{0, 1, 2}, py::arg("mass") = 1.0,
      py::arg("points") = std::vector<std::array<double, 4>>{}, py::arg("ratio") = 1e3,
      py::arg("eps") = KernelConfig().eps, py::arg("damping") = "energy",
      "Spin-statistics verdict; empty points means the default spacelike set.");

  m.def("verify_invariants", &verify_invariant_names);
  m.def(
      "verify",
      [](std::uint64_t seed, int samples, bool corrupt_epsilon, std::map<std::string, double> tolerance) {
        VerifyConfig c;
        c.seed = seed;
        c.samples = samples;
        c.corrupt_epsilon = corrupt_epsilon;
        c.tolerance = std::move(tolerance);
        VerifyReport r;
        {
          py::gil_scoped_release release;
          r = run_verify(c);
        }
        return to_python(verify_json(c, r));
      },
      py::arg("seed") = 1, py::arg("samples") = 200, py::arg("corrupt_epsilon") = false,
      py::arg("tolerance") = std::map<std::string, double>{});
}
