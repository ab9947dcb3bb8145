#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tracekit/analysis.hpp"
#include "tracekit/catalog.hpp"
#include "tracekit/session.hpp"

namespace py = pybind11;
using namespace tracekit;

namespace {

struct PyRing {
  AmbientRingPtr ring;
};
struct PyIdeal {
  Ideal ideal;
};
struct PyModule {
  FPModule mod;
};

RMat parse_matrix(const AmbientRingPtr& ring,
                  const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) throw std::runtime_error("empty matrix");
  std::size_t width = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != width) throw std::runtime_error("ragged matrix rows");
  RMat out(ring, int(rows.size()), int(width));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < width; ++c)
      out.at(int(r), int(c)) = parse_element(ring, rows[r][c]);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact trace ideals, endomorphism rings and their centers for finitely "
      "presented modules over F_p[x_1..x_n]/J.";
  m.attr("__version__") = "0.1.0";

  py::class_<PyIdeal>(m, "Ideal")
      .def("__str__", [](const PyIdeal& i) { return i.ideal.str(); })
      .def("__repr__",
           [](const PyIdeal& i) { return "Ideal" + i.ideal.str(); })
      .def("__eq__",
           [](const PyIdeal& a, const PyIdeal& b) {
             return a.ideal.equals(b.ideal);
           })
      .def("contains",
           [](const PyIdeal& i, const std::string& elt) {
             return i.ideal.contains(parse_element(i.ideal.ring(), elt));
           })
      .def("grade",
           [](const PyIdeal& i) -> py::object {
             ExtendedGrade g = grade(i.ideal);
             if (g.infinite) return py::none();
             return py::int_(g.value);
           })
      .def("module",
           [](const PyIdeal& i) { return PyModule{FPModule::from_ideal(i.ideal)}; });

  py::class_<PyModule>(m, "Module")
      .def_property_readonly(
          "gens", [](const PyModule& M) { return M.mod.gen_count(); })
      .def("presentation",
           [](const PyModule& M) { return M.mod.presentation().str(); })
      .def("minimal_generators",
           [](const PyModule& M) { return M.mod.minimal_generators(); })
      .def("is_zero", [](const PyModule& M) { return M.mod.is_zero_module(); })
      .def("trace_ideal",
           [](const PyModule& M) { return PyIdeal{trace_ideal(M.mod)}; })
      .def("annihilator",
           [](const PyModule& M) { return PyIdeal{annihilator(M.mod)}; })
      .def("dual_module",
           [](const PyModule& M) { return PyModule{dual(M.mod).module()}; })
      .def("tensor",
           [](const PyModule& M, const PyModule& N) {
             return PyModule{tensor(M.mod, N.mod)};
           })
      .def("direct_sum",
           [](const PyModule& M, const PyModule& N) {
             return PyModule{direct_sum(M.mod, N.mod)};
           })
      .def("is_reflexive", [](const PyModule& M) { return is_reflexive(M.mod); })
      .def("is_torsionless",
           [](const PyModule& M) { return is_torsionless(M.mod); })
      .def("is_rigid", [](const PyModule& M) { return is_rigid(M.mod); })
      .def("is_balanced", [](const PyModule& M) { return is_balanced(M.mod); })
      .def("has_free_summand",
           [](const PyModule& M) { return has_free_summand(M.mod); })
      .def("depth", [](const PyModule& M) { return depth_module(M.mod); })
      .def("ext_is_zero", [](const PyModule& M, int i, const PyModule& N) {
        return ext(i, M.mod, N.mod).is_zero();
      });

  py::class_<PyRing>(m, "Ring")
      .def(py::init([](std::uint32_t p, std::vector<std::string> vars,
                       std::vector<std::string> relations, bool domain) {
             return PyRing{
                 AmbientRing::make(p, std::move(vars), relations, domain)};
           }),
           py::arg("p") = kDefaultPrime, py::arg("vars"),
           py::arg("relations") = std::vector<std::string>{},
           py::arg("domain") = false)
      .def("__repr__", [](const PyRing& r) { return r.ring->name(); })
      .def_property_readonly(
          "dim", [](const PyRing& r) { return r.ring->krull_dimension(); })
      .def("depth", [](const PyRing& r) { return depth(r.ring); })
      .def("is_gorenstein",
           [](const PyRing& r) { return is_gorenstein(r.ring); })
      .def("ideal",
           [](const PyRing& r, std::vector<std::string> gens) {
             return PyIdeal{Ideal::span(r.ring, gens)};
           })
      .def("maximal_ideal",
           [](const PyRing& r) { return PyIdeal{maximal_ideal(r.ring)}; })
      .def("coker_module",
           [](const PyRing& r, std::vector<std::vector<std::string>> rows) {
             return PyModule{
                 FPModule::from_presentation(r.ring, parse_matrix(r.ring, rows))};
           })
      .def("free_module", [](const PyRing& r, int rank) {
        return PyModule{FPModule::free_module(r.ring, rank)};
      });

  m.def(
      "verify_main",
      [](const PyModule& M, std::uint64_t seed) {
        return verify_theorem_main(M.mod, seed).json();
      },
      py::arg("module"), py::arg("seed") = 0);
  m.def(
      "verify_main2",
      [](const PyModule& M, std::uint64_t seed) {
        return verify_theorem_main2(M.mod, seed).json();
      },
      py::arg("module"), py::arg("seed") = 0);
  m.def(
      "verify_trace_props",
      [](const PyModule& M, const PyModule& N, std::uint64_t seed) {
        return verify_trace_properties(M.mod, N.mod, seed).json();
      },
      py::arg("module"), py::arg("other"), py::arg("seed") = 0);
  m.def(
      "verify_free_summand",
      [](const PyModule& M, std::uint64_t seed) {
        return verify_free_summand_theorems(M.mod, seed).json();
      },
      py::arg("module"), py::arg("seed") = 0);
  m.def(
      "verify_rigidity",
      [](const PyModule& M, std::uint64_t seed) {
        return verify_rigidity_theorem(M.mod, seed).json();
      },
      py::arg("module"), py::arg("seed") = 0);
  m.def(
      "verify_hw",
      [](const PyIdeal& I, std::uint64_t seed) {
        return hw_trace_check(I.ideal, seed).json();
      },
      py::arg("ideal"), py::arg("seed") = 0);

  m.def(
      "run_session",
      [](const std::string& text, bool json, std::uint64_t seed, int threads) {
        SessionOptions opts;
        opts.json = json;
        opts.seed = seed;
        opts.threads = threads;
        SessionResult res = run_session(text, opts);
        return py::make_tuple(res.exit_code, res.output);
      },
      py::arg("text"), py::arg("json") = false, py::arg("seed") = 0,
      py::arg("threads") = 1);
}
