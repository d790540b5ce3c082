#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pullback/oracle.hpp"
#include "pullback/parking.hpp"
#include "pullback/perm_count.hpp"
#include "pullback/recursion.hpp"

namespace py = pybind11;
using namespace pullback;

namespace {

// Counts cross the boundary as Python ints of any size.
py::int_ to_py(const Count& c) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(c.str().c_str(), nullptr, 10));
}

py::dict to_py(const SimulationResult& r) {
  py::list traces;
  for (const auto& t : r.traces) {
    py::dict d;
    d["car"] = t.car;
    d["preferred"] = t.preferred;
    d["backward_checked"] = t.backward_checked;
    d["forward_checked"] = t.forward_checked;
    d["parked_at"] = t.parked_at ? py::object(py::int_(*t.parked_at)) : py::object(py::none());
    traces.append(d);
  }
  py::dict out;
  out["status"] = to_string(r.status);
  out["offending_car"] = r.offending_car;
  out["outcome"] = r.outcome ? py::object(py::cast(*r.outcome)) : py::object(py::none());
  out["traces"] = traces;
  return out;
}

EnumerationLimits limits(std::uint64_t ceiling, unsigned jobs) { return EnumerationLimits{ceiling, jobs}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pullback parking functions";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);

  constexpr auto kCeiling = EnumerationLimits::kDefaultCeiling;

  m.def("simulate", [](const std::vector<int>& prefs, int n, int k, int l) {
    return to_py(simulate(prefs, Params{static_cast<int>(prefs.size()), n, k, l}));
  }, py::arg("prefs"), py::arg("n"), py::arg("k"), py::arg("l"));
  m.def("simulate_contained", [](const std::vector<int>& prefs, int spots, int k, int l) {
    return to_py(simulate_contained(prefs, static_cast<int>(prefs.size()), spots, k, l));
  }, py::arg("prefs"), py::arg("spots"), py::arg("k"), py::arg("l"));
  m.def("is_pullback_pf", [](const std::vector<int>& prefs, int n, int k, int l) {
    return is_pullback_pf(prefs, Params{static_cast<int>(prefs.size()), n, k, l});
  }, py::arg("prefs"), py::arg("n"), py::arg("k"), py::arg("l"));
  m.def("is_contained_pf", [](const std::vector<int>& prefs, int spots, int k, int l) {
    return is_contained_pf(prefs, static_cast<int>(prefs.size()), spots, k, l);
  }, py::arg("prefs"), py::arg("spots"), py::arg("k"), py::arg("l"));

  m.def("count_by_enumeration", [](int m_, int n, int k, int l, std::uint64_t ceiling, unsigned jobs) {
    Count c;
    {
      py::gil_scoped_release release;
      c = oracle::count_by_enumeration(Params{m_, n, k, l}, limits(ceiling, jobs));
    }
    return to_py(c);
  }, py::arg("m"), py::arg("n"), py::arg("k"), py::arg("l"), py::arg("ceiling") = kCeiling, py::arg("jobs") = 1);
  m.def("count_contained_by_enumeration", [](int a, int b, int k, int l, std::uint64_t ceiling) {
    return to_py(oracle::count_contained_by_enumeration(a, b, k, l, limits(ceiling, 1)));
  }, py::arg("a"), py::arg("b"), py::arg("k"), py::arg("l"), py::arg("ceiling") = kCeiling);
  m.def("count_weakly_increasing", [](int m_, int n, int k, int l, std::uint64_t ceiling) {
    return to_py(oracle::count_weakly_increasing(Params{m_, n, k, l}, limits(ceiling, 1)));
  }, py::arg("m"), py::arg("n"), py::arg("k"), py::arg("l"), py::arg("ceiling") = kCeiling);
  m.def("fiber_histogram", [](int m_, int n, int k, int l, std::uint64_t ceiling) {
    py::dict out;
    for (const auto& [word, c] : oracle::fiber_histogram(Params{m_, n, k, l}, limits(ceiling, 1))) {
      out[py::tuple(py::cast(word))] = to_py(c);
    }
    return out;
  }, py::arg("m"), py::arg("n"), py::arg("k"), py::arg("l"), py::arg("ceiling") = kCeiling);

  m.def("fiber_size", [](const std::vector<int>& word, int k, int l) { return to_py(perm::fiber_size(word, k, l)); },
        py::arg("word"), py::arg("k"), py::arg("l"));
  m.def("total_count", [](int m_, int n, int k, int l, std::uint64_t ceiling) {
    return to_py(perm::total_count(Params{m_, n, k, l}, limits(ceiling, 1)));
  }, py::arg("m"), py::arg("n"), py::arg("k"), py::arg("l"), py::arg("ceiling") = kCeiling);
  m.def("contained_count", [](int a, int b, int k, int l, std::uint64_t ceiling) {
    return to_py(perm::contained_count(a, b, k, l, limits(ceiling, 1)));
  }, py::arg("a"), py::arg("b"), py::arg("k"), py::arg("l"), py::arg("ceiling") = kCeiling);

  m.def("pf_count_recursive", [](int m_, int n, int k, int l) {
    return to_py(recursion::pf_count_recursive(Params{m_, n, k, l}));
  }, py::arg("m"), py::arg("n"), py::arg("k"), py::arg("l"));
  m.def("term_breakdown", [](int m_, int n, int k, int l) {
    py::list rows;
    for (const auto& r : recursion::term_breakdown(Params{m_, n, k, l}).rows) {
      py::dict d;
      d["spot"] = r.spot;
      d["x"] = to_py(r.x);
      d["y"] = to_py(r.y);
      d["z"] = to_py(r.z);
      d["v"] = to_py(r.v);
      d["w"] = to_py(r.w);
      rows.append(d);
    }
    return rows;
  }, py::arg("m"), py::arg("n"), py::arg("k"), py::arg("l"));
  m.def("knaples_published", [](int length, int k) { return to_py(recursion::knaples_published(length, k)); },
        py::arg("length"), py::arg("k"));
  m.def("classical_closed_form", [](int m_, int n) { return to_py(recursion::classical_closed_form(m_, n)); },
        py::arg("m"), py::arg("n"));
}
