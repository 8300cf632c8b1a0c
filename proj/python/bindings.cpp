#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "curvecount/chern.hpp"
#include "curvecount/family_recursion.hpp"
#include "curvecount/kontsevich.hpp"
#include "curvecount/verification.hpp"

namespace py = pybind11;
using namespace curvecount;

namespace {

// Exact conversion through the decimal representation.
py::int_ to_pyint(const ExactCount& v) {
  const std::string text = to_decimal(v);
  PyObject* obj = PyLong_FromString(text.c_str(), nullptr, 10);
  if (obj == nullptr) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

ExactCount engine_count(CountEngine& engine, int d, int m, int theta, std::optional<int> r) {
  const CurveClass alpha{d, m};
  const int points = r.value_or(expected_points(alpha, theta));
  if (points < 0) throw InvalidQuery("computed r = 3d+1-m-theta is negative");
  return engine.count(CountQuery{alpha, points, theta});
}

CountEngine& shared_engine() {
  static CountEngine engine;
  return engine;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact counts of rational plane curves with an m-fold singular point";

  py::register_exception<InvalidQuery>(m, "InvalidQuery", PyExc_ValueError);
  py::register_exception<MemoFormatError>(m, "MemoFormatError", PyExc_ValueError);

  py::class_<CountEngine>(m, "Engine")
      .def(py::init([](bool memoize) { return new CountEngine(CountEngine::Options{memoize, kDefaultSplitWindow}); }),
           py::arg("memoize") = true)
      .def(
          "count",
          [](CountEngine& e, int d, int m, int theta, std::optional<int> r) {
            return to_pyint(engine_count(e, d, m, theta, r));
          },
          py::arg("d"), py::arg("m"), py::arg("theta") = 0, py::arg("r") = py::none())
      .def(
          "blowup_gw", [](CountEngine& e, int d, int m) { return to_pyint(e.blowup_gw({d, m})); },
          py::arg("d"), py::arg("m"))
      .def_property_readonly("memo_size", [](const CountEngine& e) { return e.memo().size(); })
      .def("save_cache", [](const CountEngine& e, const std::string& path) { e.memo().save(path); })
      .def("load_cache", [](CountEngine& e, const std::string& path) { e.memo() = MemoStore::load(path); });

  m.def(
      "count",
      [](int d, int m, int theta, std::optional<int> r) {
        ExactCount v;
        {
          py::gil_scoped_release release;
          v = engine_count(shared_engine(), d, m, theta, r);
        }
        return to_pyint(v);
      },
      py::arg("d"), py::arg("m"), py::arg("theta") = 0, py::arg("r") = py::none(),
      "N_(d,m)(r, theta); r defaults to 3d+1-m-theta.");
  m.def(
      "blowup_gw", [](int d, int m) { return to_pyint(shared_engine().blowup_gw({d, m})); },
      py::arg("d"), py::arg("m"));
  m.def(
      "n_plane", [](int d) { return to_pyint(n_plane(d)); }, py::arg("d"));
  m.def(
      "fixed_singularity_count",
      [](int d, int m, int theta) { return to_pyint(fixed_singularity_count(d, m, theta)); },
      py::arg("d"), py::arg("m"), py::arg("theta") = 0);
  m.def("codim_j", &codim_j, py::arg("d"), py::arg("m"));
  m.def("golden_tables", [] {
    py::list names;
    for (const auto& t : golden_tables()) names.append(std::string(t.name));
    return names;
  });
  m.def(
      "verify",
      [](bool deep) {
        CountEngine engine;
        VerifyReport report;
        {
          py::gil_scoped_release release;
          report = verify_all(engine, VerifyOptions{deep, 1});
        }
        py::module_ json = py::module_::import("json");
        return json.attr("loads")(report.to_json());
      },
      py::arg("deep") = false, "Run all table and identity checks; returns the JSON report as a dict.");
}
