// Python extension: records cross the boundary as JSON text.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ordertop/codec.hpp"
#include "ordertop/labcli.hpp"

namespace py = pybind11;
using namespace ordertop;

namespace {

std::string dump(const json& j) { return j.dump(); }

Object object_of(const std::string& text) { return decode(text); }

std::string run_suite_text(const std::string& suite, std::size_t n, std::optional<std::uint64_t> seed,
                           std::size_t samples, std::size_t workers, const std::string& fault, bool allow_large) {
  SuiteSpec spec;
  spec.suite = suite;
  spec.n = n;
  spec.seed = seed;
  spec.samples = samples;
  spec.workers = workers;
  spec.fault = fault;
  spec.allow_large = allow_large;
  const auto r = run_suite(spec);
  json out = r.summary(false);
  json cx = json::array();
  for (const auto& c : r.counterexamples)
    cx.push_back(json{{"index", c.index}, {"instance", c.instance}, {"detail", c.detail}});
  out["counterexamples"] = cx;
  return out.dump();
}

std::string hunt_text(const std::vector<std::string>& assume, const std::string& refute, const std::string& kind,
                      std::size_t n, bool allow_large) {
  HypothesisSpec h;
  h.assume = assume;
  h.refute = refute;
  h.kind = enum_kind_from_string(kind);
  h.n = n;
  h.allow_large = allow_large;
  return hunt(h).to_json(h).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  static py::exception<Error> error(m, "OrdertopError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::tuple args = py::make_tuple(std::string(to_string(e.code())), e.witness(), std::string(e.what()));
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  m.attr("__version__") = std::string(kToolVersion);

  m.def("encode", [](const std::string& text) { return encode(object_of(text)); },
        "Canonical text of a record given as JSON text");
  m.def("kind_of", [](const std::string& text) { return std::string(kind_of(object_of(text))); });
  m.def("check", [](const std::string& tag, const std::string& text) { return evaluate_predicate(tag, object_of(text)); });
  m.def("derive", [](const std::string& op, const std::string& text) { return dump(derive(op, object_of(text))); });
  m.def("invariants", [](const std::string& text) { return dump(invariants(object_of(text))); });
  m.def("predicate_tags", [] {
    std::vector<std::string> out;
    for (const auto& p : predicate_registry()) out.push_back(p.tag);
    return out;
  });
  m.def("suite_ids", &suite_ids);
  m.def("suite_faults", [](const std::string& s) { return suite_faults(s); });
  m.def("run_suite", &run_suite_text, py::arg("suite"), py::arg("n"), py::arg("seed") = py::none(),
        py::arg("samples") = 1000, py::arg("workers") = 1, py::arg("fault") = "", py::arg("allow_large") = false,
        py::call_guard<py::gil_scoped_release>());
  m.def("evaluate_instance",
        [](const std::string& suite, const std::string& instance, const std::string& fault) {
          const auto o = evaluate_instance(suite, parse_json(instance), fault);
          return dump(json{{"status", to_string(o.status)}, {"detail", o.detail}});
        },
        py::arg("suite"), py::arg("instance"), py::arg("fault") = "");
  m.def("hunt", &hunt_text, py::arg("assume"), py::arg("refute"), py::arg("kind") = "ordered-space", py::arg("n") = 3,
        py::arg("allow_large") = false, py::call_guard<py::gil_scoped_release>());
  m.def("fixture_names", [] {
    std::vector<std::string> out;
    for (const auto& f : fixtures()) out.push_back(f.name);
    return out;
  });
  m.def("fixture", [](const std::string& name) { return dump(fixture(name).to_json()); });
}
