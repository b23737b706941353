#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nilcomm/cli/app.hpp"
#include "nilcomm/hilbert/ideal.hpp"

namespace py = pybind11;
using namespace nilcomm;

namespace {

py::tuple run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = cli::run(args, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

// JSON text of the reduced generators and staircase of a colength-finite ideal.
std::string normalize_ideal(const std::string& text, const std::string& field, const std::string& order) {
  const auto monomial_order = parse_monomial_order(order);
  return visit_field(FieldSpec::parse(field), [&](const auto& f) {
    const auto ideal = parse_ideal(text, f, monomial_order);
    auto j = ideal_to_json(ideal);
    j["text"] = ideal.to_string();
    return j.dump();
  });
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of the nilcomm package";
  m.def("run", &run, py::arg("args"),
        "Run the nilcomm command line with the given arguments; returns (exit_code, stdout, stderr).");
  m.def("normalize_ideal", &normalize_ideal, py::arg("text"), py::arg("field") = "q", py::arg("order") = "graded");
}
