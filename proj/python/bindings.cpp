#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "srtrace/builders.hpp"
#include "srtrace/classifier.hpp"
#include "srtrace/errors.hpp"
#include "srtrace/homology.hpp"
#include "srtrace/io.hpp"
#include "srtrace/oracle.hpp"
#include "srtrace/report.hpp"
#include "srtrace/sweep.hpp"

namespace py = pybind11;
using namespace srtrace;

namespace {

std::vector<FieldSpec> parse_fields(const std::vector<std::string>& names) {
  std::vector<FieldSpec> out;
  for (const auto& n : names) out.push_back(FieldSpec::parse(n));
  return out;
}

SimplicialComplex build(int n, const std::vector<std::vector<int>>& facets) {
  return SimplicialComplex::from_facets(n, facets);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Stanley-Reisner trace classification engines";
  m.attr("ENGINE_VERSION") = kEngineVersion;
  m.attr("REPORT_SCHEMA") = kReportSchema;

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<VoidComplexError>(m, "VoidComplexError", PyExc_ValueError);

  m.def("corpus_facets", [](const std::string& name) {
    const auto k = corpus_complex(name);
    return py::make_tuple(k.ground_size(), k.facet_lists());
  });
  m.def("corpus_names", [] {
    std::vector<std::string> names;
    for (const auto& e : corpus_entries()) names.push_back(e.name);
    return names;
  });
  m.def("classify_json",
        [](int n, const std::vector<std::vector<int>>& facets, const std::vector<std::string>& fields,
           bool oracle, const std::string& id) {
          ReportOptions options;
          options.oracle = oracle;
          return classification_document(build(n, facets), id, parse_fields(fields), options).dump();
        },
        py::arg("n"), py::arg("facets"), py::arg("fields"), py::arg("oracle") = false, py::arg("id") = "python");
  m.def("homology_json",
        [](int n, const std::vector<std::vector<int>>& facets, const std::vector<std::string>& fields) {
          return homology_document(build(n, facets), "python", parse_fields(fields)).dump();
        });
  m.def("reduced_betti", [](int n, const std::vector<std::vector<int>>& facets, const std::string& field) {
    return reduced_betti(build(n, facets), FieldSpec::parse(field));
  });
  m.def("trace_class", [](int n, const std::vector<std::vector<int>>& facets, const std::string& field) {
    return std::string(to_string(trace_class(build(n, facets), FieldSpec::parse(field))));
  });
  m.def("trace_json", [](int n, const std::vector<std::vector<int>>& facets, const std::string& field) {
    return to_json(trace_components(build(n, facets), FieldSpec::parse(field))).dump();
  });
  m.def("count_complexes", &count_complexes);
  m.def("sweep_json",
        [](int max_n, const std::vector<std::string>& fields, bool oracle) {
          SweepConfig config;
          config.max_n = max_n;
          config.fields = parse_fields(fields);
          config.oracle = oracle;
          py::gil_scoped_release release;
          return to_json(run_sweep(config)).dump();
        },
        py::arg("max_n"), py::arg("fields"), py::arg("oracle") = true);
}
