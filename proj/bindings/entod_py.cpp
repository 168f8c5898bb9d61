// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "entod/dataset.hpp"
#include "entod/detect.hpp"
#include "entod/entropy.hpp"
#include "entod/error.hpp"
#include "entod/evaluate.hpp"
#include "entod/io.hpp"
#include "entod/version.hpp"

namespace py = pybind11;

namespace {

entod::CategoricalTable load_table_py(
    const std::string& path, const std::string& delimiter,
    std::optional<entod::ColumnRef> label_col,
    std::optional<entod::ColumnRef> id_col, bool header,
    const std::string& missing) {
  if (delimiter.size() != 1) {
    throw entod::ConfigError("delimiter must be a single character");
  }
  entod::LoadSpec spec;
  spec.path = path;
  spec.delimiter = delimiter[0];
  spec.label_column = std::move(label_col);
  spec.id_column = std::move(id_col);
  spec.has_header = header;
  spec.missing_token = missing;
  return entod::load_table(spec);
}

entod::CategoricalTable generate_synthetic_py(std::size_t rows,
                                              std::size_t attributes,
                                              std::size_t classes,
                                              std::size_t values_per_attribute,
                                              double noise,
                                              std::uint64_t seed) {
  entod::SynthSpec spec;
  spec.rows = rows;
  spec.attributes = attributes;
  spec.classes = classes;
  spec.values_per_attribute = values_per_attribute;
  spec.noise = noise;
  spec.seed = seed;
  return entod::generate_synthetic(spec);
}

}  // namespace

PYBIND11_MODULE(_entod, m) {
  m.doc() = "Entropy-based outlier detection for categorical data";
  m.attr("__version__") = entod::kVersion;

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const entod::InternalError& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    } catch (const entod::IoError& e) {
      PyErr_SetString(PyExc_OSError, e.what());
    } catch (const entod::Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<entod::CategoricalTable>(m, "CategoricalTable")
      .def_property_readonly("n", &entod::CategoricalTable::n)
      .def_property_readonly("m", &entod::CategoricalTable::m)
      .def("cell", &entod::CategoricalTable::cell, py::arg("record"),
           py::arg("attribute"))
      .def("cardinality", &entod::CategoricalTable::cardinality,
           py::arg("attribute"))
      .def("column_counts", &entod::CategoricalTable::column_counts,
           py::arg("attribute"))
      .def("decode", &entod::CategoricalTable::decode)
      .def("select_rows", &entod::CategoricalTable::select_rows,
           py::arg("rows"))
      .def_property_readonly("labels",
                             [](const entod::CategoricalTable& t) {
                               return t.labels();
                             })
      .def_property_readonly("record_ids",
                             [](const entod::CategoricalTable& t) {
                               return t.record_ids();
                             })
      .def("entropy_upper_bound",
           &entod::CategoricalTable::entropy_upper_bound)
      .def("__repr__", [](const entod::CategoricalTable& t) {
        return "<CategoricalTable n=" + std::to_string(t.n()) +
               " m=" + std::to_string(t.m()) + ">";
      });

  py::class_<entod::OutlierResult>(m, "OutlierResult")
      .def_readonly("selected", &entod::OutlierResult::selected)
      .def_readonly("entropy_trace", &entod::OutlierResult::entropy_trace)
      .def_readonly("k", &entod::OutlierResult::k);

  py::class_<entod::CoverageRow>(m, "CoverageRow")
      .def_readonly("k", &entod::CoverageRow::k)
      .def_readonly("ratio", &entod::CoverageRow::ratio)
      .def_readonly("rare_found", &entod::CoverageRow::rare_found)
      .def_readonly("coverage", &entod::CoverageRow::coverage);

  py::class_<entod::EvaluationReport>(m, "EvaluationReport")
      .def_readonly("rare_labels", &entod::EvaluationReport::rare_labels)
      .def_readonly("total_rare", &entod::EvaluationReport::total_rare)
      .def_readonly("n", &entod::EvaluationReport::n)
      .def_readonly("rows", &entod::EvaluationReport::rows);

  m.def("encode", &entod::CategoricalTable::encode, py::arg("raw_rows"),
        "Dictionary-encode raw string rows into a table");
  m.def("load_table", &load_table_py, py::arg("path"),
        py::arg("delimiter") = ",", py::arg("label_col") = py::none(),
        py::arg("id_col") = py::none(), py::arg("header") = false,
        py::arg("missing") = "?", "Load a delimited dataset file");
  m.def("downsample_class", &entod::downsample_class, py::arg("table"),
        py::arg("class_label"), py::arg("keep"), py::arg("seed"),
        "Keep a seeded uniform sample of one class, all other records");
  m.def("generate_synthetic", &generate_synthetic_py, py::arg("rows"),
        py::arg("attributes"), py::arg("classes") = 1,
        py::arg("values_per_attribute") = 10, py::arg("noise") = 0.1,
        py::arg("seed") = 0, "Prototype-plus-noise synthetic table");
  m.def("write_table", &entod::write_table, py::arg("table"), py::arg("path"),
        py::arg("delimiter") = ',');
  m.def("write_result", &entod::write_result, py::arg("result"),
        py::arg("table"), py::arg("path"));
  m.def("read_result_indices", &entod::read_result_indices, py::arg("path"));

  m.def(
      "attribute_entropy",
      [](const std::vector<std::int64_t>& counts, std::int64_t total) {
        return entod::attribute_entropy(counts, total);
      },
      py::arg("counts"), py::arg("total"),
      "Shannon entropy of one count distribution, nats");
  m.def(
      "independent_entropy",
      [](const entod::CategoricalTable& t) {
        return entod::independent_entropy(t);
      },
      py::arg("table"), "Sum of per-attribute entropies, nats");
  m.def(
      "joint_entropy",
      [](const entod::CategoricalTable& t) { return entod::joint_entropy(t); },
      py::arg("table"), "Entropy over distinct full records, nats");

  m.def(
      "greedy_detect",
      [](const entod::CategoricalTable& table, std::size_t k,
         unsigned threads) {
        entod::DetectOptions options;
        options.threads = threads;
        return entod::greedy_detect(table, k, options);
      },
      py::arg("table"), py::arg("k"), py::arg("threads") = 1,
      "Greedy top-k outlier detection with incremental scoring");
  m.def("naive_greedy_detect", &entod::naive_greedy_detect, py::arg("table"),
        py::arg("k"), "Oracle: same policy, full recomputation per candidate");
  m.def(
      "exhaustive_optimal",
      [](const entod::CategoricalTable& table, std::size_t k) {
        const auto result = entod::exhaustive_optimal(table, k);
        return py::make_tuple(result.subset, result.entropy);
      },
      py::arg("table"), py::arg("k"),
      "Exact optimum over all C(n,k) subsets (tiny instances only)");

  m.def("coverage_at", &entod::coverage_at, py::arg("result"),
        py::arg("labels"), py::arg("rare_labels"), py::arg("k_ladder"),
        "Rare-class coverage of selection prefixes");
}
