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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "entod/dataset.hpp"
#include "entod/detect.hpp"

namespace entod {

// Column selector: zero-based position, or header name when the file has a
// header line.
using ColumnRef = std::variant<std::size_t, std::string>;

struct LoadSpec {
  std::string path;
  char delimiter = ',';
  std::optional<ColumnRef> label_column;
  std::optional<ColumnRef> id_column;
  bool has_header = false;
  // Token that marks a missing value in the file. Missing values take part
  // in entropy computation as an ordinary distinct category, so the loader
  // applies no transformation; the token is recorded for run manifests.
  std::string missing_token = "?";
};

// Reads a delimited text file into a table. Label/id columns are split out
// of the attribute matrix into CategoricalTable::labels / record_ids.
CategoricalTable load_table(const LoadSpec& spec);

// Keeps exactly `keep` seeded-uniformly-chosen records of `class_label` and
// every record of the other classes, preserving record order.
CategoricalTable downsample_class(const CategoricalTable& table,
                                  const std::string& class_label,
                                  std::size_t keep, std::uint64_t seed);

// Parameters of the synthetic dataset generator.
struct SynthSpec {
  std::size_t rows = 0;
  std::size_t attributes = 0;
  std::size_t classes = 1;
  std::size_t values_per_attribute = 10;
  double noise = 0.1;
  std::uint64_t seed = 0;
};

// Prototype-plus-noise generator: each class gets a fixed seeded-random
// prototype row; each record copies its class prototype (classes assigned
// round-robin) and every cell is independently replaced by a uniform random
// value with probability `noise`. Cells are keyed by (record, attribute),
// so a table is a byte-identical prefix of any longer table from the same
// spec. Labels are set to the class id.
CategoricalTable generate_synthetic(const SynthSpec& spec);

// Writes the raw (decoded) table: record id column first when present,
// attribute values, and a final label column when present.
void write_table(const CategoricalTable& table, const std::string& path,
                 char delimiter = ',');

// Writes one line per selected record: rank, record index, external id (may
// be empty), label (may be empty), entropy after the removal. Header first.
void write_result(const OutlierResult& result, const CategoricalTable& table,
                  const std::string& path);

// Parse-back of a result file: selected record indices in rank order.
std::vector<std::size_t> read_result_indices(const std::string& path);

}  // namespace entod
