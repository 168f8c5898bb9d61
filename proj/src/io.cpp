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

#include "entod/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "entod/error.hpp"
#include "entod/rng.hpp"

namespace entod {

namespace {

// Stream tags separating the generator's independent random streams.
constexpr std::uint64_t kPrototypeTag = 0x70726F746FULL;  // "proto"
constexpr std::uint64_t kNoiseTag = 0x6E6F697365ULL;      // "noise"
constexpr std::uint64_t kValueTag = 0x76616C7565ULL;      // "value"

std::vector<std::string> split_fields(const std::string& line,
                                      char delimiter) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, delimiter)) {
    // Plain surrounding quotes only; no embedded-delimiter dialects.
    if (field.size() >= 2 && field.front() == '"' && field.back() == '"') {
      field = field.substr(1, field.size() - 2);
    }
    fields.push_back(field);
  }
  if (!line.empty() && line.back() == delimiter) fields.emplace_back();
  return fields;
}

std::size_t resolve_column(const ColumnRef& ref,
                           const std::vector<std::string>& header,
                           bool has_header, std::size_t width,
                           const std::string& what) {
  if (std::holds_alternative<std::size_t>(ref)) {
    const std::size_t index = std::get<std::size_t>(ref);
    if (index >= width) {
      throw ConfigError(what + " column index " + std::to_string(index) +
                        " out of range (file has " + std::to_string(width) +
                        " columns)");
    }
    return index;
  }
  const std::string& name = std::get<std::string>(ref);
  if (!has_header) {
    throw ConfigError(what + " column named \"" + name +
                      "\" requires a header line");
  }
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) {
    throw ConfigError(what + " column \"" + name + "\" not found in header");
  }
  return static_cast<std::size_t>(it - header.begin());
}

}  // namespace

CategoricalTable load_table(const LoadSpec& spec) {
  if (spec.delimiter == '"') {
    throw ConfigError("delimiter must not be a quote character");
  }
  std::ifstream in(spec.path);
  if (!in) throw IoError("cannot open " + spec.path);

  std::vector<std::vector<std::string>> records;
  std::vector<std::string> header;
  std::string line;
  std::size_t line_no = 0;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_fields(line, spec.delimiter);
    if (line_no == 1 && spec.has_header) {
      header = std::move(fields);
      width = header.size();
      continue;
    }
    if (width == 0) width = fields.size();
    if (fields.size() != width) {
      throw ParseError(spec.path + ":" + std::to_string(line_no) +
                       ": expected " + std::to_string(width) +
                       " fields, got " + std::to_string(fields.size()));
    }
    records.push_back(std::move(fields));
  }
  if (records.empty()) throw InvalidInput("empty input: " + spec.path);

  std::optional<std::size_t> label_idx;
  std::optional<std::size_t> id_idx;
  if (spec.label_column) {
    label_idx = resolve_column(*spec.label_column, header, spec.has_header,
                               width, "label");
  }
  if (spec.id_column) {
    id_idx =
        resolve_column(*spec.id_column, header, spec.has_header, width, "id");
  }
  if (label_idx && id_idx && *label_idx == *id_idx) {
    throw ConfigError("label column and id column must differ");
  }

  std::vector<std::vector<std::string>> raw;
  raw.reserve(records.size());
  std::vector<std::string> labels;
  std::vector<std::string> ids;
  for (auto& record : records) {
    std::vector<std::string> row;
    row.reserve(width);
    for (std::size_t c = 0; c < width; ++c) {
      if (label_idx && c == *label_idx) {
        labels.push_back(std::move(record[c]));
      } else if (id_idx && c == *id_idx) {
        ids.push_back(std::move(record[c]));
      } else {
        row.push_back(std::move(record[c]));
      }
    }
    raw.push_back(std::move(row));
  }
  if (raw.front().empty()) {
    throw InvalidInput("empty input: no attribute columns left in " +
                       spec.path);
  }

  CategoricalTable table = CategoricalTable::encode(raw);
  if (label_idx) table.set_labels(std::move(labels));
  if (id_idx) table.set_record_ids(std::move(ids));
  return table;
}

CategoricalTable downsample_class(const CategoricalTable& table,
                                  const std::string& class_label,
                                  std::size_t keep, std::uint64_t seed) {
  if (!table.labels()) {
    throw ConfigError("downsampling requires a table with class labels");
  }
  const auto& labels = *table.labels();
  std::vector<std::size_t> class_rows;
  for (std::size_t r = 0; r < labels.size(); ++r) {
    if (labels[r] == class_label) class_rows.push_back(r);
  }
  if (class_rows.empty()) {
    throw ConfigError("unknown class label \"" + class_label + "\"");
  }
  if (keep > class_rows.size()) {
    throw ConfigError("cannot keep " + std::to_string(keep) + " of " +
                      std::to_string(class_rows.size()) + " \"" +
                      class_label + "\" records");
  }

  // Partial Fisher-Yates over the class rows; the first `keep` entries are
  // a seeded uniform sample without replacement.
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < keep; ++i) {
    const std::size_t j =
        i + static_cast<std::size_t>(rng.next_below(class_rows.size() - i));
    std::swap(class_rows[i], class_rows[j]);
  }
  std::vector<char> keep_row(table.n(), 1);
  for (std::size_t i = keep; i < class_rows.size(); ++i) {
    keep_row[class_rows[i]] = 0;
  }

  std::vector<std::size_t> survivors;
  survivors.reserve(table.n() - (class_rows.size() - keep));
  for (std::size_t r = 0; r < table.n(); ++r) {
    if (keep_row[r]) survivors.push_back(r);
  }
  if (survivors.empty()) {
    throw ConfigError("downsampling would leave an empty table");
  }
  return table.select_rows(survivors);
}

CategoricalTable generate_synthetic(const SynthSpec& spec) {
  if (spec.rows == 0 || spec.classes == 0 || spec.rows < spec.classes) {
    throw ConfigError("synthetic spec requires rows >= classes >= 1");
  }
  if (spec.attributes == 0) {
    throw ConfigError("synthetic spec requires at least one attribute");
  }
  if (spec.values_per_attribute < 2) {
    throw ConfigError("synthetic spec requires at least two values per "
                      "attribute");
  }
  if (!(spec.noise >= 0.0 && spec.noise <= 1.0)) {
    throw ConfigError("synthetic noise must lie in [0, 1]");
  }

  std::vector<std::vector<std::uint64_t>> prototypes(spec.classes);
  for (std::size_t c = 0; c < spec.classes; ++c) {
    prototypes[c].resize(spec.attributes);
    for (std::size_t j = 0; j < spec.attributes; ++j) {
      prototypes[c][j] = bounded(mix64(spec.seed ^ kPrototypeTag, c, j),
                                 spec.values_per_attribute);
    }
  }

  std::vector<std::vector<std::string>> raw(spec.rows);
  std::vector<std::string> labels(spec.rows);
  for (std::size_t r = 0; r < spec.rows; ++r) {
    const std::size_t cls = r % spec.classes;
    labels[r] = "c" + std::to_string(cls);
    auto& row = raw[r];
    row.reserve(spec.attributes);
    for (std::size_t j = 0; j < spec.attributes; ++j) {
      std::uint64_t value = prototypes[cls][j];
      if (spec.noise > 0.0 &&
          to_unit(mix64(spec.seed ^ kNoiseTag, r, j)) < spec.noise) {
        value = bounded(mix64(spec.seed ^ kValueTag, r, j),
                        spec.values_per_attribute);
      }
      row.push_back("v" + std::to_string(value));
    }
  }

  CategoricalTable table = CategoricalTable::encode(raw);
  table.set_labels(std::move(labels));
  return table;
}

void write_table(const CategoricalTable& table, const std::string& path,
                 char delimiter) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  const auto rows = table.decode();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    bool first = true;
    auto put = [&](const std::string& field) {
      if (!first) out << delimiter;
      out << field;
      first = false;
    };
    if (table.record_ids()) put((*table.record_ids())[r]);
    for (const auto& value : rows[r]) put(value);
    if (table.labels()) put((*table.labels())[r]);
    out << '\n';
  }
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

void write_result(const OutlierResult& result, const CategoricalTable& table,
                  const std::string& path) {
  for (std::size_t r : result.selected) {
    if (r >= table.n()) {
      throw InvalidInput("result index " + std::to_string(r) +
                         " out of range for table");
    }
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << "rank,record_index,record_id,label,entropy_after\n";
  char buffer[32];
  for (std::size_t i = 0; i < result.selected.size(); ++i) {
    const std::size_t r = result.selected[i];
    std::snprintf(buffer, sizeof(buffer), "%.6f", result.entropy_trace[i + 1]);
    out << (i + 1) << ',' << r << ','
        << (table.record_ids() ? (*table.record_ids())[r] : "") << ','
        << (table.labels() ? (*table.labels())[r] : "") << ',' << buffer
        << '\n';
  }
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

std::vector<std::size_t> read_result_indices(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<std::size_t> selected;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line_no == 1) continue;
    const auto fields = split_fields(line, ',');
    if (fields.size() < 2) {
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": malformed result row");
    }
    selected.push_back(static_cast<std::size_t>(std::stoull(fields[1])));
  }
  return selected;
}

}  // namespace entod
