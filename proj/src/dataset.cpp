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

#include "entod/dataset.hpp"

#include <cmath>

#include "entod/error.hpp"

namespace entod {

Code AttributeDictionary::intern(const std::string& value) {
  auto it = codes_.find(value);
  if (it != codes_.end()) return it->second;
  Code code = static_cast<Code>(value_names_.size());
  value_names_.push_back(value);
  codes_.emplace(value, code);
  return code;
}

Code AttributeDictionary::find(const std::string& value) const {
  auto it = codes_.find(value);
  return it == codes_.end() ? Code{-1} : it->second;
}

const std::string& AttributeDictionary::value_name(Code code) const {
  if (code < 0 || static_cast<std::size_t>(code) >= value_names_.size()) {
    throw InvalidInput("value code " + std::to_string(code) +
                       " out of range");
  }
  return value_names_[static_cast<std::size_t>(code)];
}

CategoricalTable CategoricalTable::encode(
    const std::vector<std::vector<std::string>>& raw_rows) {
  if (raw_rows.empty()) throw InvalidInput("empty input: no records");
  const std::size_t m = raw_rows.front().size();
  if (m == 0) throw InvalidInput("empty input: records have no attributes");

  CategoricalTable table;
  table.n_ = raw_rows.size();
  table.m_ = m;
  table.dictionaries_.resize(m);
  table.cells_.reserve(table.n_ * m);
  for (std::size_t r = 0; r < raw_rows.size(); ++r) {
    const auto& row = raw_rows[r];
    if (row.size() != m) {
      throw InvalidInput("ragged input: record " + std::to_string(r) +
                         " has " + std::to_string(row.size()) +
                         " values, expected " + std::to_string(m));
    }
    for (std::size_t j = 0; j < m; ++j) {
      table.cells_.push_back(table.dictionaries_[j].intern(row[j]));
    }
  }
  return table;
}

const AttributeDictionary& CategoricalTable::dictionary(
    std::size_t attribute) const {
  if (attribute >= m_) {
    throw InvalidInput("attribute index " + std::to_string(attribute) +
                       " out of range (m=" + std::to_string(m_) + ")");
  }
  return dictionaries_[attribute];
}

std::size_t CategoricalTable::cardinality(std::size_t attribute) const {
  return dictionary(attribute).size();
}

std::vector<std::int64_t> CategoricalTable::column_counts(
    std::size_t attribute) const {
  const auto& dict = dictionary(attribute);
  std::vector<std::int64_t> counts(dict.size(), 0);
  for (std::size_t r = 0; r < n_; ++r) {
    ++counts[static_cast<std::size_t>(cell(r, attribute))];
  }
  return counts;
}

std::vector<std::vector<std::string>> CategoricalTable::decode() const {
  std::vector<std::vector<std::string>> rows(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    rows[r].reserve(m_);
    for (std::size_t j = 0; j < m_; ++j) {
      rows[r].push_back(dictionaries_[j].value_name(cell(r, j)));
    }
  }
  return rows;
}

CategoricalTable CategoricalTable::select_rows(
    const std::vector<std::size_t>& rows) const {
  std::vector<std::vector<std::string>> raw;
  raw.reserve(rows.size());
  for (std::size_t r : rows) {
    if (r >= n_) {
      throw InvalidInput("record index " + std::to_string(r) +
                         " out of range (n=" + std::to_string(n_) + ")");
    }
    std::vector<std::string> row;
    row.reserve(m_);
    for (std::size_t j = 0; j < m_; ++j) {
      row.push_back(dictionaries_[j].value_name(cell(r, j)));
    }
    raw.push_back(std::move(row));
  }
  CategoricalTable out = encode(raw);
  if (labels_) {
    std::vector<std::string> labels;
    labels.reserve(rows.size());
    for (std::size_t r : rows) labels.push_back((*labels_)[r]);
    out.set_labels(std::move(labels));
  }
  if (record_ids_) {
    std::vector<std::string> ids;
    ids.reserve(rows.size());
    for (std::size_t r : rows) ids.push_back((*record_ids_)[r]);
    out.set_record_ids(std::move(ids));
  }
  return out;
}

void CategoricalTable::set_labels(std::vector<std::string> labels) {
  if (labels.size() != n_) {
    throw InvalidInput("labels size " + std::to_string(labels.size()) +
                       " does not match record count " + std::to_string(n_));
  }
  labels_ = std::move(labels);
}

void CategoricalTable::set_record_ids(std::vector<std::string> ids) {
  if (ids.size() != n_) {
    throw InvalidInput("record ids size " + std::to_string(ids.size()) +
                       " does not match record count " + std::to_string(n_));
  }
  record_ids_ = std::move(ids);
}

double CategoricalTable::entropy_upper_bound() const {
  double bound = 0.0;
  for (const auto& dict : dictionaries_) {
    bound += std::log(static_cast<double>(dict.size()));
  }
  return bound;
}

}  // namespace entod
