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
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace entod {

using Code = std::int32_t;

// Dictionary of one attribute. Raw string values are stored in
// first-occurrence order; a value's dense code is its position in that
// order, so codes are contiguous 0..p-1.
class AttributeDictionary {
 public:
  // Returns the code of `value`, adding it to the dictionary if new.
  Code intern(const std::string& value);

  // Returns the code of `value`, or -1 when it is not in the dictionary.
  Code find(const std::string& value) const;

  const std::string& value_name(Code code) const;
  const std::vector<std::string>& value_names() const { return value_names_; }
  std::size_t size() const { return value_names_.size(); }

 private:
  std::vector<std::string> value_names_;
  std::unordered_map<std::string, Code> codes_;
};

// An immutable n x m matrix of dictionary-encoded categorical values, plus
// optional per-record class labels and external record ids. The class label
// never participates in entropy computation; it exists only for evaluation.
// Safe to read from any number of concurrent threads once constructed.
class CategoricalTable {
 public:
  // Encodes raw rows into dense codes, assigning codes in first-occurrence
  // order. All rows must have the same nonzero length and there must be at
  // least one row.
  static CategoricalTable encode(
      const std::vector<std::vector<std::string>>& raw_rows);

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }

  Code cell(std::size_t record, std::size_t attribute) const {
    return cells_[record * m_ + attribute];
  }
  std::span<const Code> row(std::size_t record) const {
    return {cells_.data() + record * m_, m_};
  }

  const AttributeDictionary& dictionary(std::size_t attribute) const;
  // Number of distinct values of an attribute (p_j).
  std::size_t cardinality(std::size_t attribute) const;

  // Per-code occurrence counts of one attribute; the counts sum to n.
  std::vector<std::int64_t> column_counts(std::size_t attribute) const;

  // Inverse of encode: reconstructs the raw string rows.
  std::vector<std::vector<std::string>> decode() const;

  // Row subset in the given order; labels and record ids follow along.
  // Dictionaries are rebuilt so codes stay contiguous and first-occurrence.
  CategoricalTable select_rows(const std::vector<std::size_t>& rows) const;

  void set_labels(std::vector<std::string> labels);
  void set_record_ids(std::vector<std::string> ids);
  const std::optional<std::vector<std::string>>& labels() const {
    return labels_;
  }
  const std::optional<std::vector<std::string>>& record_ids() const {
    return record_ids_;
  }

  // Upper bound of the attribute-independent entropy: sum_j ln(p_j).
  double entropy_upper_bound() const;

 private:
  CategoricalTable() = default;

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<Code> cells_;  // row-major
  std::vector<AttributeDictionary> dictionaries_;
  std::optional<std::vector<std::string>> labels_;
  std::optional<std::vector<std::string>> record_ids_;
};

}  // namespace entod
