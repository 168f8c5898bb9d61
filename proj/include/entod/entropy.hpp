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

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "entod/dataset.hpp"

namespace entod {

// x*ln(x) with the 0*ln(0) := 0 convention. All entropies in this project
// are in natural-log units (nats); the base rescales every score uniformly
// and cannot change which record a greedy scan selects.
inline double xlnx(std::int64_t x) {
  return x <= 1 ? 0.0 : static_cast<double>(x) * std::log(static_cast<double>(x));
}

// Shannon entropy of one attribute's empirical distribution, computed as
// ln(total) - sum_v c_v*ln(c_v) / total.
double attribute_entropy(std::span<const std::int64_t> counts,
                         std::int64_t total);

// Per-attribute value-count tables plus cached count-entropy sums
// S_j = sum_v c_v*ln(c_v). The cache is what makes scoring one candidate
// O(m): the attribute-independent entropy is
//
//   H = sum_j [ ln(N) - S_j / N ]
//
// and removing one record only moves each S_j by
// xlnx(c_j) - xlnx(c_j - 1) for the record's own value counts c_j.
//
// Thread contract: any number of concurrent readers may score candidates;
// apply_removal / apply_insertion require exclusive access.
class FrequencyModel {
 public:
  explicit FrequencyModel(const CategoricalTable& table);
  FrequencyModel(const CategoricalTable& table,
                 const std::vector<char>& active_mask);

  std::int64_t active_n() const { return active_n_; }
  std::size_t attribute_count() const { return offsets_.size() - 1; }

  std::span<const std::int64_t> counts(std::size_t attribute) const {
    return {counts_.data() + offsets_[attribute],
            offsets_[attribute + 1] - offsets_[attribute]};
  }
  double count_entropy_sum(std::size_t attribute) const {
    return sums_[attribute];
  }

  // Entropy of the active records under attribute independence.
  double independent_entropy() const;

  // Exact attribute-independent entropy of the model with `record` removed,
  // in O(m). Lower score means larger entropy decrease.
  double removal_score(std::span<const Code> record) const;

  // Total drop of the count-entropy sums caused by removing `record`:
  // sum_j [ xlnx(c_j) - xlnx(c_j - 1) ]. Within one scan ln(N-1) and
  // 1/(N-1) are shared by every candidate, so the record minimizing this
  // drop is the record minimizing removal_score. The terms are summed in
  // ascending count order, which makes the value a pure function of the
  // record's count multiset: candidates whose value counts are permutations
  // of each other tie bit-identically, and the lowest-index tie-break stays
  // meaningful. All scan-key evaluation in this project uses this order.
  double removal_delta(std::span<const Code> record) const;

  // The record's current per-attribute value counts (c_1..c_m).
  void gather_counts(std::span<const Code> record,
                     std::span<std::int64_t> out) const;
  std::span<const std::int64_t> flat_counts() const { return counts_; }
  std::size_t attribute_offset(std::size_t attribute) const {
    return offsets_[attribute];
  }

  // Removes / re-adds one record, updating counts and cached sums.
  void apply_removal(std::span<const Code> record);
  void apply_insertion(std::span<const Code> record);

  // Recomputes every S_j from the count tables and throws InternalError if
  // a cache drifted beyond `tolerance`.
  void verify_caches(double tolerance = 1e-6) const;

 private:
  void check_removable(std::span<const Code> record) const;

  std::int64_t active_n_ = 0;
  std::vector<std::size_t> offsets_;  // m+1 entries into counts_
  std::vector<std::int64_t> counts_;
  std::vector<double> sums_;  // S_j per attribute
};

// Lookup table delta[c] = xlnx(c) - xlnx(c-1) for c in 0..max_count, the
// drop of a count-entropy sum when one occurrence of a count-c value is
// removed. Shared by all candidates of all scans of a greedy run.
std::vector<double> removal_delta_by_count(std::int64_t max_count);

// Sorts counts ascending in place and accumulates xlnx deltas in that
// canonical order; bit-identical for any two permutations of the same
// counts.
double sorted_delta_sum(std::span<std::int64_t> counts,
                        std::span<const double> delta_by_count);

// Convenience: attribute-independent entropy of a whole table.
double independent_entropy(const CategoricalTable& table);

// Entropy over full-record outcomes (no independence assumption).
// Brute-force oracle for tiny instances; the detector never calls it.
double joint_entropy(const CategoricalTable& table);
double joint_entropy(const CategoricalTable& table,
                     const std::vector<char>& active_mask);

}  // namespace entod
