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

#include "entod/entropy.hpp"

#include <algorithm>
#include <cstring>
#include <string>
#include <unordered_map>

#include "entod/error.hpp"

namespace entod {

double attribute_entropy(std::span<const std::int64_t> counts,
                         std::int64_t total) {
  if (total == 0) throw InvalidInput("empty distribution: total is zero");
  std::int64_t sum = 0;
  double s = 0.0;
  for (std::int64_t c : counts) {
    if (c < 0) throw InvalidInput("negative count in distribution");
    sum += c;
    s += xlnx(c);
  }
  if (sum != total) {
    throw InvalidInput("counts sum to " + std::to_string(sum) +
                       ", expected total " + std::to_string(total));
  }
  return std::log(static_cast<double>(total)) -
         s / static_cast<double>(total);
}

FrequencyModel::FrequencyModel(const CategoricalTable& table)
    : FrequencyModel(table, std::vector<char>()) {}

FrequencyModel::FrequencyModel(const CategoricalTable& table,
                               const std::vector<char>& active_mask) {
  if (!active_mask.empty() && active_mask.size() != table.n()) {
    throw InvalidInput("active mask size does not match record count");
  }
  const std::size_t m = table.m();
  offsets_.resize(m + 1, 0);
  for (std::size_t j = 0; j < m; ++j) {
    offsets_[j + 1] = offsets_[j] + table.cardinality(j);
  }
  counts_.assign(offsets_[m], 0);
  for (std::size_t r = 0; r < table.n(); ++r) {
    if (!active_mask.empty() && !active_mask[r]) continue;
    ++active_n_;
    const auto row = table.row(r);
    for (std::size_t j = 0; j < m; ++j) {
      ++counts_[offsets_[j] + static_cast<std::size_t>(row[j])];
    }
  }
  sums_.assign(m, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    double s = 0.0;
    for (std::size_t i = offsets_[j]; i < offsets_[j + 1]; ++i) {
      s += xlnx(counts_[i]);
    }
    sums_[j] = s;
  }
}

double FrequencyModel::independent_entropy() const {
  if (active_n_ == 0) throw InvalidInput("empty dataset: no active records");
  const double n = static_cast<double>(active_n_);
  const double log_n = std::log(n);
  double h = 0.0;
  for (double s : sums_) h += log_n - s / n;
  return h;
}

void FrequencyModel::check_removable(std::span<const Code> record) const {
  if (active_n_ < 2) {
    throw InvalidInput("cannot empty dataset: fewer than two active records");
  }
  if (record.size() != attribute_count()) {
    throw InvalidInput("record arity does not match model");
  }
}

double FrequencyModel::removal_score(std::span<const Code> record) const {
  const double delta = removal_delta(record);
  const double n1 = static_cast<double>(active_n_ - 1);
  double sum_s = 0.0;
  for (double s : sums_) sum_s += s;
  // sum_s is candidate-independent, so records tying in removal_delta tie
  // here as well.
  return static_cast<double>(record.size()) * std::log(n1) -
         (sum_s - delta) / n1;
}

double FrequencyModel::removal_delta(std::span<const Code> record) const {
  check_removable(record);
  std::vector<std::int64_t> counts(record.size());
  gather_counts(record, counts);
  std::sort(counts.begin(), counts.end());
  double delta = 0.0;
  for (std::int64_t c : counts) delta += xlnx(c) - xlnx(c - 1);
  return delta;
}

void FrequencyModel::gather_counts(std::span<const Code> record,
                                   std::span<std::int64_t> out) const {
  for (std::size_t j = 0; j < record.size(); ++j) {
    const std::int64_t c =
        counts_[offsets_[j] + static_cast<std::size_t>(record[j])];
    if (c < 1) {
      throw InternalError("inconsistent model: record value has zero count");
    }
    out[j] = c;
  }
}

std::vector<double> removal_delta_by_count(std::int64_t max_count) {
  std::vector<double> deltas(static_cast<std::size_t>(max_count) + 1, 0.0);
  for (std::int64_t c = 1; c <= max_count; ++c) {
    deltas[static_cast<std::size_t>(c)] = xlnx(c) - xlnx(c - 1);
  }
  return deltas;
}

double sorted_delta_sum(std::span<std::int64_t> counts,
                        std::span<const double> delta_by_count) {
  // insertion sort: m is small and the input is nearly unordered anyway
  for (std::size_t i = 1; i < counts.size(); ++i) {
    const std::int64_t value = counts[i];
    std::size_t pos = i;
    while (pos > 0 && counts[pos - 1] > value) {
      counts[pos] = counts[pos - 1];
      --pos;
    }
    counts[pos] = value;
  }
  double sum = 0.0;
  for (std::int64_t c : counts) {
    sum += delta_by_count[static_cast<std::size_t>(c)];
  }
  return sum;
}

void FrequencyModel::apply_removal(std::span<const Code> record) {
  check_removable(record);
  for (std::size_t j = 0; j < record.size(); ++j) {
    std::int64_t& c = counts_[offsets_[j] + static_cast<std::size_t>(record[j])];
    if (c < 1) {
      throw InternalError("inconsistent model: record value has zero count");
    }
    sums_[j] += xlnx(c - 1) - xlnx(c);
    --c;
  }
  --active_n_;
}

void FrequencyModel::apply_insertion(std::span<const Code> record) {
  if (record.size() != attribute_count()) {
    throw InvalidInput("record arity does not match model");
  }
  for (std::size_t j = 0; j < record.size(); ++j) {
    std::int64_t& c = counts_[offsets_[j] + static_cast<std::size_t>(record[j])];
    sums_[j] += xlnx(c + 1) - xlnx(c);
    ++c;
  }
  ++active_n_;
}

void FrequencyModel::verify_caches(double tolerance) const {
  for (std::size_t j = 0; j + 1 < offsets_.size(); ++j) {
    double s = 0.0;
    std::int64_t total = 0;
    for (std::size_t i = offsets_[j]; i < offsets_[j + 1]; ++i) {
      s += xlnx(counts_[i]);
      total += counts_[i];
    }
    if (total != active_n_) {
      throw InternalError("inconsistent model: counts of attribute " +
                          std::to_string(j) + " sum to " +
                          std::to_string(total) + ", expected " +
                          std::to_string(active_n_));
    }
    if (std::abs(s - sums_[j]) > tolerance) {
      throw InternalError("count-entropy cache of attribute " +
                          std::to_string(j) + " drifted by " +
                          std::to_string(std::abs(s - sums_[j])));
    }
  }
}

double independent_entropy(const CategoricalTable& table) {
  return FrequencyModel(table).independent_entropy();
}

double joint_entropy(const CategoricalTable& table) {
  return joint_entropy(table, std::vector<char>());
}

double joint_entropy(const CategoricalTable& table,
                     const std::vector<char>& active_mask) {
  if (!active_mask.empty() && active_mask.size() != table.n()) {
    throw InvalidInput("active mask size does not match record count");
  }
  std::unordered_map<std::string, std::int64_t> freq;
  std::int64_t active = 0;
  for (std::size_t r = 0; r < table.n(); ++r) {
    if (!active_mask.empty() && !active_mask[r]) continue;
    ++active;
    const auto row = table.row(r);
    std::string key(reinterpret_cast<const char*>(row.data()),
                    row.size() * sizeof(Code));
    ++freq[key];
  }
  if (active == 0) throw InvalidInput("empty dataset: no active records");

  // Sorted accumulation keeps the result independent of hash iteration
  // order.
  std::vector<std::int64_t> counts;
  counts.reserve(freq.size());
  for (const auto& [key, c] : freq) counts.push_back(c);
  std::sort(counts.begin(), counts.end());

  const double n = static_cast<double>(active);
  double h = 0.0;
  for (std::int64_t c : counts) {
    const double p = static_cast<double>(c) / n;
    h -= p * std::log(p);
  }
  return h;
}

}  // namespace entod
