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

#include "entod/detect.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "entod/entropy.hpp"
#include "entod/error.hpp"

namespace entod {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_k(const CategoricalTable& table, std::size_t k) {
  if (table.n() == 0) throw InvalidInput("empty input: no records");
  if (k >= table.n()) {
    throw InvalidInput("invalid k: " + std::to_string(k) +
                       " outliers requested from " +
                       std::to_string(table.n()) +
                       " records (k must be at most n-1)");
  }
}

struct ColumnLayout {
  std::vector<std::size_t> offsets;  // m+1 entries
  std::size_t total = 0;

  explicit ColumnLayout(const CategoricalTable& table) {
    offsets.resize(table.m() + 1, 0);
    for (std::size_t j = 0; j < table.m(); ++j) {
      offsets[j + 1] = offsets[j] + table.cardinality(j);
    }
    total = offsets.back();
  }
};

// Attribute-independent entropy of a flattened count table, evaluated from
// scratch in the direct -sum p*ln(p) form. All cell counts are summed in one globally
// sorted pass: every probability divides by the same active total, so the
// value only depends on the multiset of counts, and candidate subsets
// leaving identical count multisets behind score bit-identically. This is
// the from-scratch counterpart of the sorted-order scan keys and keeps the
// lowest-index tie-break consistent between the two routes.
double fresh_entropy(const std::vector<std::int64_t>& counts,
                     std::int64_t total, std::vector<std::int64_t>& scratch) {
  const double n = static_cast<double>(total);
  scratch.assign(counts.begin(), counts.end());
  std::sort(scratch.begin(), scratch.end());
  double h = 0.0;
  for (std::int64_t c : scratch) {
    if (c > 0) {
      const double p = static_cast<double>(c) / n;
      h -= p * std::log(p);
    }
  }
  return h;
}

}  // namespace

OutlierResult greedy_detect(const CategoricalTable& table, std::size_t k,
                            const DetectOptions& options) {
  check_k(table, k);
  const std::size_t n = table.n();
  const std::size_t m = table.m();

  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(1, n / 64 + 1)));

  FrequencyModel model(table);
  OutlierResult result;
  result.k = k;
  result.selected.reserve(k);
  result.entropy_trace.reserve(k + 1);
  result.entropy_trace.push_back(model.independent_entropy());

  std::vector<char> is_outlier(n, 0);
  std::vector<std::size_t> offsets(m);
  for (std::size_t j = 0; j < m; ++j) offsets[j] = model.attribute_offset(j);
  // delta[c] = xlnx(c) - xlnx(c-1); a candidate's scan key is the sum of
  // deltas of its value counts, taken in ascending count order so that the
  // key depends only on the candidate's count multiset (see removal_delta).
  const std::vector<double> delta_by_count =
      entod::removal_delta_by_count(static_cast<std::int64_t>(n));

  for (std::size_t step = 0; step < k; ++step) {
    const auto counts = model.flat_counts();

    auto scan_block = [&](std::size_t lo, std::size_t hi, double& best_key,
                          std::size_t& best_idx) {
      std::vector<std::int64_t> candidate_counts(m);
      double key_min = kInf;
      std::size_t idx_min = n;
      for (std::size_t r = lo; r < hi; ++r) {
        if (is_outlier[r]) continue;
        const auto row = table.row(r);
        for (std::size_t j = 0; j < m; ++j) {
          candidate_counts[j] =
              counts[offsets[j] + static_cast<std::size_t>(row[j])];
        }
        const double key = sorted_delta_sum(candidate_counts, delta_by_count);
        if (key < key_min) {
          key_min = key;
          idx_min = r;
        }
      }
      best_key = key_min;
      best_idx = idx_min;
    };

    double best_key = kInf;
    std::size_t best_idx = n;
    if (threads <= 1) {
      scan_block(0, n, best_key, best_idx);
    } else {
      // Contiguous blocks, merged in ascending block order; combined with
      // the strict < rule this reproduces the single-threaded argmin.
      std::vector<double> block_key(threads, kInf);
      std::vector<std::size_t> block_idx(threads, n);
      std::vector<std::thread> workers;
      workers.reserve(threads);
      for (unsigned b = 0; b < threads; ++b) {
        const std::size_t lo = n * b / threads;
        const std::size_t hi = n * (b + 1) / threads;
        workers.emplace_back(scan_block, lo, hi, std::ref(block_key[b]),
                             std::ref(block_idx[b]));
      }
      for (auto& w : workers) w.join();
      for (unsigned b = 0; b < threads; ++b) {
        if (block_idx[b] < n && block_key[b] < best_key) {
          best_key = block_key[b];
          best_idx = block_idx[b];
        }
      }
    }

    if (best_idx >= n) {
      throw InternalError("scan found no active candidate");
    }
    model.apply_removal(table.row(best_idx));
    is_outlier[best_idx] = 1;
    result.selected.push_back(best_idx);
    result.entropy_trace.push_back(model.independent_entropy());
#ifndef NDEBUG
    model.verify_caches();
#endif
  }
  return result;
}

OutlierResult naive_greedy_detect(const CategoricalTable& table,
                                  std::size_t k) {
  check_k(table, k);
  const std::size_t n = table.n();
  const std::size_t m = table.m();
  const ColumnLayout layout(table);

  std::vector<char> is_outlier(n, 0);
  std::int64_t active_n = static_cast<std::int64_t>(n);
  std::vector<std::int64_t> counts(layout.total, 0);
  std::vector<std::int64_t> scratch;

  auto rebuild = [&](std::size_t excluded) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t r = 0; r < n; ++r) {
      if (is_outlier[r] || r == excluded) continue;
      const auto row = table.row(r);
      for (std::size_t j = 0; j < m; ++j) {
        ++counts[layout.offsets[j] + static_cast<std::size_t>(row[j])];
      }
    }
  };

  OutlierResult result;
  result.k = k;
  rebuild(n);
  result.entropy_trace.push_back(fresh_entropy(counts, active_n, scratch));

  for (std::size_t step = 0; step < k; ++step) {
    double best_h = kInf;
    std::size_t best_idx = n;
    for (std::size_t r = 0; r < n; ++r) {
      if (is_outlier[r]) continue;
      rebuild(r);
      const double h = fresh_entropy(counts, active_n - 1, scratch);
      if (h < best_h) {
        best_h = h;
        best_idx = r;
      }
    }
    if (best_idx >= n) {
      throw InternalError("scan found no active candidate");
    }
    is_outlier[best_idx] = 1;
    --active_n;
    result.selected.push_back(best_idx);
    rebuild(n);
    result.entropy_trace.push_back(fresh_entropy(counts, active_n, scratch));
  }
  return result;
}

ExhaustiveResult exhaustive_optimal(const CategoricalTable& table,
                                    std::size_t k) {
  check_k(table, k);
  const std::size_t n = table.n();
  const std::size_t m = table.m();

  // C(n,k) with early cutoff.
  constexpr double kBudget = 1e7;
  double combinations = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    combinations *= static_cast<double>(n - i) / static_cast<double>(i + 1);
    if (combinations > kBudget) {
      throw InvalidInput("instance too large: C(n,k) exceeds the 1e7 "
                         "enumeration budget");
    }
  }

  const ColumnLayout layout(table);
  std::vector<std::int64_t> counts(layout.total, 0);
  for (std::size_t r = 0; r < n; ++r) {
    const auto row = table.row(r);
    for (std::size_t j = 0; j < m; ++j) {
      ++counts[layout.offsets[j] + static_cast<std::size_t>(row[j])];
    }
  }

  const std::int64_t remainder =
      static_cast<std::int64_t>(n) - static_cast<std::int64_t>(k);
  std::vector<std::int64_t> scratch;
  std::vector<std::size_t> current;
  current.reserve(k);
  ExhaustiveResult best;
  best.entropy = kInf;

  auto remove_row = [&](std::size_t r) {
    const auto row = table.row(r);
    for (std::size_t j = 0; j < m; ++j) {
      --counts[layout.offsets[j] + static_cast<std::size_t>(row[j])];
    }
  };
  auto restore_row = [&](std::size_t r) {
    const auto row = table.row(r);
    for (std::size_t j = 0; j < m; ++j) {
      ++counts[layout.offsets[j] + static_cast<std::size_t>(row[j])];
    }
  };

  // Lexicographic enumeration; strict < keeps the first (lexicographically
  // smallest) subset among equal-entropy optima. Counts are integers, so
  // there is no drift to undo.
  auto enumerate = [&](auto&& self, std::size_t start) -> void {
    if (current.size() == k) {
      const double h = fresh_entropy(counts, remainder, scratch);
      if (h < best.entropy) {
        best.entropy = h;
        best.subset = current;
      }
      return;
    }
    const std::size_t remaining = k - current.size();
    for (std::size_t r = start; r + remaining <= n; ++r) {
      remove_row(r);
      current.push_back(r);
      self(self, r + 1);
      current.pop_back();
      restore_row(r);
    }
  };
  enumerate(enumerate, 0);
  return best;
}

}  // namespace entod
