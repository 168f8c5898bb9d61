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

#include <cstddef>
#include <vector>

#include "entod/dataset.hpp"

namespace entod {

struct OutlierResult {
  // Record indices in selection order.
  std::vector<std::size_t> selected;
  // k+1 entries: entropy of the active set before any removal, then after
  // each removal, in nats. Not necessarily monotone.
  std::vector<double> entropy_trace;
  // Requested outlier count.
  std::size_t k = 0;
};

struct DetectOptions {
  // Number of worker threads per scan; 0 means all hardware threads.
  // The result is identical for every thread count.
  unsigned threads = 1;
};

// Greedy outlier detection: k scans over the active records, each scan
// scoring every candidate against the current frequency model in O(m) and
// removing the record whose removal decreases the attribute-independent
// entropy the most. Ties break toward the lowest record index.
OutlierResult greedy_detect(const CategoricalTable& table, std::size_t k,
                            const DetectOptions& options = {});

// Same selection policy, no incremental state: every candidate is scored by
// physically rebuilding the frequency counts of the active set without the
// candidate and evaluating the entropy from scratch. O(n^2 * k * m).
// Correctness oracle for greedy_detect and baseline for the speed benchmark.
OutlierResult naive_greedy_detect(const CategoricalTable& table,
                                  std::size_t k);

struct ExhaustiveResult {
  // Lexicographically smallest size-k index set minimizing the remainder
  // entropy (among optima with equal computed entropy).
  std::vector<std::size_t> subset;
  double entropy = 0.0;
};

// Exact minimum over all C(n,k) subsets. Guarded to C(n,k) <= 10^7.
ExhaustiveResult exhaustive_optimal(const CategoricalTable& table,
                                    std::size_t k);

}  // namespace entod
