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

// Reference implementations used as test oracles. Everything here computes
// entropies by brute force in the direct -sum p*log(p) form over long
// doubles, independent of the engine's cached ln(N) - S/N route.

#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "entod/dataset.hpp"

namespace oracle {

inline long double counts_entropy(const std::vector<std::int64_t>& counts,
                                  long double (*log_fn)(long double) =
                                      [](long double x) { return std::log(x); }) {
  std::int64_t total = 0;
  for (auto c : counts) total += c;
  long double h = 0.0L;
  for (auto c : counts) {
    if (c > 0) {
      const long double p = static_cast<long double>(c) / total;
      h -= p * log_fn(p);
    }
  }
  return h;
}

// Attribute-independent entropy of the active records, recomputed from the
// raw table.
inline long double independent_entropy(const entod::CategoricalTable& table,
                                       const std::vector<char>& active = {},
                                       long double (*log_fn)(long double) =
                                           [](long double x) { return std::log(x); }) {
  long double h = 0.0L;
  for (std::size_t j = 0; j < table.m(); ++j) {
    std::vector<std::int64_t> counts(table.cardinality(j), 0);
    for (std::size_t r = 0; r < table.n(); ++r) {
      if (!active.empty() && !active[r]) continue;
      ++counts[static_cast<std::size_t>(table.cell(r, j))];
    }
    h += counts_entropy(counts, log_fn);
  }
  return h;
}

// Entropy over distinct full records of the active set.
inline long double joint_entropy(const entod::CategoricalTable& table,
                                 const std::vector<char>& active = {}) {
  std::map<std::vector<entod::Code>, std::int64_t> freq;
  for (std::size_t r = 0; r < table.n(); ++r) {
    if (!active.empty() && !active[r]) continue;
    const auto row = table.row(r);
    ++freq[std::vector<entod::Code>(row.begin(), row.end())];
  }
  std::vector<std::int64_t> counts;
  for (const auto& [key, c] : freq) counts.push_back(c);
  return counts_entropy(counts);
}

inline std::vector<char> mask_without(std::size_t n,
                                      const std::vector<std::size_t>& removed) {
  std::vector<char> active(n, 1);
  for (std::size_t r : removed) active[r] = 0;
  return active;
}

// Seeded random raw rows with values v0..v(p-1) per attribute. mt19937_64
// plus modulo keeps the tables identical on every platform.
inline std::vector<std::vector<std::string>> random_rows(std::uint64_t seed,
                                                         std::size_t n,
                                                         std::size_t m,
                                                         std::size_t p) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::string>> rows(n);
  for (auto& row : rows) {
    row.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
      row.push_back("v" + std::to_string(rng() % p));
    }
  }
  return rows;
}

inline entod::CategoricalTable random_table(std::uint64_t seed, std::size_t n,
                                            std::size_t m, std::size_t p) {
  return entod::CategoricalTable::encode(random_rows(seed, n, m, p));
}

}  // namespace oracle
