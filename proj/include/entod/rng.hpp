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

namespace entod {

// SplitMix64 output function (Steele, Lea & Flood, "Fast splittable
// pseudorandom number generators", OOPSLA 2014). All seeded randomness in
// this project goes through these routines so that generated datasets and
// sampling decisions are reproducible across platforms and languages.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Counter-based keyed word: one pseudorandom value per (seed, a, b) triple.
// Cells of a synthetic table are keyed by (record, attribute) so that a
// table is a prefix of any longer table generated from the same spec.
inline std::uint64_t mix64(std::uint64_t seed, std::uint64_t a,
                           std::uint64_t b) {
  return splitmix64(splitmix64(splitmix64(seed) ^ a) ^ b);
}

// Multiply-shift reduction of a 64-bit word onto [0, bound).
inline std::uint64_t bounded(std::uint64_t word, std::uint64_t bound) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(word) * bound) >> 64);
}

// Uniform double in [0, 1) from the top 53 bits.
inline double to_unit(std::uint64_t word) {
  return static_cast<double>(word >> 11) * 0x1.0p-53;
}

// Sequential SplitMix64 stream, used where draws are inherently ordered
// (e.g. the partial Fisher-Yates shuffle in downsampling).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next_below(std::uint64_t bound) {
    return bounded(next(), bound);
  }

 private:
  std::uint64_t state_;
};

}  // namespace entod
