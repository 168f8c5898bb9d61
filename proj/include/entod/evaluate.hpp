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
#include <string>
#include <vector>

#include "entod/detect.hpp"
#include "entod/io.hpp"

namespace entod {

struct CoverageRow {
  std::size_t k = 0;
  double ratio = 0.0;  // k / n
  std::size_t rare_found = 0;
  double coverage = 0.0;  // rare_found / total_rare
};

// Rare-class coverage at a ladder of k values: how many of the first k
// selected records carry a rare class label.
struct EvaluationReport {
  std::vector<std::string> rare_labels;
  std::size_t total_rare = 0;
  std::size_t n = 0;
  std::vector<CoverageRow> rows;  // ascending k
};

EvaluationReport coverage_at(const OutlierResult& result,
                             const std::vector<std::string>& labels,
                             const std::vector<std::string>& rare_labels,
                             std::vector<std::size_t> k_ladder);

void write_report(const EvaluationReport& report, const std::string& path,
                  char delimiter = ',');
// Human-readable table for stdout.
std::string format_report(const EvaluationReport& report);

enum class BenchAlgorithm { incremental, naive };
enum class BenchAxis { records, outliers };

struct BenchPoint {
  BenchAlgorithm algorithm = BenchAlgorithm::incremental;
  std::size_t x = 0;  // value of the varying parameter
  std::size_t rows = 0;
  std::size_t k = 0;
  double seconds = 0.0;  // median over repeats, detection only
};

struct BenchReport {
  BenchAxis vary = BenchAxis::records;
  SynthSpec base;
  std::size_t fixed = 0;  // the non-varying parameter (k or rows)
  unsigned threads = 1;
  int repeats = 1;
  bool aborted = false;  // true when resource exhaustion cut the grid short
  std::vector<BenchPoint> points;
};

// Runs each requested algorithm over the grid of the varying parameter on
// synthetic tables generated from `base`. Wall time is measured around the
// detection call only; table generation and encoding are excluded.
BenchReport bench_scalability(const SynthSpec& base, BenchAxis vary,
                              const std::vector<std::size_t>& grid,
                              std::size_t fixed,
                              const std::vector<BenchAlgorithm>& algorithms,
                              int repeats = 1, unsigned threads = 1);

void write_bench_report(const BenchReport& report, const std::string& path,
                        char delimiter = ',');
// Minimal SVG line plot of the bench points, one polyline per algorithm.
void write_bench_svg(const BenchReport& report, const std::string& path);

const char* to_string(BenchAlgorithm algorithm);
const char* to_string(BenchAxis axis);

}  // namespace entod
