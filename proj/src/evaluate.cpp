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

#include "entod/evaluate.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <new>
#include <set>
#include <sstream>

#include "entod/error.hpp"

namespace entod {

EvaluationReport coverage_at(const OutlierResult& result,
                             const std::vector<std::string>& labels,
                             const std::vector<std::string>& rare_labels,
                             std::vector<std::size_t> k_ladder) {
  for (std::size_t r : result.selected) {
    if (r >= labels.size()) {
      throw InvalidInput("labels do not cover record " + std::to_string(r));
    }
  }
  const std::set<std::string> label_set(labels.begin(), labels.end());
  const std::set<std::string> rare(rare_labels.begin(), rare_labels.end());
  for (const auto& label : rare) {
    if (!label_set.count(label)) {
      throw ConfigError("unknown rare label \"" + label + "\"");
    }
  }
  std::sort(k_ladder.begin(), k_ladder.end());
  k_ladder.erase(std::unique(k_ladder.begin(), k_ladder.end()),
                 k_ladder.end());
  for (std::size_t k : k_ladder) {
    if (k > result.k) {
      throw ConfigError("k-ladder entry " + std::to_string(k) +
                        " exceeds detected outlier count " +
                        std::to_string(result.k));
    }
  }

  EvaluationReport report;
  report.rare_labels.assign(rare.begin(), rare.end());
  report.n = labels.size();
  for (const auto& label : labels) {
    if (rare.count(label)) ++report.total_rare;
  }

  // rare_prefix[i] = rare records among the first i selections.
  std::vector<std::size_t> rare_prefix(result.selected.size() + 1, 0);
  for (std::size_t i = 0; i < result.selected.size(); ++i) {
    rare_prefix[i + 1] =
        rare_prefix[i] + (rare.count(labels[result.selected[i]]) ? 1 : 0);
  }
  for (std::size_t k : k_ladder) {
    CoverageRow row;
    row.k = k;
    row.ratio = static_cast<double>(k) / static_cast<double>(report.n);
    row.rare_found = rare_prefix[k];
    row.coverage = static_cast<double>(row.rare_found) /
                   static_cast<double>(report.total_rare);
    report.rows.push_back(row);
  }
  return report;
}

void write_report(const EvaluationReport& report, const std::string& path,
                  char delimiter) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << "k" << delimiter << "ratio" << delimiter << "rare_found" << delimiter
      << "coverage\n";
  char buffer[64];
  for (const auto& row : report.rows) {
    std::snprintf(buffer, sizeof(buffer), "%.6f%c%zu%c%.6f", row.ratio,
                  delimiter, row.rare_found, delimiter, row.coverage);
    out << row.k << delimiter << buffer << '\n';
  }
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

std::string format_report(const EvaluationReport& report) {
  std::ostringstream out;
  char buffer[128];
  out << "top-k   ratio     rare found   coverage\n";
  for (const auto& row : report.rows) {
    std::snprintf(buffer, sizeof(buffer), "%-7zu %-9.4f %zu/%-10zu %.2f%%\n",
                  row.k, row.ratio, row.rare_found, report.total_rare,
                  100.0 * row.coverage);
    out << buffer;
  }
  return out.str();
}

namespace {

double run_once(const CategoricalTable& table, std::size_t k,
                BenchAlgorithm algorithm, unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  if (algorithm == BenchAlgorithm::incremental) {
    DetectOptions options;
    options.threads = threads;
    greedy_detect(table, k, options);
  } else {
    naive_greedy_detect(table, k);
  }
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

double median_time(const CategoricalTable& table, std::size_t k,
                   BenchAlgorithm algorithm, unsigned threads, int repeats) {
  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(repeats));
  for (int i = 0; i < repeats; ++i) {
    times.push_back(run_once(table, k, algorithm, threads));
  }
  std::sort(times.begin(), times.end());
  const std::size_t mid = times.size() / 2;
  if (times.size() % 2 == 1) return times[mid];
  return 0.5 * (times[mid - 1] + times[mid]);
}

}  // namespace

BenchReport bench_scalability(const SynthSpec& base, BenchAxis vary,
                              const std::vector<std::size_t>& grid,
                              std::size_t fixed,
                              const std::vector<BenchAlgorithm>& algorithms,
                              int repeats, unsigned threads) {
  if (grid.empty()) throw ConfigError("bench grid is empty");
  if (!std::is_sorted(grid.begin(), grid.end())) {
    throw ConfigError("bench grid must be ascending");
  }
  if (algorithms.empty()) throw ConfigError("no bench algorithms requested");
  if (repeats < 1) throw ConfigError("bench repeats must be at least 1");
  if (vary == BenchAxis::records) {
    if (fixed >= grid.front()) {
      throw ConfigError("fixed outlier count " + std::to_string(fixed) +
                        " must be smaller than the smallest record grid "
                        "point");
    }
  } else {
    if (grid.back() >= fixed) {
      throw ConfigError("largest outlier grid point must be smaller than "
                        "the fixed record count " +
                        std::to_string(fixed));
    }
  }

  BenchReport report;
  report.vary = vary;
  report.base = base;
  report.fixed = fixed;
  report.threads = threads;
  report.repeats = repeats;

  try {
    if (vary == BenchAxis::records) {
      for (std::size_t rows : grid) {
        SynthSpec spec = base;
        spec.rows = rows;
        const CategoricalTable table = generate_synthetic(spec);
        for (BenchAlgorithm algorithm : algorithms) {
          BenchPoint point;
          point.algorithm = algorithm;
          point.x = rows;
          point.rows = rows;
          point.k = fixed;
          point.seconds = median_time(table, fixed, algorithm, threads, repeats);
          report.points.push_back(point);
        }
      }
    } else {
      SynthSpec spec = base;
      spec.rows = fixed;
      const CategoricalTable table = generate_synthetic(spec);
      for (std::size_t k : grid) {
        for (BenchAlgorithm algorithm : algorithms) {
          BenchPoint point;
          point.algorithm = algorithm;
          point.x = k;
          point.rows = fixed;
          point.k = k;
          point.seconds = median_time(table, k, algorithm, threads, repeats);
          report.points.push_back(point);
        }
      }
    }
  } catch (const std::bad_alloc&) {
    report.aborted = true;  // flush what we have
  }
  return report;
}

const char* to_string(BenchAlgorithm algorithm) {
  return algorithm == BenchAlgorithm::incremental ? "incremental" : "naive";
}

const char* to_string(BenchAxis axis) {
  return axis == BenchAxis::records ? "records" : "outliers";
}

void write_bench_report(const BenchReport& report, const std::string& path,
                        char delimiter) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << "algorithm" << delimiter << "vary" << delimiter << "x" << delimiter
      << "rows" << delimiter << "k" << delimiter << "attributes" << delimiter
      << "classes" << delimiter << "seed" << delimiter << "threads"
      << delimiter << "repeats" << delimiter << "seconds\n";
  char buffer[32];
  for (const auto& point : report.points) {
    std::snprintf(buffer, sizeof(buffer), "%.6f", point.seconds);
    out << to_string(point.algorithm) << delimiter << to_string(report.vary)
        << delimiter << point.x << delimiter << point.rows << delimiter
        << point.k << delimiter << report.base.attributes << delimiter
        << report.base.classes << delimiter << report.base.seed << delimiter
        << report.threads << delimiter << report.repeats << delimiter
        << buffer << '\n';
  }
  if (report.aborted) out << "# aborted: resource exhaustion\n";
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

void write_bench_svg(const BenchReport& report, const std::string& path) {
  if (report.points.empty()) throw InvalidInput("no bench points to plot");
  const double width = 640, height = 420;
  const double left = 70, right = 20, top = 30, bottom = 50;

  double x_max = 0, y_max = 0;
  for (const auto& p : report.points) {
    x_max = std::max(x_max, static_cast<double>(p.x));
    y_max = std::max(y_max, p.seconds);
  }
  if (x_max == 0) x_max = 1;
  if (y_max == 0) y_max = 1;
  auto sx = [&](double x) {
    return left + (width - left - right) * x / x_max;
  };
  auto sy = [&](double y) {
    return height - bottom - (height - top - bottom) * y / y_max;
  };

  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<line x1=\"" << left << "\" y1=\"" << height - bottom << "\" x2=\""
      << width - right << "\" y2=\"" << height - bottom
      << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left
      << "\" y2=\"" << height - bottom << "\" stroke=\"black\"/>\n";

  const char* colors[] = {"steelblue", "darkorange"};
  for (int a = 0; a < 2; ++a) {
    const auto algorithm =
        a == 0 ? BenchAlgorithm::incremental : BenchAlgorithm::naive;
    std::ostringstream polyline;
    bool any = false;
    for (const auto& p : report.points) {
      if (p.algorithm != algorithm) continue;
      polyline << sx(static_cast<double>(p.x)) << ',' << sy(p.seconds) << ' ';
      any = true;
    }
    if (!any) continue;
    out << "<polyline fill=\"none\" stroke=\"" << colors[a]
        << "\" stroke-width=\"2\" points=\"" << polyline.str() << "\"/>\n";
    for (const auto& p : report.points) {
      if (p.algorithm != algorithm) continue;
      out << "<circle cx=\"" << sx(static_cast<double>(p.x)) << "\" cy=\""
          << sy(p.seconds) << "\" r=\"3\" fill=\"" << colors[a] << "\"/>\n";
    }
    out << "<text x=\"" << left + 10 << "\" y=\"" << top + 16 * (a + 1)
        << "\" fill=\"" << colors[a] << "\" font-size=\"12\">"
        << to_string(algorithm) << "</text>\n";
  }

  out << "<text x=\"" << (width / 2) << "\" y=\"" << height - 12
      << "\" font-size=\"12\" text-anchor=\"middle\">"
      << (report.vary == BenchAxis::records ? "records" : "outliers")
      << " (max " << static_cast<std::size_t>(x_max) << ")</text>\n"
      << "<text x=\"14\" y=\"" << (height / 2)
      << "\" font-size=\"12\" transform=\"rotate(-90 14 " << (height / 2)
      << ")\" text-anchor=\"middle\">seconds (max " << y_max << ")</text>\n"
      << "</svg>\n";
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace entod
