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

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <unistd.h>

#include "entod/error.hpp"
#include "entod/evaluate.hpp"

using entod::BenchAlgorithm;
using entod::BenchAxis;
using entod::ConfigError;
using entod::OutlierResult;
using entod::SynthSpec;

namespace {

OutlierResult make_result(std::vector<std::size_t> selected) {
  OutlierResult result;
  result.k = selected.size();
  result.entropy_trace.assign(selected.size() + 1, 0.0);
  result.selected = std::move(selected);
  return result;
}

std::string temp_file(const std::string& name) {
  static int counter = 0;
  const auto dir = std::filesystem::temp_directory_path() /
                   ("entod_eval_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return (dir / (std::to_string(counter++) + "_" + name)).string();
}

}  // namespace

TEST_CASE("coverage_at counts rare labels in selection prefixes") {
  const std::vector<std::string> labels = {"r", "c", "c", "r", "c",
                                           "c", "c", "r", "c", "c"};
  const auto result = make_result({3, 4, 0, 1, 7});
  const auto report =
      entod::coverage_at(result, labels, {"r"}, {1, 2, 3, 5});

  CHECK(report.total_rare == 3);
  CHECK(report.n == 10);
  REQUIRE(report.rows.size() == 4);
  CHECK(report.rows[0].rare_found == 1);  // {3}
  CHECK(report.rows[1].rare_found == 1);  // {3,4}
  CHECK(report.rows[2].rare_found == 2);  // {3,4,0}
  CHECK(report.rows[3].rare_found == 3);  // all
  CHECK(report.rows[3].coverage == doctest::Approx(1.0));
  CHECK(report.rows[0].ratio == doctest::Approx(0.1));
}

TEST_CASE("coverage_at validates its inputs") {
  const std::vector<std::string> labels = {"r", "c", "c"};
  const auto result = make_result({0, 2});
  CHECK_THROWS_AS(entod::coverage_at(result, labels, {"zzz"}, {1}),
                  ConfigError);
  CHECK_THROWS_AS(entod::coverage_at(result, labels, {"r"}, {3}),
                  ConfigError);
}

TEST_CASE("coverage_at accepts the empty prefix") {
  const std::vector<std::string> labels = {"r", "c"};
  const auto report =
      entod::coverage_at(make_result({}), labels, {"r"}, {0});
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0].rare_found == 0);
  CHECK(report.rows[0].coverage == doctest::Approx(0.0));
}

TEST_CASE("rare_found matches an independent recount and is monotone") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 20 + rng() % 30;
    std::vector<std::string> labels(n);
    for (auto& label : labels) label = (rng() % 4 == 0) ? "rare" : "common";
    if (std::count(labels.begin(), labels.end(), "rare") == 0) {
      labels[rng() % n] = "rare";
    }

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    const std::size_t k = 1 + rng() % n;
    order.resize(k);

    std::vector<std::size_t> ladder;
    for (std::size_t i = 1; i <= k; i += 1 + rng() % 3) ladder.push_back(i);
    const auto report = entod::coverage_at(make_result(order), labels,
                                           {"rare"}, ladder);

    std::size_t previous = 0;
    for (const auto& row : report.rows) {
      std::size_t recount = 0;
      for (std::size_t i = 0; i < row.k; ++i) {
        if (labels[order[i]] == "rare") ++recount;
      }
      CHECK(row.rare_found == recount);
      CHECK(row.rare_found >= previous);
      CHECK(row.rare_found <= std::min(row.k, report.total_rare));
      CHECK(row.coverage == doctest::Approx(
                                static_cast<double>(row.rare_found) /
                                static_cast<double>(report.total_rare)));
      previous = row.rare_found;
    }
  }
}

TEST_CASE("evaluation reports serialize to delimited text") {
  const std::vector<std::string> labels = {"r", "c", "c", "r"};
  const auto report = entod::coverage_at(make_result({0, 1, 3}), labels,
                                         {"r"}, {1, 3});
  const auto path = temp_file("report.csv");
  entod::write_report(report, path);

  std::ifstream in(path);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "k,ratio,rare_found,coverage");
  CHECK(lines[1].rfind("1,", 0) == 0);

  const auto text = entod::format_report(report);
  CHECK(text.find("coverage") != std::string::npos);
}

TEST_CASE("bench produces one point per grid entry and algorithm") {
  SynthSpec base;
  base.attributes = 4;
  base.classes = 3;
  base.seed = 2;
  const auto report = entod::bench_scalability(
      base, BenchAxis::records, {100, 200}, 5,
      {BenchAlgorithm::incremental, BenchAlgorithm::naive});
  REQUIRE(report.points.size() == 4);
  for (const auto& point : report.points) {
    CHECK(point.seconds > 0.0);
    CHECK(point.k == 5);
  }
  CHECK(report.points[0].rows == 100);
  CHECK(report.points[2].rows == 200);
}

TEST_CASE("bench varies the outlier count on a fixed table") {
  SynthSpec base;
  base.attributes = 3;
  base.classes = 2;
  base.seed = 3;
  const auto report = entod::bench_scalability(
      base, BenchAxis::outliers, {1, 4}, 150, {BenchAlgorithm::incremental},
      3);
  REQUIRE(report.points.size() == 2);
  CHECK(report.points[0].x == 1);
  CHECK(report.points[1].x == 4);
  CHECK(report.points[0].rows == 150);
}

TEST_CASE("bench validates grid and fixed parameters") {
  SynthSpec base;
  base.attributes = 2;
  base.classes = 2;
  CHECK_THROWS_AS(entod::bench_scalability(base, BenchAxis::records, {}, 5,
                                           {BenchAlgorithm::incremental}),
                  ConfigError);
  CHECK_THROWS_AS(
      entod::bench_scalability(base, BenchAxis::records, {200, 100}, 5,
                               {BenchAlgorithm::incremental}),
      ConfigError);
  CHECK_THROWS_AS(
      entod::bench_scalability(base, BenchAxis::records, {100}, 100,
                               {BenchAlgorithm::incremental}),
      ConfigError);
  CHECK_THROWS_AS(
      entod::bench_scalability(base, BenchAxis::outliers, {200}, 100,
                               {BenchAlgorithm::incremental}),
      ConfigError);
}

TEST_CASE("bench reports serialize and render") {
  SynthSpec base;
  base.attributes = 2;
  base.classes = 2;
  base.seed = 8;
  const auto report = entod::bench_scalability(
      base, BenchAxis::records, {50, 100}, 2, {BenchAlgorithm::incremental});

  const auto path = temp_file("bench.csv");
  entod::write_bench_report(report, path);
  std::ifstream in(path);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0].rfind("algorithm,", 0) == 0);

  const auto svg = temp_file("bench.svg");
  entod::write_bench_svg(report, svg);
  std::ifstream svg_in(svg);
  std::string head;
  std::getline(svg_in, head);
  CHECK(head.rfind("<svg", 0) == 0);
}
