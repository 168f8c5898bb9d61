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

// entod - entropy-based outlier detection for categorical data.
//
// Subcommands: detect, evaluate, generate, bench. Every run writes a
// manifest (<output>.manifest.json) with all resolved parameters; a
// recorded run can be replayed with `entod --manifest <file>`.
// Exit codes: 0 success, 1 usage/config error, 2 I/O error,
// 3 internal invariant failure.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "entod/detect.hpp"
#include "entod/entropy.hpp"
#include "entod/error.hpp"
#include "entod/evaluate.hpp"
#include "entod/io.hpp"
#include "entod/version.hpp"
#include "manifest.hpp"

namespace {

using nlohmann::json;

std::string format_nats(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6f", value);
  return buffer;
}

char parse_delimiter(const std::string& text) {
  if (text.size() != 1) {
    throw entod::ConfigError("--delimiter must be a single character");
  }
  if (text[0] == '"') {
    throw entod::ConfigError("--delimiter must not be a quote character");
  }
  return text[0];
}

std::optional<entod::ColumnRef> parse_column(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text.find_first_not_of("0123456789") == std::string::npos) {
    return entod::ColumnRef{static_cast<std::size_t>(std::stoull(text))};
  }
  return entod::ColumnRef{text};
}

// ---------------------------------------------------------------------------
// Per-command argument structs; JSON round-trip powers manifest replay.

struct InputArgs {
  std::string input;
  std::string delimiter = ",";
  bool header = false;
  std::string label_col;
  std::string id_col;
  std::string missing = "?";

  entod::LoadSpec to_load_spec() const {
    entod::LoadSpec spec;
    spec.path = input;
    spec.delimiter = parse_delimiter(delimiter);
    spec.has_header = header;
    spec.label_column = parse_column(label_col);
    spec.id_column = parse_column(id_col);
    spec.missing_token = missing;
    return spec;
  }

  json to_json() const {
    return {{"input", input},   {"delimiter", delimiter},
            {"header", header}, {"label_col", label_col},
            {"id_col", id_col}, {"missing", missing}};
  }
  static InputArgs from_json(const json& j) {
    InputArgs args;
    args.input = j.at("input");
    args.delimiter = j.value("delimiter", ",");
    args.header = j.value("header", false);
    args.label_col = j.value("label_col", "");
    args.id_col = j.value("id_col", "");
    args.missing = j.value("missing", "?");
    return args;
  }
};

struct DetectArgs {
  InputArgs in;
  std::size_t k = 0;
  unsigned threads = 0;  // 0 = all hardware threads
  std::string output = "result.csv";

  json to_json() const {
    json j = in.to_json();
    j["k"] = k;
    j["threads"] = threads;
    j["output"] = output;
    return j;
  }
  static DetectArgs from_json(const json& j) {
    DetectArgs args;
    args.in = InputArgs::from_json(j);
    args.k = j.at("k");
    args.threads = j.value("threads", 0u);
    args.output = j.value("output", "result.csv");
    return args;
  }
};

struct EvaluateArgs {
  InputArgs in;
  std::vector<std::string> rare;
  std::vector<std::size_t> ladder;
  unsigned threads = 0;
  std::string output = "report.csv";
  std::string downsample_class;
  std::size_t downsample_keep = 0;
  std::uint64_t downsample_seed = 1;

  json to_json() const {
    json j = in.to_json();
    j["rare"] = rare;
    j["k_ladder"] = ladder;
    j["threads"] = threads;
    j["output"] = output;
    j["downsample_class"] = downsample_class;
    j["downsample_keep"] = downsample_keep;
    j["downsample_seed"] = downsample_seed;
    return j;
  }
  static EvaluateArgs from_json(const json& j) {
    EvaluateArgs args;
    args.in = InputArgs::from_json(j);
    args.rare = j.at("rare").get<std::vector<std::string>>();
    args.ladder = j.at("k_ladder").get<std::vector<std::size_t>>();
    args.threads = j.value("threads", 0u);
    args.output = j.value("output", "report.csv");
    args.downsample_class = j.value("downsample_class", "");
    args.downsample_keep = j.value("downsample_keep", std::size_t{0});
    args.downsample_seed = j.value("downsample_seed", std::uint64_t{1});
    return args;
  }
};

struct GenerateArgs {
  std::size_t rows = 0;
  std::size_t attrs = 0;
  std::size_t classes = 1;
  std::size_t values = 10;
  double noise = 0.1;
  std::uint64_t seed = 0;
  std::string delimiter = ",";
  std::string output = "synthetic.data";

  entod::SynthSpec to_spec() const {
    entod::SynthSpec spec;
    spec.rows = rows;
    spec.attributes = attrs;
    spec.classes = classes;
    spec.values_per_attribute = values;
    spec.noise = noise;
    spec.seed = seed;
    return spec;
  }

  json to_json() const {
    return {{"rows", rows},     {"attrs", attrs}, {"classes", classes},
            {"values", values}, {"noise", noise}, {"seed", seed},
            {"delimiter", delimiter}, {"output", output}};
  }
  static GenerateArgs from_json(const json& j) {
    GenerateArgs args;
    args.rows = j.at("rows");
    args.attrs = j.at("attrs");
    args.classes = j.value("classes", std::size_t{1});
    args.values = j.value("values", std::size_t{10});
    args.noise = j.value("noise", 0.1);
    args.seed = j.value("seed", std::uint64_t{0});
    args.delimiter = j.value("delimiter", ",");
    args.output = j.value("output", "synthetic.data");
    return args;
  }
};

struct BenchArgs {
  std::string vary = "records";
  std::vector<std::size_t> grid;
  std::size_t k = 30;
  std::size_t rows = 100000;
  std::size_t attrs = 10;
  std::size_t classes = 10;
  std::size_t values = 10;
  double noise = 0.1;
  std::uint64_t seed = 5;
  std::vector<std::string> algorithms = {"incremental"};
  int repeats = 1;
  unsigned threads = 1;
  std::string output = "bench.csv";
  std::string plot;

  json to_json() const {
    return {{"vary", vary},       {"grid", grid},
            {"k", k},             {"rows", rows},
            {"attrs", attrs},     {"classes", classes},
            {"values", values},   {"noise", noise},
            {"seed", seed},       {"algorithms", algorithms},
            {"repeats", repeats}, {"threads", threads},
            {"output", output},   {"plot", plot}};
  }
  static BenchArgs from_json(const json& j) {
    BenchArgs args;
    args.vary = j.value("vary", "records");
    args.grid = j.at("grid").get<std::vector<std::size_t>>();
    args.k = j.value("k", std::size_t{30});
    args.rows = j.value("rows", std::size_t{100000});
    args.attrs = j.value("attrs", std::size_t{10});
    args.classes = j.value("classes", std::size_t{10});
    args.values = j.value("values", std::size_t{10});
    args.noise = j.value("noise", 0.1);
    args.seed = j.value("seed", std::uint64_t{5});
    args.algorithms = j.value("algorithms",
                              std::vector<std::string>{"incremental"});
    args.repeats = j.value("repeats", 1);
    args.threads = j.value("threads", 1u);
    args.output = j.value("output", "bench.csv");
    args.plot = j.value("plot", "");
    return args;
  }
};

// ---------------------------------------------------------------------------

void run_detect(const DetectArgs& args) {
  const auto table = entod::load_table(args.in.to_load_spec());
  std::cout << "records: " << table.n() << "  attributes: " << table.m()
            << "\n";

  entod::DetectOptions options;
  options.threads = args.threads;
  const auto start = std::chrono::steady_clock::now();
  const auto result = entod::greedy_detect(table, args.k, options);
  const auto stop = std::chrono::steady_clock::now();
  const double elapsed = std::chrono::duration<double>(stop - start).count();

  entod::write_result(result, table, args.output);

  entod::cli::RunManifest manifest;
  manifest.command = "detect";
  manifest.parameters = args.to_json();
  manifest.input_digest = entod::cli::file_digest(args.in.input);
  entod::cli::write_manifest(manifest, args.output + ".manifest.json");

  std::cout << "initial entropy: " << format_nats(result.entropy_trace.front())
            << "\nfinal entropy: " << format_nats(result.entropy_trace.back())
            << "\nelapsed: " << elapsed << " s\nwrote " << args.output << " ("
            << result.selected.size() << " outliers)\n";
}

void run_evaluate(const EvaluateArgs& args) {
  if (args.rare.empty()) {
    throw entod::ConfigError("--rare must name at least one class label");
  }
  if (args.ladder.empty()) {
    throw entod::ConfigError("--k-ladder must contain at least one entry");
  }
  auto table = entod::load_table(args.in.to_load_spec());
  if (!table.labels()) {
    throw entod::ConfigError("evaluation requires --label-col");
  }
  if (!args.downsample_class.empty()) {
    table = entod::downsample_class(table, args.downsample_class,
                                    args.downsample_keep,
                                    args.downsample_seed);
    std::cout << "downsampled \"" << args.downsample_class << "\" to "
              << args.downsample_keep << " records, " << table.n()
              << " total\n";
  }

  std::size_t k_max = 0;
  for (std::size_t k : args.ladder) k_max = std::max(k_max, k);

  entod::DetectOptions options;
  options.threads = args.threads;
  const auto result = entod::greedy_detect(table, k_max, options);
  const auto report =
      entod::coverage_at(result, *table.labels(), args.rare, args.ladder);
  entod::write_report(report, args.output);

  entod::cli::RunManifest manifest;
  manifest.command = "evaluate";
  manifest.parameters = args.to_json();
  manifest.input_digest = entod::cli::file_digest(args.in.input);
  entod::cli::write_manifest(manifest, args.output + ".manifest.json");

  std::cout << entod::format_report(report) << "wrote " << args.output
            << "\n";
}

void run_generate(const GenerateArgs& args) {
  const auto table = entod::generate_synthetic(args.to_spec());
  entod::write_table(table, args.output, parse_delimiter(args.delimiter));

  entod::cli::RunManifest manifest;
  manifest.command = "generate";
  manifest.parameters = args.to_json();
  entod::cli::write_manifest(manifest, args.output + ".manifest.json");

  std::cout << "records: " << table.n() << "  attributes: " << table.m()
            << "  classes: " << args.classes << "\nwrote " << args.output
            << "\n";
}

void run_bench(const BenchArgs& args) {
  entod::BenchAxis vary;
  std::size_t fixed;
  if (args.vary == "records") {
    vary = entod::BenchAxis::records;
    fixed = args.k;
  } else if (args.vary == "outliers") {
    vary = entod::BenchAxis::outliers;
    fixed = args.rows;
  } else {
    throw entod::ConfigError("--vary must be 'records' or 'outliers'");
  }

  std::vector<entod::BenchAlgorithm> algorithms;
  for (const auto& name : args.algorithms) {
    if (name == "incremental") {
      algorithms.push_back(entod::BenchAlgorithm::incremental);
    } else if (name == "naive") {
      algorithms.push_back(entod::BenchAlgorithm::naive);
    } else {
      throw entod::ConfigError("unknown algorithm \"" + name +
                               "\" (expected incremental or naive)");
    }
  }

  entod::SynthSpec base;
  base.attributes = args.attrs;
  base.classes = args.classes;
  base.values_per_attribute = args.values;
  base.noise = args.noise;
  base.seed = args.seed;

  const auto report = entod::bench_scalability(base, vary, args.grid, fixed,
                                               algorithms, args.repeats,
                                               args.threads);
  for (const auto& point : report.points) {
    std::cout << entod::to_string(point.algorithm) << " rows=" << point.rows
              << " k=" << point.k << " t=" << point.seconds << " s\n";
  }
  if (report.aborted) {
    std::cout << "bench aborted early; flushing partial report\n";
  }
  entod::write_bench_report(report, args.output);
  if (!args.plot.empty()) entod::write_bench_svg(report, args.plot);

  entod::cli::RunManifest manifest;
  manifest.command = "bench";
  manifest.parameters = args.to_json();
  entod::cli::write_manifest(manifest, args.output + ".manifest.json");

  std::cout << "wrote " << args.output;
  if (!args.plot.empty()) std::cout << " and " << args.plot;
  std::cout << "\n";
}

void replay_manifest(const std::string& path) {
  const json j = entod::cli::read_manifest(path);
  const std::string command = j.at("command");
  const json& parameters = j.at("parameters");
  std::cout << "replaying " << command << " from " << path << "\n";
  if (command == "detect") {
    run_detect(DetectArgs::from_json(parameters));
  } else if (command == "evaluate") {
    run_evaluate(EvaluateArgs::from_json(parameters));
  } else if (command == "generate") {
    run_generate(GenerateArgs::from_json(parameters));
  } else if (command == "bench") {
    run_bench(BenchArgs::from_json(parameters));
  } else {
    throw entod::ConfigError("unknown command \"" + command +
                             "\" in manifest");
  }
}

void add_input_options(CLI::App* cmd, InputArgs& args) {
  cmd->add_option("--input", args.input, "Input dataset file")->required();
  cmd->add_option("--delimiter", args.delimiter,
                  "Field delimiter (single character)")
      ->capture_default_str();
  cmd->add_flag("--header", args.header, "First line is a header");
  cmd->add_option("--label-col", args.label_col,
                  "Class label column (index or header name)");
  cmd->add_option("--id-col", args.id_col,
                  "Record id column (index or header name)");
  cmd->add_option("--missing", args.missing,
                  "Missing-value token, kept as an ordinary category")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entropy-based outlier detection for categorical data"};
  app.set_version_flag("--version", std::string("entod ") + entod::kVersion);
  std::string manifest_path;
  app.add_option("--manifest", manifest_path,
                 "Replay a recorded run from its manifest file");

  DetectArgs detect;
  auto* detect_cmd =
      app.add_subcommand("detect", "Find the top-k outlier records");
  add_input_options(detect_cmd, detect.in);
  detect_cmd->add_option("--k", detect.k, "Number of outliers to select")
      ->required();
  detect_cmd->add_option("--threads", detect.threads,
                         "Scan threads (0 = all cores)")
      ->capture_default_str();
  detect_cmd->add_option("--output", detect.output, "Result file")
      ->capture_default_str();

  EvaluateArgs evaluate;
  auto* evaluate_cmd = app.add_subcommand(
      "evaluate", "Rare-class coverage at a ladder of k values");
  add_input_options(evaluate_cmd, evaluate.in);
  evaluate_cmd
      ->add_option("--rare", evaluate.rare,
                   "Rare class labels (comma separated)")
      ->required()
      ->delimiter(',');
  evaluate_cmd
      ->add_option("--k-ladder", evaluate.ladder,
                   "k values to report (comma separated)")
      ->required()
      ->delimiter(',');
  evaluate_cmd->add_option("--threads", evaluate.threads,
                           "Scan threads (0 = all cores)")
      ->capture_default_str();
  evaluate_cmd->add_option("--output", evaluate.output, "Report file")
      ->capture_default_str();
  evaluate_cmd->add_option("--downsample-class", evaluate.downsample_class,
                           "Class label to downsample before evaluating");
  evaluate_cmd->add_option("--downsample-keep", evaluate.downsample_keep,
                           "Records of the downsampled class to keep");
  evaluate_cmd->add_option("--downsample-seed", evaluate.downsample_seed,
                           "Seed of the downsampling draw")
      ->capture_default_str();

  GenerateArgs generate;
  auto* generate_cmd =
      app.add_subcommand("generate", "Write a synthetic categorical dataset");
  generate_cmd->add_option("--rows", generate.rows, "Record count")
      ->required();
  generate_cmd->add_option("--attrs", generate.attrs, "Attribute count")
      ->required();
  generate_cmd->add_option("--classes", generate.classes, "Class count")
      ->capture_default_str();
  generate_cmd->add_option("--values", generate.values,
                           "Distinct values per attribute")
      ->capture_default_str();
  generate_cmd->add_option("--noise", generate.noise,
                           "Per-cell replacement probability")
      ->capture_default_str();
  generate_cmd->add_option("--seed", generate.seed, "Generator seed")
      ->capture_default_str();
  generate_cmd->add_option("--delimiter", generate.delimiter,
                           "Field delimiter")
      ->capture_default_str();
  generate_cmd->add_option("--output", generate.output, "Dataset file")
      ->capture_default_str();

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand(
      "bench", "Wall-clock scalability over a synthetic grid");
  bench_cmd->add_option("--vary", bench.vary, "Varying axis: records|outliers")
      ->capture_default_str();
  bench_cmd->add_option("--grid", bench.grid,
                        "Grid of the varying parameter (comma separated)")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--k", bench.k, "Outliers (fixed when varying records)")
      ->capture_default_str();
  bench_cmd->add_option("--rows", bench.rows,
                        "Records (fixed when varying outliers)")
      ->capture_default_str();
  bench_cmd->add_option("--attrs", bench.attrs, "Attribute count")
      ->capture_default_str();
  bench_cmd->add_option("--classes", bench.classes, "Class count")
      ->capture_default_str();
  bench_cmd->add_option("--values", bench.values,
                        "Distinct values per attribute")
      ->capture_default_str();
  bench_cmd->add_option("--noise", bench.noise, "Generator noise")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Generator seed")
      ->capture_default_str();
  bench_cmd
      ->add_option("--algorithms", bench.algorithms,
                   "Algorithms to time: incremental,naive")
      ->delimiter(',');
  bench_cmd->add_option("--repeats", bench.repeats,
                        "Runs per point (median reported)")
      ->capture_default_str();
  bench_cmd->add_option("--threads", bench.threads, "Scan threads")
      ->capture_default_str();
  bench_cmd->add_option("--output", bench.output, "Report file")
      ->capture_default_str();
  bench_cmd->add_option("--plot", bench.plot, "Optional SVG plot file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // collapse CLI11's exit-code zoo onto the documented 0/1 split
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (!manifest_path.empty()) {
      replay_manifest(manifest_path);
    } else if (detect_cmd->parsed()) {
      run_detect(detect);
    } else if (evaluate_cmd->parsed()) {
      run_evaluate(evaluate);
    } else if (generate_cmd->parsed()) {
      run_generate(generate);
    } else if (bench_cmd->parsed()) {
      run_bench(bench);
    } else {
      std::cerr << app.help();
      return 1;
    }
  } catch (const entod::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const entod::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 2;
  } catch (const entod::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
