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
#include <fstream>
#include <string>

#include <json.hpp>

#include "entod/error.hpp"
#include "entod/version.hpp"

namespace entod::cli {

// A manifest records every resolved parameter of a run so that the run can
// be replayed with `entod --manifest <file>`. Given identical hardware for
// timings, the manifest fully determines the outputs.
struct RunManifest {
  std::string command;
  nlohmann::json parameters;
  std::string input_digest;  // empty when the run reads no input file

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["version"] = entod::kVersion;
    j["parameters"] = parameters;
    if (!input_digest.empty()) j["input_digest"] = input_digest;
    return j;
  }
};

// FNV-1a 64-bit digest of a file's bytes.
inline std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  char buffer[1 << 16];
  while (in.read(buffer, sizeof(buffer)) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      hash ^= static_cast<unsigned char>(buffer[i]);
      hash *= 0x100000001B3ULL;
    }
  }
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(hash));
  return hex;
}

inline void write_manifest(const RunManifest& manifest,
                           const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << manifest.to_json().dump(2) << '\n';
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

inline nlohmann::json read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (!j.contains("command") || !j.contains("parameters")) {
    throw ConfigError(path + ": not a run manifest");
  }
  return j;
}

}  // namespace entod::cli
