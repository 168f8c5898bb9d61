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

#include <stdexcept>
#include <string>

namespace entod {

// Error taxonomy, aligned with the CLI exit codes:
//   InvalidInput / ConfigError -> 1, IoError / ParseError -> 2,
//   InternalError -> 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed in-memory input: ragged rows, empty tables, out-of-range k.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Bad user-supplied parameters: unknown labels, inconsistent specs.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Filesystem failures: unreadable input, unwritable output.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed data file contents; message carries the offending line number.
class ParseError : public IoError {
 public:
  using IoError::IoError;
};

// A broken internal invariant, e.g. a frequency model asked to remove a
// record it does not contain.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace entod
