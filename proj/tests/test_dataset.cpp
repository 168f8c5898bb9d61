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

#include "entod/dataset.hpp"
#include "entod/error.hpp"
#include "oracles.hpp"

using entod::CategoricalTable;
using entod::InvalidInput;

namespace {

const std::vector<std::vector<std::string>> kSmallRows = {
    {"a", "x"}, {"a", "y"}, {"b", "x"}};

}  // namespace

TEST_CASE("encode assigns dense codes in first-occurrence order") {
  const auto table = CategoricalTable::encode(kSmallRows);
  CHECK(table.n() == 3);
  CHECK(table.m() == 2);
  CHECK(table.cardinality(0) == 2);
  CHECK(table.cardinality(1) == 2);
  CHECK(table.dictionary(0).value_names() ==
        std::vector<std::string>{"a", "b"});
  CHECK(table.dictionary(1).value_names() ==
        std::vector<std::string>{"x", "y"});
  CHECK(table.cell(0, 0) == 0);
  CHECK(table.cell(2, 0) == 1);
  CHECK(table.cell(1, 1) == 1);
}

TEST_CASE("encode handles a singleton table") {
  const auto table = CategoricalTable::encode({{"a"}});
  CHECK(table.n() == 1);
  CHECK(table.m() == 1);
  CHECK(table.cardinality(0) == 1);
}

TEST_CASE("encode rejects malformed input") {
  CHECK_THROWS_AS(CategoricalTable::encode({}), InvalidInput);
  CHECK_THROWS_AS(CategoricalTable::encode({{}}), InvalidInput);
  CHECK_THROWS_AS(CategoricalTable::encode({{"a", "x"}, {"a"}}),
                  InvalidInput);
}

TEST_CASE("column_counts counts records per code") {
  const auto table = CategoricalTable::encode(kSmallRows);
  CHECK(table.column_counts(0) == std::vector<std::int64_t>{2, 1});
  CHECK(table.column_counts(1) == std::vector<std::int64_t>{2, 1});
  CHECK_THROWS_AS(table.column_counts(2), InvalidInput);
}

TEST_CASE("decode round-trips and re-encoding is deterministic") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto rows = oracle::random_rows(seed, 1 + seed % 40, 1 + seed % 5,
                                          1 + seed % 6);
    const auto table = CategoricalTable::encode(rows);
    CHECK(table.decode() == rows);

    const auto again = CategoricalTable::encode(rows);
    for (std::size_t r = 0; r < table.n(); ++r) {
      for (std::size_t j = 0; j < table.m(); ++j) {
        REQUIRE(table.cell(r, j) == again.cell(r, j));
      }
    }
  }
}

TEST_CASE("column counts partition the records") {
  for (std::uint64_t seed = 100; seed < 110; ++seed) {
    const auto table = oracle::random_table(seed, 37, 4, 5);
    for (std::size_t j = 0; j < table.m(); ++j) {
      std::int64_t sum = 0;
      for (auto c : table.column_counts(j)) sum += c;
      CHECK(sum == static_cast<std::int64_t>(table.n()));
    }
  }
}

TEST_CASE("select_rows keeps labels and ids aligned") {
  auto table = CategoricalTable::encode(kSmallRows);
  table.set_labels({"pos", "neg", "pos"});
  table.set_record_ids({"r0", "r1", "r2"});
  const auto subset = table.select_rows({2, 0});
  CHECK(subset.n() == 2);
  CHECK(*subset.labels() == std::vector<std::string>{"pos", "pos"});
  CHECK(*subset.record_ids() == std::vector<std::string>{"r2", "r0"});
  CHECK(subset.decode() ==
        std::vector<std::vector<std::string>>{{"b", "x"}, {"a", "x"}});
  CHECK_THROWS_AS(table.select_rows({5}), InvalidInput);
}

TEST_CASE("labels must match the record count") {
  auto table = CategoricalTable::encode(kSmallRows);
  CHECK_THROWS_AS(table.set_labels({"a"}), InvalidInput);
  CHECK_THROWS_AS(table.set_record_ids({"a", "b"}), InvalidInput);
}
