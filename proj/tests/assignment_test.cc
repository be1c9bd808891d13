/* Copyright 2026 The lsc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "lsc/assignment.h"
#include "lsc/errors.h"
#include "lsc/random.h"

namespace lsc {
namespace {

const char* kReference5x8 =
    "0 0 0 0 * * * *\n"
    "0 0 0 0 * * * *\n"
    "* * * 0 0 0 0 0\n"
    "* * * 0 * 0 * *\n"
    "0 * * * * * * *\n";

TEST(Assignment, ParsesReference5x8) {
  const Assignment a = Assignment::parse(kReference5x8);
  EXPECT_EQ(a.n_workers(), 5u);
  EXPECT_EQ(a.n_datasets(), 8u);
  EXPECT_EQ(a.support(3), (IndexSet{1, 2, 3}));
  EXPECT_EQ(a.complement(4), (IndexSet{4, 6}));
  EXPECT_EQ(a.holders(4), (IndexSet{5}));
  EXPECT_EQ(a.non_holders(1), (IndexSet{1, 2, 5}));
  EXPECT_EQ(a.replication(), 1u);
  EXPECT_EQ(a.max_load(), 7u);
  EXPECT_EQ(a.star_count(), 4u + 4 + 3 + 6 + 7);
}

TEST(Assignment, FileMatchesInlineText) {
  EXPECT_EQ(Assignment::load(std::string(LSC_DATA_DIR) + "/ex851.dam"), Assignment::parse(kReference5x8));
  const Assignment f3 = Assignment::load(std::string(LSC_DATA_DIR) + "/footnote3.dam");
  EXPECT_EQ(f3.n_workers(), 3u);
  EXPECT_EQ(f3.n_datasets(), 5u);
  EXPECT_EQ(f3.replication(), 1u);
  EXPECT_EQ(f3.holders(1), (IndexSet{3}));
}

TEST(Assignment, TrivialShapes) {
  const Assignment one = Assignment::parse("*");
  EXPECT_EQ(one.n_workers(), 1u);
  EXPECT_EQ(one.support(1), (IndexSet{1}));
  const Assignment two = Assignment::parse("0\n*");
  EXPECT_EQ(two.holders(1), (IndexSet{2}));
  EXPECT_EQ(Assignment::parse("***\n***").replication(), 2u);
}

TEST(Assignment, AcceptsCompactCommentsAndBlankLines) {
  const Assignment a = Assignment::parse("# comment\n\n00*\n ***\t\n");
  EXPECT_EQ(a.serialize(), "0 0 *\n* * *\n");
}

TEST(Assignment, ReplicationMatchesColumnCount) {
  // Random patterns; r recomputed from the raw cells.
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(8), k = 1 + rng.below(10);
    std::vector<bool> cells(n * k);
    for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = rng.below(2);
    for (std::size_t c = 0; c < k; ++c) cells[rng.below(n) * k + c] = true;
    const Assignment a(n, k, cells);
    std::size_t r = n;
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t col = 0;
      for (std::size_t w = 0; w < n; ++w) col += cells[w * k + c];
      r = std::min(r, col);
    }
    ASSERT_EQ(a.replication(), r);
    ASSERT_EQ(Assignment::parse(a.serialize()), a);
    for (std::size_t w = 1; w <= n; ++w) ASSERT_EQ(a.support(w).size() + a.complement(w).size(), k);
  }
}

void expect_parse_error(const std::string& text, std::size_t line, std::size_t column) {
  try {
    Assignment::parse(text);
    FAIL() << "no error for: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << text;
    EXPECT_EQ(e.column(), column) << text;
  }
}

TEST(Assignment, ParseErrorsNameLineAndColumn) {
  expect_parse_error("* 0\n* x\n", 2, 3);
  expect_parse_error("* 0\n*  0\n", 2, 2);
  expect_parse_error("* 0 *\n* 0\n", 2, 1);
  EXPECT_THROW(Assignment::parse(""), ParseError);
  EXPECT_THROW(Assignment::parse("# only a comment\n"), ParseError);
}

TEST(Assignment, UnassignedDatasetIsValidationError) {
  try {
    Assignment::parse("* 0\n* 0\n");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("dataset 2"), std::string::npos);
  }
  EXPECT_NO_THROW(Assignment::parse("* 0\n* 0\n", {.allow_unassigned_datasets = true}));
}

TEST(Assignment, IndicesAreRangeChecked) {
  const Assignment a = Assignment::parse(kReference5x8);
  EXPECT_THROW(a.support(0), UsageError);
  EXPECT_THROW(a.support(6), UsageError);
  EXPECT_THROW(a.holders(9), UsageError);
}

TEST(ExtendedComplement, SetArithmetic) {
  EXPECT_EQ(extended_complement(IndexSet{4, 6}, 2, 8), (IndexSet{4, 6, 12, 14}));
  EXPECT_EQ(extended_complement(IndexSet{4, 6}, 1, 8), (IndexSet{4, 6}));
  EXPECT_EQ(extended_complement(IndexSet{}, 3, 8), IndexSet{});
  EXPECT_EQ(Assignment::parse(kReference5x8).extended_complement(4, 2), (IndexSet{4, 6, 12, 14}));
}

TEST(Cost, ParsingAndReduction) {
  EXPECT_EQ(Cost::parse("3/2"), Cost(3, 2));
  EXPECT_EQ(Cost::parse("4/2"), Cost(2, 1));
  EXPECT_EQ(Cost::parse("2").q(), 1);
  EXPECT_EQ(Cost(6, 4).str(), "3/2");
  EXPECT_THROW(Cost::parse("0"), std::exception);
  EXPECT_THROW(Cost::parse("1.5"), ParseError);
  EXPECT_THROW(Cost::parse("1/"), ParseError);
  EXPECT_THROW(Cost::parse("-1/2"), std::exception);
  EXPECT_THROW(Cost(1, 0), UsageError);
}

TEST(Assignment, CostRange) {
  const Assignment a = Assignment::parse(kReference5x8);
  EXPECT_TRUE(a.cost_in_range(Cost(7)));
  EXPECT_FALSE(a.cost_in_range(Cost(15, 2)));
  EXPECT_TRUE(a.cost_in_range(Cost(1, 100)));
}

TEST(Assignment, HashIsStableAndDiscriminating) {
  const Assignment a = Assignment::parse(kReference5x8);
  EXPECT_EQ(a.hash(), Assignment::parse(a.serialize()).hash());
  EXPECT_NE(a.hash(), Assignment::parse("*").hash());
}

}  // namespace
}  // namespace lsc
