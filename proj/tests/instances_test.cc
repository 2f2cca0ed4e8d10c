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

#include "subord/instances.h"

#include <cmath>
#include <string>

#include "gtest/gtest.h"
#include "subord/algorithms.h"
#include "subord/errors.h"
#include "subord/verify.h"
#include "test_oracles.h"

namespace subord {
namespace {

TEST(Example1Test, Values) {
  const Instance inst = GenExample1(5, 0.01);
  ASSERT_EQ(inst.ground_size(), 11u);
  auto f = inst.MakeOracle();
  EXPECT_DOUBLE_EQ(f->Value(ElementSet(11, {10})), 1.01);
  EXPECT_DOUBLE_EQ(f->Value(ElementSet(11, {0, 1, 2, 3, 4})), 5.0);
  EXPECT_DOUBLE_EQ(f->Value(ElementSet(11, {10, 0})), 1.01);
  EXPECT_DOUBLE_EQ(f->Value(ElementSet(11, {10, 5, 6})), 1.03);
  EXPECT_NEAR(testing::GreedyValue(*f, 5), 1.05, 1e-12);
  EXPECT_FALSE(CheckMonotone(*f));
}

TEST(Example1Test, RejectsBadParams) {
  EXPECT_THROW(GenExample1(1, 0.1), InputError);
  EXPECT_THROW(GenExample1(3, 0.0), InputError);
  EXPECT_THROW(GenExample1(3, 1.0), InputError);
}

TEST(HiddenSetTest, TinyInstancePassesChecks) {
  const Instance inst = GenHiddenSet(6, 2, 1, 1, 3);
  ASSERT_EQ(inst.ground_size(), 7u);
  EXPECT_EQ(inst.planted.size(), 2u);
  auto f = inst.MakeOracle();
  EXPECT_FALSE(CheckMonotone(*f));
  EXPECT_FALSE(CheckSubadditive(*f));
  EXPECT_FALSE(CheckStrongOrder(*f, Order::Identity(7)));
}

TEST(HiddenSetTest, PlantedValue) {
  const Instance inst = GenHiddenSet(20, 5, 2, 2, 11);
  auto f = inst.MakeOracle();
  ElementSet s = inst.planted;
  s.insert(20);
  s.insert(21);
  EXPECT_DOUBLE_EQ(f->Value(s), 2.0 * 5 - 2);
  // Outside elements alone: each one uses up a share of the tail.
  ElementSet outside(22);
  for (Element e = 0; e < 20 && outside.size() < 3; ++e) {
    if (!inst.planted.contains(e)) outside.insert(e);
  }
  const double alpha = 5.0 / 2.0;
  EXPECT_DOUBLE_EQ(f->Value(outside | ElementSet(22, {20})),
                   3.0 + alpha * (1.0 - 3.0 / 5.0));
}

TEST(HiddenSetTest, DeterministicAndValidated) {
  EXPECT_EQ(GenHiddenSet(30, 6, 2, 3, 9).planted,
            GenHiddenSet(30, 6, 2, 3, 9).planted);
  EXPECT_THROW(GenHiddenSet(5, 5, 1, 0, 0), InputError);
  EXPECT_THROW(GenHiddenSet(10, 3, 3, 0, 0), InputError);
  EXPECT_THROW(GenHiddenSet(10, 3, 1, 3, 0), InputError);
}

TEST(CoverageTest, DisjointCoversAreModular) {
  Instance inst;
  inst.kind = InstanceKind::kCoverage;
  inst.coverage.item_weights = {1.0, 2.0, 4.0};
  inst.coverage.covers = {{0}, {1}, {2}};
  auto f = inst.MakeOracle();
  EXPECT_DOUBLE_EQ(f->Value(ElementSet(3, {0, 2})), 5.0);
  EXPECT_DOUBLE_EQ(f->Value(ElementSet::Full(3)), 7.0);
}

TEST(CoverageTest, RandomIsMonotoneSubmodular) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto f = GenRandomSubmodular(8, seed).MakeOracle();
    EXPECT_FALSE(CheckMonotone(*f));
    EXPECT_FALSE(CheckStrongOrder(*f, Order::Identity(8)));
  }
}

TEST(GeneratorsTest, Deterministic) {
  EXPECT_EQ(SerializeInstance(GenRandomMnl(6, 4)),
            SerializeInstance(GenRandomMnl(6, 4)));
  EXPECT_NE(SerializeInstance(GenRandomMnl(6, 4)),
            SerializeInstance(GenRandomMnl(6, 5)));
  EXPECT_EQ(SerializeInstance(GenRandomMarkov(5, 1)),
            SerializeInstance(GenRandomMarkov(5, 1)));
  EXPECT_EQ(SerializeInstance(GenRandomMixture(5, 3, 2)),
            SerializeInstance(GenRandomMixture(5, 3, 2)));
}

void ExpectSameValues(const Instance& a, const Instance& b) {
  ASSERT_EQ(a.ground_size(), b.ground_size());
  auto fa = a.MakeOracle();
  auto fb = b.MakeOracle();
  const std::size_t n = a.ground_size();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const ElementSet s = ElementSet::FromMask(n, m);
    EXPECT_NEAR(fa->Value(s), fb->Value(s), 1e-12) << s.ToString();
  }
}

TEST(SerializationTest, RoundTrips) {
  Instance explicit_fn;
  explicit_fn.kind = InstanceKind::kExplicitFunction;
  explicit_fn.id = "tiny";
  explicit_fn.table = {0.0, 1.0, 2.0, 2.5};
  explicit_fn.constraint = CardinalityConstraint{1};
  const Instance instances[] = {
      explicit_fn,          GenRandomMnl(5, 1),  GenRandomMarkov(5, 2),
      GenMarkov4Item(),     GenRandomMixture(4, 2, 3),
      GenHiddenSet(8, 3, 1, 1, 5), GenExample1(3, 0.1),
      GenRandomSubmodular(6, 7)};
  for (const Instance& inst : instances) {
    const std::string text = SerializeInstance(inst);
    const Instance back = ParseInstance(text);
    EXPECT_EQ(back.kind, inst.kind);
    EXPECT_EQ(back.id, inst.id);
    EXPECT_EQ(ConstraintKind(back.constraint), ConstraintKind(inst.constraint));
    EXPECT_EQ(SerializeInstance(back), text);
    ExpectSameValues(inst, back);
  }
}

TEST(SerializationTest, ConstraintsAndOrder) {
  const Instance inst = ParseInstance(R"({
    "kind": "mnl", "weights": [1, 1, 1], "outside_weight": 1,
    "prices": [1, 2, 3], "order": [2, 0, 1],
    "constraint": {"type": "matroid", "matroid": "partition",
                   "blocks": [0, 0, 1], "capacities": [1, 1], "total_cap": 1}
  })");
  EXPECT_EQ(ConstraintKind(inst.constraint), "matroid");
  EXPECT_TRUE(Feasible(inst.constraint, ElementSet(3, {2})));
  EXPECT_FALSE(Feasible(inst.constraint, ElementSet(3, {0, 2})));
  ASSERT_TRUE(inst.order);
  EXPECT_EQ(inst.DefaultOrder().at(0), 2u);

  const Instance budget = ParseInstance(
      R"({"kind": "mnl", "weights": [1, 1], "outside_weight": 1,
          "prices": [1, 2],
          "constraint": {"type": "budget", "budgets": [1, 2], "total": 2}})");
  EXPECT_TRUE(Feasible(budget.constraint, ElementSet(2, {1})));
  EXPECT_FALSE(Feasible(budget.constraint, ElementSet(2, {0, 1})));
  EXPECT_EQ(budget.DefaultOrder().at(0), 1u);
}

TEST(SerializationTest, MissingConstraintIsUnconstrained) {
  const Instance inst = ParseInstance(
      R"({"kind": "mnl", "weights": [1], "outside_weight": 1, "prices": [3]})");
  EXPECT_TRUE(std::holds_alternative<Unconstrained>(inst.constraint));
}

std::string ParseMessage(const std::string& text) {
  try {
    ParseInstance(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

TEST(SerializationTest, ErrorsNameTheField) {
  const std::string bad_row = ParseMessage(R"({
    "kind": "markov", "arrival": [0.5, 0.5], "prices": [1, 2],
    "transition": [[0, 0.5], [1.2, 0]]})");
  EXPECT_NE(bad_row.find("transition"), std::string::npos) << bad_row;
  EXPECT_NE(bad_row.find("row 1"), std::string::npos) << bad_row;

  const std::string trapped = ParseMessage(R"({
    "kind": "markov", "arrival": [1, 0], "prices": [1, 2],
    "transition": [[0, 1], [1, 0]]})");
  EXPECT_NE(trapped.find("outside option"), std::string::npos) << trapped;

  EXPECT_NE(ParseMessage(R"({"kind": "explicit-function", "n": 17,
                             "values": []})")
                .find("'n'"),
            std::string::npos);
  EXPECT_NE(ParseMessage(R"({"kind": "mnl", "outside_weight": 1,
                             "prices": [1]})")
                .find("weights"),
            std::string::npos);
  EXPECT_NE(ParseMessage(R"({"kind": "bogus"})").find("kind"),
            std::string::npos);
  EXPECT_NE(ParseMessage("{\"kind\": ").find("malformed"), std::string::npos);
  EXPECT_NE(ParseMessage(R"({"kind": "explicit-function", "n": 1,
                             "values": [1, 2]})")
                .find("values"),
            std::string::npos);
}

TEST(SerializationTest, SaveAndLoad) {
  const std::string path = ::testing::TempDir() + "/markov4.json";
  SaveInstance(GenMarkov4Item(), path);
  ExpectSameValues(LoadInstance(path), GenMarkov4Item());
  EXPECT_THROW(LoadInstance(path + ".missing"), ParseError);
}

}  // namespace
}  // namespace subord
