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

#include "subord/constraints.h"

#include <memory>
#include <vector>

#include "gtest/gtest.h"
#include "subord/errors.h"
#include "test_oracles.h"

namespace subord {
namespace {

TEST(BudgetConstraintTest, CostAndFeasibility) {
  const BudgetConstraint b({1.0, 2.0, 3.5}, 4.5);
  EXPECT_DOUBLE_EQ(b.Cost(ElementSet(3, {0, 2})), 4.5);
  EXPECT_TRUE(b.Feasible(ElementSet(3, {0, 2})));
  EXPECT_FALSE(b.Feasible(ElementSet(3, {1, 2})));
  EXPECT_THROW(BudgetConstraint({-1.0}, 1.0), InputError);
  EXPECT_THROW(BudgetConstraint({1.0}, -1.0), InputError);
}

TEST(UniformMatroidTest, RankBound) {
  const UniformMatroid m(5, 2);
  EXPECT_TRUE(m.IsIndependent(ElementSet(5, {0, 4})));
  EXPECT_FALSE(m.IsIndependent(ElementSet(5, {0, 1, 4})));
  EXPECT_EQ(m.FullRank(), 2u);
  EXPECT_EQ(m.query_count(), 2);
}

TEST(PartitionMatroidTest, BlocksAndTotalCap) {
  // Two products with two price levels each, one level per product, at most
  // one product overall.
  const PartitionMatroid m({0, 0, 1, 1}, {1, 1}, 1);
  EXPECT_FALSE(m.IsIndependent(ElementSet(4, {0, 1})));
  EXPECT_FALSE(m.IsIndependent(ElementSet(4, {0, 2})));
  EXPECT_TRUE(m.IsIndependent(ElementSet(4, {3})));
  EXPECT_EQ(m.FullRank(), 1u);
  EXPECT_THROW(PartitionMatroid({0, 2}, {1, 1}), InputError);
}

TEST(MatroidAxiomsTest, BuiltInMatroidsPass) {
  EXPECT_FALSE(AuditMatroidAxioms(UniformMatroid(6, 3)));
  EXPECT_FALSE(AuditMatroidAxioms(PartitionMatroid({0, 0, 1, 1, 2}, {1, 2, 1}, 3)));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    EXPECT_FALSE(AuditMatroidAxioms(*testing::RandomLinearMatroid(7, 3, seed)));
  }
}

TEST(ExplicitMatroidTest, RejectsNonMatroidBases) {
  // {0,1} and {2,3} alone violate basis exchange.
  EXPECT_THROW(ExplicitMatroid(4, {ElementSet(4, {0, 1}), ElementSet(4, {2, 3})}),
               InputError);
  EXPECT_THROW(AuditMatroidAxioms(UniformMatroid(13, 2)), EnumerationCapError);
}

TEST(CircuitTest, UniformCircuitIsWholeSetPlusJ) {
  const UniformMatroid m(5, 2);
  const ElementSet s(5, {1, 3});
  const std::int64_t before = m.query_count();
  EXPECT_EQ(Circuit(m, s, 4), ElementSet(5, {1, 3, 4}));
  // One membership query plus |S| circuit queries.
  EXPECT_EQ(m.query_count() - before, 3);
  EXPECT_THROW(Circuit(m, ElementSet(5, {1}), 4), ContractError);
}

TEST(CircuitTest, PartitionCircuitStaysInBlock) {
  const PartitionMatroid m({0, 0, 1}, {1, 1});
  EXPECT_EQ(Circuit(m, ElementSet(3, {0, 2}), 1), ElementSet(3, {0, 1}));
}

TEST(CircuitTest, UniqueCircuitOnRandomLinearMatroids) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto m = testing::RandomLinearMatroid(6, 3, seed);
    for (const ElementSet& basis : m->bases()) {
      for (Element j = 0; j < 6; ++j) {
        if (basis.contains(j)) continue;
        const ElementSet c = Circuit(*m, basis, j);
        // A circuit is dependent and every proper subset is independent.
        EXPECT_FALSE(m->IsIndependent(c));
        c.ForEach([&](Element i) {
          EXPECT_TRUE(m->IsIndependent(c.Without(i)));
        });
      }
    }
  }
}

TEST(RankTest, GreedyRank) {
  const PartitionMatroid m({0, 0, 0, 1}, {2, 1});
  EXPECT_EQ(Rank(m, ElementSet(4, {0, 1, 2})), 2u);
  EXPECT_EQ(Rank(m, ElementSet::Full(4)), 3u);
}

TEST(ConstraintTest, VariantDispatch) {
  const Constraint c = CardinalityConstraint{2};
  EXPECT_EQ(ConstraintKind(c), "cardinality");
  EXPECT_TRUE(Feasible(c, ElementSet(4, {0, 1})));
  EXPECT_FALSE(Feasible(c, ElementSet(4, {0, 1, 2})));
  EXPECT_EQ(ConstraintKind(Unconstrained{}), "unconstrained");
  const Constraint m = std::shared_ptr<const Matroid>(
      std::make_shared<UniformMatroid>(3, 1));
  EXPECT_EQ(ConstraintKind(m), "matroid");
  EXPECT_FALSE(Feasible(m, ElementSet(3, {0, 1})));
}

}  // namespace
}  // namespace subord
