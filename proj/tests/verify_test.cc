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

#include "subord/verify.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "subord/errors.h"
#include "subord/instances.h"
#include "test_oracles.h"

namespace subord {
namespace {

FunctionOracle Modular(std::vector<double> w) {
  const std::size_t n = w.size();
  return FunctionOracle(n, [w](const ElementSet& s) {
    double total = 0.0;
    s.ForEach([&](Element e) { total += w[e]; });
    return total;
  });
}

// Re-evaluates a reported order witness from scratch.
double OrderSlack(ValueOracle& f, const ViolationWitness& w) {
  return Marginal(f, w.c, w.a) - Marginal(f, w.c, w.b);
}

TEST(MonotoneSubadditiveTest, ModularPasses) {
  auto f = Modular({1.0, 2.0, 0.5, 3.0});
  EXPECT_FALSE(CheckMonotone(f));
  EXPECT_FALSE(CheckSubadditive(f));
}

TEST(MonotoneSubadditiveTest, Example1Passes) {
  auto f = GenExample1(3, 0.1).MakeOracle();
  EXPECT_FALSE(CheckMonotone(*f));
  EXPECT_FALSE(CheckSubadditive(*f));
}

TEST(MonotoneSubadditiveTest, SquareFailsSubadditivity) {
  FunctionOracle f(3, [](const ElementSet& s) {
    return static_cast<double>(s.size() * s.size());
  });
  const CheckResult w = CheckSubadditive(f);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->a.size(), 1u);
  EXPECT_EQ(w->b.size(), 1u);
  EXPECT_FALSE(w->a.Intersects(w->b));
  EXPECT_DOUBLE_EQ(w->slack, 2.0);
}

TEST(MonotoneSubadditiveTest, DecreasingFailsMonotone) {
  FunctionOracle f(2, [](const ElementSet& s) { return s.contains(1) ? 0.0 : 1.0 * s.size(); });
  const CheckResult w = CheckMonotone(f);
  ASSERT_TRUE(w);
  EXPECT_TRUE(w->a.IsSubsetOf(w->b));
  EXPECT_GT(f.Value(w->a), f.Value(w->b) + kTolerance);
}

TEST(MonotoneSubadditiveTest, CapIsEnforced) {
  auto f = Modular(std::vector<double>(13, 1.0));
  EXPECT_THROW(CheckMonotone(f), EnumerationCapError);
}

TEST(OrderCheckTest, SubmodularPassesEveryOrder) {
  const Instance inst = GenRandomSubmodular(5, 3);
  auto f = inst.MakeOracle();
  std::vector<Element> perm = {0, 1, 2, 3, 4};
  do {
    EXPECT_FALSE(CheckStrongOrder(*f, Order(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(OrderCheckTest, AllOrdersPassOnlyForSubmodular) {
  // Supermodular on {0,1}: every order that places 0 before 1 fails.
  FunctionOracle f(3, [](const ElementSet& s) {
    const double base = static_cast<double>(s.size());
    return base + (s.contains(0) && s.contains(1) ? 1.0 : 0.0);
  });
  bool any_fail = false;
  std::vector<Element> perm = {0, 1, 2};
  do {
    if (CheckStrongOrder(f, Order(perm))) any_fail = true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_TRUE(any_fail);
}

TEST(OrderCheckTest, Example1NaturalOrder) {
  auto f = GenExample1(3, 0.1).MakeOracle();
  EXPECT_FALSE(CheckStrongOrder(*f, Order::Identity(7)));
  EXPECT_FALSE(CheckWeakOrder(*f, Order::Identity(7)));
}

TEST(OrderCheckTest, Markov4ItemWitness) {
  const Instance inst = GenMarkov4Item();
  auto f = inst.MakeOracle();
  const Order order = DescendingPriceOrder(inst.markov->prices());
  const CheckResult w = CheckStrongOrder(*f, order);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->a, ElementSet(4, {0, 1, 2}));
  EXPECT_EQ(w->b, ElementSet(4, {0, 1}));
  EXPECT_EQ(w->c, ElementSet(4, {3}));
  EXPECT_NEAR(w->slack, 2.0 / 3.0, 1e-9);
  EXPECT_NEAR(OrderSlack(*f, *w), w->slack, 1e-12);

  const CheckResult weak = CheckWeakOrder(*f, order);
  ASSERT_TRUE(weak);
  EXPECT_TRUE(IsNested(order, weak->b, weak->a));
}

TEST(OrderCheckTest, StrongImpliesWeakOnRandomMnl) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Instance inst = GenRandomMnl(6, seed);
    auto f = inst.MakeOracle();
    const Order order = inst.DefaultOrder();
    const bool strong = !CheckStrongOrder(*f, order);
    const bool weak = !CheckWeakOrder(*f, order);
    EXPECT_TRUE(!strong || weak);
    EXPECT_TRUE(strong);
  }
}

TEST(OrderCheckTest, WitnessesAreSelfConsistent) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int found = 0;
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<double> table(32);
    for (std::size_t m = 1; m < 32; ++m) table[m] = u(rng) * __builtin_popcountll(m);
    TableOracle f(5, table);
    if (const CheckResult w = CheckStrongOrder(f, Order::Identity(5))) {
      ++found;
      EXPECT_GT(OrderSlack(f, *w), kTolerance);
      EXPECT_TRUE(w->b.IsSubsetOf(w->a));
    }
  }
  EXPECT_GT(found, 0);
}

TEST(BruteForceTest, Example1Optimum) {
  auto f = GenExample1(5, 0.01).MakeOracle();
  const BruteForceResult r = BruteForceOpt(*f, CardinalityConstraint{5});
  EXPECT_DOUBLE_EQ(r.value, 5.0);
}

TEST(BruteForceTest, EmptyFeasibleFamily) {
  auto f = Modular({1.0, 2.0});
  const BruteForceResult r = BruteForceOpt(f, BudgetConstraint({3.0, 3.0}, 1.0));
  EXPECT_DOUBLE_EQ(r.value, 0.0);
  EXPECT_TRUE(r.set.empty());
}

TEST(BruteForceTest, ModularTopK) {
  auto f = Modular({4.0, 1.0, 5.0, 2.0, 3.0});
  const BruteForceResult r = BruteForceOpt(f, CardinalityConstraint{2});
  EXPECT_DOUBLE_EQ(r.value, 9.0);
  EXPECT_EQ(r.set, ElementSet(5, {0, 2}));
}

TEST(BruteForceTest, AgreesWithMaskScan) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Instance inst = GenRandomSubmodular(9, seed);
    auto f = inst.MakeOracle();
    const auto m = testing::RandomLinearMatroid(9, 3, seed);
    const Constraint c = std::shared_ptr<const Matroid>(m);
    EXPECT_NEAR(BruteForceOpt(*f, c).value,
                testing::ExhaustiveMax(*f, [&](const ElementSet& s) {
                  return m->IsIndependent(s);
                }).second,
                1e-12);
  }
  auto big = Modular(std::vector<double>(17, 1.0));
  EXPECT_THROW(BruteForceOpt(big, std::shared_ptr<const Matroid>(
                                      std::make_shared<UniformMatroid>(17, 2))),
               EnumerationCapError);
}

TEST(InterleavedTest, TrivialPartitionIsEquality) {
  auto f = GenExample1(3, 0.1).MakeOracle();
  const ElementSet a(7, {0, 3, 6});
  InterleavedPartition part{{ElementSet(7)}, {a}, {0}};
  const InterleavedBound b = CheckInterleavedBound(*f, Order::Identity(7), a, part);
  EXPECT_DOUBLE_EQ(b.lhs, b.rhs);
  EXPECT_TRUE(b.holds);
}

TEST(InterleavedTest, RejectsCrossingBlocks) {
  auto f = Modular({1, 1, 1, 1});
  const ElementSet a(4, {0, 1, 2});
  // E_1 = {0} lies left of O_1 = {1}.
  InterleavedPartition crossing{{ElementSet(4, {1})}, {ElementSet(4, {0, 2})}, {0}};
  EXPECT_THROW(CheckInterleavedBound(f, Order::Identity(4), a, crossing),
               InputError);
  InterleavedPartition missing{{ElementSet(4, {0})}, {ElementSet(4, {1})}, {0}};
  EXPECT_THROW(CheckInterleavedBound(f, Order::Identity(4), a, missing),
               InputError);
  InterleavedPartition bad_sigma{{ElementSet(4, {0}), ElementSet(4, {2})},
                                 {ElementSet(4, {1}), ElementSet(4)},
                                 {1, 1}};
  EXPECT_THROW(CheckInterleavedBound(f, Order::Identity(4), a, bad_sigma),
               InputError);
}

TEST(InterleavedTest, RandomPartitionsAreValidAndBoundHolds) {
  std::mt19937_64 rng(17);
  const Instance ex = GenExample1(4, 0.05);
  const Instance cov = GenRandomSubmodular(9, 2);
  for (const Instance* inst : {&ex, &cov}) {
    auto f = inst->MakeOracle();
    const std::size_t n = inst->ground_size();
    const Order order = Order::Identity(n);
    ASSERT_FALSE(CheckWeakOrder(*f, order));
    for (int trial = 0; trial < 100; ++trial) {
      const ElementSet a = ElementSet::FromMask(n, rng() & ((1ULL << n) - 1));
      const InterleavedPartition part = RandomInterleavedPartition(order, a, rng);
      EXPECT_NO_THROW(ValidateInterleavedPartition(order, a, part));
      EXPECT_TRUE(CheckInterleavedBound(*f, order, a, part).holds);
    }
  }
}

TEST(CompatibilityTest, MarkovAndMnlAreCompatible) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    EXPECT_FALSE(CheckCompatibility(*GenRandomMarkov(5, seed).markov));
    EXPECT_FALSE(CheckCompatibility(*GenRandomMnl(5, seed).mnl));
  }
  EXPECT_THROW(CheckCompatibility(*GenRandomMnl(8, 0).mnl), EnumerationCapError);
}

TEST(CompatibilityTest, MarginalFormFailsOnMnl) {
  // A cheap product lowers revenue by less once the offered set is larger,
  // so the per-set marginal form is violated while the best-subset form,
  // whose losses are floored at zero, holds.
  const Instance inst = GenRandomMnl(5, 0);
  const CheckResult w =
      CheckCompatibility(*inst.mnl, CompatibilityOrderForm::kMarginal);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->property, "compatibility-order");
  const MnlModel& m = *inst.mnl;
  const double gain_a = m.Revenue(w->a | w->c) - m.Revenue(w->a);
  const double gain_b = m.Revenue(w->b | w->c) - m.Revenue(w->b);
  EXPECT_LT(gain_b, gain_a);
  EXPECT_LT(gain_a, 0.0);
  EXPECT_FALSE(CheckCompatibility(*inst.mnl));
}

// Product 1 makes product 0 more attractive.
testing::RuleChoiceModel Complementary() {
  return testing::RuleChoiceModel(
      {10.0, 1.0, 1.0}, [](Element i, const ElementSet& s) {
        if (i == 0) return s.contains(1) ? 0.6 : 0.1;
        return 0.3 / static_cast<double>(s.size());
      });
}

TEST(CompatibilityTest, ComplementaryModelFails) {
  const testing::RuleChoiceModel model = Complementary();
  const CheckResult sub = CheckSubstitutable(model);
  ASSERT_TRUE(sub);
  EXPECT_EQ(sub->b, ElementSet(3, {0}));
  EXPECT_EQ(sub->c, ElementSet(3, {1}));
  const CheckResult compat = CheckCompatibility(model);
  ASSERT_TRUE(compat);
  EXPECT_GT(compat->slack, kTolerance);
}

}  // namespace
}  // namespace subord
