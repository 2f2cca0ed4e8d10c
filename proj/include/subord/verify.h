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

#ifndef SUBORD_VERIFY_H_
#define SUBORD_VERIFY_H_

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "subord/assortment.h"
#include "subord/constraints.h"
#include "subord/core.h"
#include "subord/element_set.h"

namespace subord {

// Enumeration caps. Larger inputs raise EnumerationCapError.
inline constexpr std::size_t kMaxPropertyN = 12;
inline constexpr std::size_t kMaxOrderN = 10;
inline constexpr std::size_t kMaxBruteForceN = 20;
inline constexpr std::size_t kMaxBruteForceMatroidN = 16;
inline constexpr std::size_t kMaxCompatibilityN = 7;
inline constexpr std::size_t kMaxSubstitutableN = 10;

// Sets exhibiting a failed property check. For order checks f(c | a) exceeds
// f(c | b) by `slack`; other properties document their use of a, b, c.
struct ViolationWitness {
  std::string property;
  ElementSet a;
  ElementSet b;
  ElementSet c;
  double slack = 0.0;

  std::string ToString() const;
};

using CheckResult = std::optional<ViolationWitness>;

// f on every subset, indexed by bit mask. Throws EnumerationCapError when
// the ground set exceeds `cap`.
std::vector<double> TabulateValues(ValueOracle& f, std::size_t cap);

// a = B, b = A with B a subset of A and f(B) > f(A).
CheckResult CheckMonotone(ValueOracle& f);
// f(a | b) > f(a) + f(b); c = a | b.
CheckResult CheckSubadditive(ValueOracle& f);
// Elementwise: f(i | A) <= f(i | B) for B in A and i right of A.
CheckResult CheckStrongOrder(ValueOracle& f, const Order& order);
// As above but only for pi-nested pairs B in A.
CheckResult CheckWeakOrder(ValueOracle& f, const Order& order);

bool IsNested(const Order& order, const ElementSet& b, const ElementSet& a);

struct BruteForceResult {
  ElementSet set;
  double value = 0.0;
};

BruteForceResult BruteForceOpt(ValueOracle& f, const Constraint& constraint);

// Blocks O_1, E_1, ..., O_m, E_m of a set with permutation sigma on [m]
// (0-based values).
struct InterleavedPartition {
  std::vector<ElementSet> odd;
  std::vector<ElementSet> even;
  std::vector<std::size_t> sigma;

  std::size_t size() const { return odd.size(); }
};

// Throws InputError unless the blocks partition `a` and appear left to right
// in `order` as O_1, E_1, O_2, ... with no two blocks crossing.
void ValidateInterleavedPartition(const Order& order, const ElementSet& a,
                                  const InterleavedPartition& part);

// Cuts the elements of `a` (in order) into 2m contiguous, possibly empty
// runs and draws sigma uniformly.
InterleavedPartition RandomInterleavedPartition(const Order& order,
                                                const ElementSet& a,
                                                std::mt19937_64& rng);

struct InterleavedBound {
  double lhs = 0.0;  // f(A)
  double rhs = 0.0;
  bool holds = false;
};

InterleavedBound CheckInterleavedBound(ValueOracle& f, const Order& order,
                                       const ElementSet& a,
                                       const InterleavedPartition& part);

enum class CompatibilityOrderForm {
  // max over X in c of R(X | a) <= the same max for b. This is the form the
  // assortment framework relies on.
  kBestSubset,
  // R(c | a) <= R(c | b) for every c. Fails for MNL whenever c holds a
  // product priced below the optimal revenue; kept for diagnostics.
  kMarginal,
};

// Compatibility of a choice model around its maximal unconstrained optimum.
// "compatibility-nonnegative": R(a | c) < 0 with a inside the optimum.
// "compatibility-order": the order form fails for b in a inside the optimum;
// slack is the excess of the a side.
CheckResult CheckCompatibility(
    const ChoiceModel& model,
    CompatibilityOrderForm form = CompatibilityOrderForm::kBestSubset);

// Adding product j to S never raises the choice probability of i in S.
// a = S, b = {i}, c = {j}.
CheckResult CheckSubstitutable(const ChoiceModel& model);

}  // namespace subord

#endif  // SUBORD_VERIFY_H_
