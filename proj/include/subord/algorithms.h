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

#ifndef SUBORD_ALGORITHMS_H_
#define SUBORD_ALGORITHMS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subord/constraints.h"
#include "subord/core.h"
#include "subord/element_set.h"

namespace subord {

// Every algorithm consumes its ground set as an ordered sequence of element
// ids and parses it exactly once, front to back. For a full order pass
// `order.perm()`; the assortment framework passes a growing prefix.

enum class AlgorithmTag { kCardinality, kBudgetThird, kBudgetHalf, kMatroid };

std::string_view AlgorithmName(AlgorithmTag tag);
// Accepts "cardinality", "budget_third", "budget_half", "matroid".
AlgorithmTag ParseAlgorithmTag(std::string_view name);

enum class TraceKind {
  kAdd,       // parsed and added
  kReject,    // parsed and left out
  kSwap,      // parsed, added, and `swapped_out` moved to the removed set
  kFinalAdd,  // parsed, over budget: handed to FinalAdd (see `accepted`)
  kDiscard,   // dropped by FinalAdd to make room; not a parse event
};

struct TraceEvent {
  TraceKind kind;
  Element element;
  // Position of `element` in the parsed sequence.
  std::size_t position;
  double marginal = 0.0;
  std::optional<Element> swapped_out;
  // Matroid local search: value v_j recorded for the element.
  double v = 0.0;
  bool accepted = false;
};

struct RunResult {
  ElementSet solution;  // S
  ElementSet removed;   // R: held at some point, later discarded
  double value = 0.0;   // f(S)
  std::int64_t queries = 0;
  // Subset of `queries` spent on marginals of parsed elements.
  std::int64_t marginal_queries = 0;
  std::int64_t independence_queries = 0;
  std::vector<TraceEvent> trace;
};

// One member of the parameter family an algorithm enumerates over.
struct ParamSetting {
  AlgorithmTag tag = AlgorithmTag::kCardinality;
  double epsilon = 0.0;
  std::optional<double> threshold;
  // Budget-half: the enumerated high-budget set used to filter the ground set.
  std::optional<ElementSet> high_budget_set;
  // Budget-third: the sweep over feasible singletons.
  std::optional<Element> singleton;

  std::string ToString() const;
};

struct CompositeResult {
  RunResult best;
  std::size_t best_index = 0;
  std::vector<ParamSetting> params;
  std::vector<RunResult> runs;
  // Oracle queries made while enumerating parameters (singleton values).
  std::int64_t enumeration_queries = 0;
  std::int64_t total_queries = 0;
};

// Grid length ceil(log_{1+eps} x), at least one.
std::size_t GridSize(double x, double epsilon);

// Single pass; adds i whenever f(i|S) >= tau, stopping once |S| = k.
RunResult ThresholdAdd(ValueOracle& f, std::span<const Element> sequence,
                       std::size_t k, double tau);

// Best ThresholdAdd over tau_i = (1+eps)^(i-1) max_e f({e}) / k.
CompositeResult CardinalityMax(ValueOracle& f,
                               std::span<const Element> sequence,
                               std::size_t k, double epsilon);

// Single pass; adds i when b_i <= B - b(S) and f(i|S) >= tau * b_i.
RunResult BudgetThresholdAdd(ValueOracle& f,
                             std::span<const Element> sequence,
                             const BudgetConstraint& budget, double tau);

// Best of the bang-per-buck threshold grid and all feasible singletons.
CompositeResult BudgetThird(ValueOracle& f, std::span<const Element> sequence,
                            const BudgetConstraint& budget, double epsilon);

struct FinalAddResult {
  ElementSet solution;
  ElementSet removed;
  bool added = false;
};

// Makes room for j by dropping elements of S with b_i < eps*B, earliest in
// `sequence` first. If j cannot fit even after dropping all of them, S is
// returned unchanged and nothing is removed.
FinalAddResult FinalAdd(const BudgetConstraint& budget, double epsilon,
                        std::span<const Element> sequence,
                        const ElementSet& solution, Element j);

// Partial enumeration over high-budget sets X (|X| <= 1/eps, b(X) <= B),
// each followed by a threshold grid that may end in FinalAdd.
CompositeResult BudgetHalf(ValueOracle& f, std::span<const Element> sequence,
                           const BudgetConstraint& budget, double epsilon);

// Called after every parsed element with (elements parsed so far, S, R).
using IterationObserver = std::function<void(
    std::size_t parsed, const ElementSet& solution, const ElementSet& removed)>;

// Ordered local search with accumulated swap values.
RunResult MatroidLocalSearch(ValueOracle& f, std::span<const Element> sequence,
                             const Matroid& matroid,
                             const IterationObserver& observer = {});

// Parameter family for `tag`. Threshold grids are anchored on the singleton
// values of the elements in `sequence` (one query each).
std::vector<ParamSetting> EnumerateParams(AlgorithmTag tag, ValueOracle& f,
                                          std::span<const Element> sequence,
                                          const Constraint& constraint,
                                          double epsilon);

// One single-pass run for a fixed parameter setting.
RunResult RunOne(const ParamSetting& param, ValueOracle& f,
                 std::span<const Element> sequence,
                 const Constraint& constraint);

// Best RunOne over EnumerateParams; ties keep the lowest index.
CompositeResult Maximize(AlgorithmTag tag, ValueOracle& f,
                         std::span<const Element> sequence,
                         const Constraint& constraint, double epsilon);

using OracleFactory = std::function<std::unique_ptr<ValueOracle>()>;

// Maximize with parameter settings spread over `jobs` threads, each owning
// an oracle from `make_oracle`. Same result as Maximize; query counts are
// summed over all oracles.
CompositeResult MaximizeParallel(AlgorithmTag tag,
                                 const OracleFactory& make_oracle,
                                 std::span<const Element> sequence,
                                 const Constraint& constraint, double epsilon,
                                 int jobs);

// Budget view of a constraint: budgets as given, or unit budgets with B = k.
BudgetConstraint AsBudget(const Constraint& constraint, std::size_t n);
// Matroid view: as given, or uniform of rank k for cardinality.
std::shared_ptr<const Matroid> AsMatroid(const Constraint& constraint,
                                         std::size_t n);
// Throws InputError when `tag` cannot run under `constraint`.
void CheckApplicable(AlgorithmTag tag, const Constraint& constraint);

}  // namespace subord

#endif  // SUBORD_ALGORITHMS_H_
