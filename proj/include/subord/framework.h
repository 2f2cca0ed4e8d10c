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

#ifndef SUBORD_FRAMEWORK_H_
#define SUBORD_FRAMEWORK_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "subord/algorithms.h"
#include "subord/assortment.h"
#include "subord/constraints.h"
#include "subord/core.h"
#include "subord/element_set.h"
#include "subord/verify.h"

namespace subord {

struct Phase {
  ElementSet working;  // the set the algorithm parsed in this phase
  ElementSet fresh;    // N_i: elements parsed for the first time
  ElementSet kept;     // M_i: elements of N_i held in S or R at the end
};

struct PhaseHistory {
  std::vector<Phase> phases;
  // Elements never offered to the algorithm (the last piece, with no kept
  // part).
  ElementSet never_passed;
  // Elements in the order they first entered a working set, followed by the
  // never-passed ones by id.
  Order order;
};

struct FrameworkRun {
  ParamSetting param;
  RunResult result;  // last phase
  PhaseHistory history;
};

struct FrameworkResult {
  RunResult best;
  std::size_t best_index = 0;
  std::vector<FrameworkRun> runs;
  std::int64_t total_queries = 0;
};

// Runs `tag` on the objective f (best sub-assortment revenue) through
// repeated unconstrained re-optimization of `model`. `f` must evaluate the
// objective of `model`; its queries are the ones reported.
FrameworkResult RunFramework(AlgorithmTag tag, const ChoiceModel& model,
                             ValueOracle& f, const Constraint& constraint,
                             double epsilon);

FrameworkResult RunFramework(AlgorithmTag tag,
                             std::shared_ptr<const ChoiceModel> model,
                             const Constraint& constraint, double epsilon);

// Checks f(C | A) <= f(C | B) for every proper A, B in A, and nonempty C right
// of A in history.order. A is proper when, for every piece before the last
// piece A touches, A only uses the kept part of that piece.
CheckResult CheckPiecewiseOrder(ValueOracle& f, const PhaseHistory& history);

}  // namespace subord

#endif  // SUBORD_FRAMEWORK_H_
