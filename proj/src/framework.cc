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

#include "subord/framework.h"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

#include "subord/errors.h"

namespace subord {
namespace {

using Mask = std::uint64_t;

constexpr std::size_t kMaxPiecewiseN = 10;

Order HistoryOrder(const std::vector<Element>& entered, std::size_t n) {
  std::vector<Element> perm = entered;
  std::vector<bool> placed(n, false);
  for (Element e : entered) placed[e] = true;
  for (Element e = 0; e < n; ++e) {
    if (!placed[e]) perm.push_back(e);
  }
  return Order(std::move(perm));
}

FrameworkRun RunPhases(const ParamSetting& param, const ChoiceModel& model,
                       ValueOracle& f, const Constraint& constraint) {
  const std::size_t n = f.ground_size();
  FrameworkRun out;
  out.param = param;
  out.result.solution = ElementSet(n);
  out.result.removed = ElementSet(n);

  ElementSet remaining = ElementSet::Full(n);  // N
  ElementSet working = model.OptimizeUnconstrained(remaining).products;
  ElementSet kept(n);  // M
  std::vector<Element> sequence = working.ToVector();
  std::vector<Element> entered = sequence;
  ElementSet ever(n);

  while (!(working - kept).empty()) {
    if (out.history.phases.size() == n + 1) {
      throw InternalError("phase loop exceeded n + 1 phases");
    }
    Phase phase;
    phase.working = working;
    phase.fresh = working - kept;
    ever |= working;
    out.result = RunOne(param, f, sequence, constraint);
    kept = out.result.solution | out.result.removed;
    out.history.phases.push_back(std::move(phase));

    remaining = (remaining - working) | kept;
    working = model.OptimizeUnconstrained(remaining).products | kept;
    std::vector<Element> next;
    for (Element e : sequence) {
      if (kept.contains(e)) next.push_back(e);
    }
    (working - kept).ForEach([&](Element e) {
      next.push_back(e);
      if (!ever.contains(e)) entered.push_back(e);
    });
    sequence = std::move(next);
  }
  for (Phase& phase : out.history.phases) phase.kept = phase.fresh & kept;
  out.history.never_passed = ElementSet::Full(n) - ever;
  out.history.order = HistoryOrder(entered, n);
  return out;
}

}  // namespace

FrameworkResult RunFramework(AlgorithmTag tag, const ChoiceModel& model,
                             ValueOracle& f, const Constraint& constraint,
                             double epsilon) {
  const std::size_t n = f.ground_size();
  if (model.num_products() != n) {
    throw InputError("objective and model disagree on the product count");
  }
  const std::int64_t start = f.query_count();
  std::vector<Element> all(n);
  for (Element e = 0; e < n; ++e) all[e] = e;
  const std::vector<ParamSetting> params =
      EnumerateParams(tag, f, all, constraint, epsilon);

  FrameworkResult out;
  for (const ParamSetting& param : params) {
    if (param.singleton) {
      FrameworkRun run;
      run.param = param;
      run.result = RunOne(param, f, all, constraint);
      run.history.never_passed = ElementSet::Full(n);
      run.history.order = Order::Identity(n);
      out.runs.push_back(std::move(run));
    } else {
      out.runs.push_back(RunPhases(param, model, f, constraint));
    }
  }
  for (std::size_t i = 0; i < out.runs.size(); ++i) {
    if (i == 0 || out.runs[i].result.value > out.best.value + kTolerance) {
      out.best = out.runs[i].result;
      out.best_index = i;
    }
  }
  if (out.runs.empty()) {
    out.best.solution = ElementSet(n);
    out.best.removed = ElementSet(n);
  }
  out.total_queries = f.query_count() - start;
  return out;
}

FrameworkResult RunFramework(AlgorithmTag tag,
                             std::shared_ptr<const ChoiceModel> model,
                             const Constraint& constraint, double epsilon) {
  ChoiceObjectiveOracle f(model);
  return RunFramework(tag, *model, f, constraint, epsilon);
}

CheckResult CheckPiecewiseOrder(ValueOracle& f, const PhaseHistory& history) {
  const std::size_t n = f.ground_size();
  if (n > kMaxPiecewiseN) {
    throw EnumerationCapError("piecewise order check enumerates at most n = " +
                              std::to_string(kMaxPiecewiseN) + " elements");
  }
  if (history.order.size() != n) {
    throw InputError("history order does not cover the ground set");
  }
  // Pieces (N_i, M_i); the never-passed set is the last piece with M empty.
  std::vector<std::pair<Mask, Mask>> pieces;
  for (const Phase& phase : history.phases) {
    pieces.emplace_back(phase.fresh.ToMask(), phase.kept.ToMask());
  }
  pieces.emplace_back(history.never_passed.ToMask(), 0);

  const std::vector<double> t = TabulateValues(f, kMaxPiecewiseN);
  std::vector<std::size_t> rank(n);
  for (std::size_t p = 0; p < n; ++p) rank[history.order.at(p)] = p;
  const Mask count = Mask{1} << n;

  auto proper = [&](Mask a) {
    std::size_t last = 0;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (a & pieces[i].first) last = i;
    }
    for (std::size_t i = 0; i < last; ++i) {
      if ((a & pieces[i].first & ~pieces[i].second) != 0) return false;
    }
    return true;
  };

  for (Mask a = 0; a < count; ++a) {
    if (!proper(a)) continue;
    Mask right = 0;
    int right_rank = -1;
    for (Element e = 0; e < n; ++e) {
      if (a >> e & 1) right_rank = std::max(right_rank, static_cast<int>(rank[e]));
    }
    for (Element e = 0; e < n; ++e) {
      if (static_cast<int>(rank[e]) > right_rank) right |= Mask{1} << e;
    }
    for (Mask c = right; c != 0; c = (c - 1) & right) {
      const double gain_a = t[a | c] - t[a];
      for (Mask b = a;; b = (b - 1) & a) {
        const double gain_b = t[b | c] - t[b];
        if (gain_a > gain_b + kTolerance) {
          return ViolationWitness{"piecewise-order", ElementSet::FromMask(n, a),
                                  ElementSet::FromMask(n, b),
                                  ElementSet::FromMask(n, c), gain_a - gain_b};
        }
        if (b == 0) break;
      }
    }
  }
  return std::nullopt;
}

}  // namespace subord
