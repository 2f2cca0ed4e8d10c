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

#include "subord/algorithms.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <thread>
#include <utility>

#include "subord/errors.h"

namespace subord {
namespace {

TraceEvent Event(TraceKind kind, Element e, std::size_t position,
                 double marginal = 0.0) {
  TraceEvent event{};
  event.kind = kind;
  event.element = e;
  event.position = position;
  event.marginal = marginal;
  return event;
}

// Oracle and matroid query counts taken at the start of a run.
struct QueryMark {
  const ValueOracle& f;
  std::int64_t start;
  explicit QueryMark(const ValueOracle& oracle)
      : f(oracle), start(oracle.query_count()) {}
  std::int64_t Spent() const { return f.query_count() - start; }
};

void CheckSequence(const ValueOracle& f, std::span<const Element> sequence) {
  for (Element e : sequence) {
    if (e >= f.ground_size()) {
      throw InputError("sequence element " + std::to_string(e) +
                       " out of range for ground set of size " +
                       std::to_string(f.ground_size()));
    }
  }
}

double MaxSingleton(ValueOracle& f, std::span<const Element> elements) {
  double best = 0.0;
  for (Element e : elements) {
    best = std::max(best, f.Value(ElementSet(f.ground_size(), {e})));
  }
  return best;
}

std::size_t CardinalityK(const Constraint& constraint) {
  if (const auto* k = std::get_if<CardinalityConstraint>(&constraint)) {
    return k->k;
  }
  throw InputError("cardinality algorithm needs a cardinality constraint");
}

std::vector<Element> BudgetFeasibleElements(std::span<const Element> sequence,
                                            const BudgetConstraint& budget,
                                            double cap) {
  std::vector<Element> kept;
  for (Element e : sequence) {
    if (budget.budget(e) <= cap + kTolerance &&
        budget.budget(e) <= budget.total() + kTolerance) {
      kept.push_back(e);
    }
  }
  return kept;
}

double MinBudget(const BudgetConstraint& budget, const ElementSet& x) {
  double lo = std::numeric_limits<double>::infinity();
  x.ForEach([&](Element e) { lo = std::min(lo, budget.budget(e)); });
  return lo;
}

double ThresholdBase(double max_singleton, double denominator) {
  return std::max(max_singleton / std::max(denominator, kTolerance),
                  kTolerance);
}

// All X with |X| <= max_size and b(X) <= B drawn from `pool`, by size then
// lexicographic position in `pool`. Includes the empty set.
std::vector<ElementSet> HighBudgetSets(const std::vector<Element>& pool,
                                       const BudgetConstraint& budget,
                                       std::size_t n, std::size_t max_size) {
  std::vector<ElementSet> out;
  std::vector<std::size_t> idx;
  for (std::size_t size = 0; size <= std::min(max_size, pool.size());
       ++size) {
    idx.resize(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      ElementSet x(n);
      double cost = 0.0;
      for (std::size_t i : idx) {
        x.insert(pool[i]);
        cost += budget.budget(pool[i]);
      }
      if (cost <= budget.total() + kTolerance) out.push_back(std::move(x));
      // Next combination.
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == pool.size() - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t t = i; t < size; ++t) idx[t] = idx[t - 1] + 1;
    }
  }
  return out;
}

RunResult BudgetHalfRun(ValueOracle& f, std::span<const Element> sequence,
                        const BudgetConstraint& budget, double epsilon,
                        const ElementSet& high_budget_set, double tau) {
  const std::size_t n = f.ground_size();
  const std::vector<Element> filtered = BudgetFeasibleElements(
      sequence, budget, MinBudget(budget, high_budget_set));
  QueryMark mark(f);
  RunResult run;
  run.solution = ElementSet(n);
  run.removed = ElementSet(n);
  double value = 0.0;
  double cost = 0.0;
  for (std::size_t pos = 0; pos < filtered.size(); ++pos) {
    if (cost >= budget.total() - kTolerance) break;
    const Element j = filtered[pos];
    const double marginal = f.Value(run.solution.With(j)) - value;
    ++run.marginal_queries;
    const double b = budget.budget(j);
    if (marginal < tau * b - kTolerance) {
      run.trace.push_back(Event(TraceKind::kReject, j, pos, marginal));
      continue;
    }
    if (b + cost <= budget.total() + kTolerance) {
      run.solution.insert(j);
      value += marginal;
      cost += b;
      run.trace.push_back(Event(TraceKind::kAdd, j, pos, marginal));
      continue;
    }
    FinalAddResult fa = FinalAdd(budget, epsilon, filtered, run.solution, j);
    TraceEvent event = Event(TraceKind::kFinalAdd, j, pos, marginal);
    event.accepted = fa.added;
    run.trace.push_back(event);
    fa.removed.ForEach([&](Element r) {
      const auto it = std::find(filtered.begin(), filtered.end(), r);
      run.trace.push_back(Event(TraceKind::kDiscard, r,
                           static_cast<std::size_t>(it - filtered.begin())));
    });
    if (fa.added) {
      run.solution = fa.solution;
      run.removed = fa.removed;
      value = f.Value(run.solution);
    }
    break;
  }
  run.value = value;
  run.queries = mark.Spent();
  return run;
}

CompositeResult RunAll(std::vector<ParamSetting> params, ValueOracle& f,
                       std::span<const Element> sequence,
                       const Constraint& constraint,
                       std::int64_t enumeration_queries) {
  CompositeResult out;
  out.params = std::move(params);
  out.enumeration_queries = enumeration_queries;
  out.total_queries = enumeration_queries;
  out.runs.reserve(out.params.size());
  for (const ParamSetting& p : out.params) {
    out.runs.push_back(RunOne(p, f, sequence, constraint));
    out.total_queries += out.runs.back().queries;
  }
  for (std::size_t i = 0; i < out.runs.size(); ++i) {
    if (i == 0 || out.runs[i].value > out.best.value + kTolerance) {
      out.best = out.runs[i];
      out.best_index = i;
    }
  }
  if (out.runs.empty()) {
    out.best.solution = ElementSet(f.ground_size());
    out.best.removed = ElementSet(f.ground_size());
  }
  return out;
}

}  // namespace

std::string_view AlgorithmName(AlgorithmTag tag) {
  switch (tag) {
    case AlgorithmTag::kCardinality:
      return "cardinality";
    case AlgorithmTag::kBudgetThird:
      return "budget_third";
    case AlgorithmTag::kBudgetHalf:
      return "budget_half";
    case AlgorithmTag::kMatroid:
      return "matroid";
  }
  return "unknown";
}

AlgorithmTag ParseAlgorithmTag(std::string_view name) {
  if (name == "cardinality") return AlgorithmTag::kCardinality;
  if (name == "budget_third") return AlgorithmTag::kBudgetThird;
  if (name == "budget_half") return AlgorithmTag::kBudgetHalf;
  if (name == "matroid") return AlgorithmTag::kMatroid;
  throw InputError("unknown algorithm tag '" + std::string(name) + "'");
}

std::string ParamSetting::ToString() const {
  std::ostringstream out;
  out << AlgorithmName(tag);
  if (threshold) out << " tau=" << *threshold;
  if (high_budget_set) out << " X=" << high_budget_set->ToString();
  if (singleton) out << " singleton=" << *singleton;
  return out.str();
}

std::size_t GridSize(double x, double epsilon) {
  if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
  if (x <= 1.0) return 1;
  const double steps = std::log(x) / std::log1p(epsilon);
  return std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(steps - kTolerance)));
}

RunResult ThresholdAdd(ValueOracle& f, std::span<const Element> sequence,
                       std::size_t k, double tau) {
  CheckSequence(f, sequence);
  QueryMark mark(f);
  RunResult run;
  run.solution = ElementSet(f.ground_size());
  run.removed = ElementSet(f.ground_size());
  double value = 0.0;
  for (std::size_t pos = 0; pos < sequence.size(); ++pos) {
    if (run.solution.size() >= k) break;
    const Element i = sequence[pos];
    const double with_i = f.Value(run.solution.With(i));
    ++run.marginal_queries;
    const double marginal = with_i - value;
    if (marginal >= tau - kTolerance) {
      run.solution.insert(i);
      value = with_i;
      run.trace.push_back(Event(TraceKind::kAdd, i, pos, marginal));
    } else {
      run.trace.push_back(Event(TraceKind::kReject, i, pos, marginal));
    }
  }
  run.value = value;
  run.queries = mark.Spent();
  return run;
}

CompositeResult CardinalityMax(ValueOracle& f,
                               std::span<const Element> sequence,
                               std::size_t k, double epsilon) {
  if (k < 1) throw InputError("cardinality k must be >= 1");
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw InputError("epsilon must lie in (0, 1)");
  }
  return Maximize(AlgorithmTag::kCardinality, f, sequence,
                  CardinalityConstraint{k}, epsilon);
}

RunResult BudgetThresholdAdd(ValueOracle& f,
                             std::span<const Element> sequence,
                             const BudgetConstraint& budget, double tau) {
  CheckSequence(f, sequence);
  QueryMark mark(f);
  RunResult run;
  run.solution = ElementSet(f.ground_size());
  run.removed = ElementSet(f.ground_size());
  double value = 0.0;
  double cost = 0.0;
  std::size_t pos = 0;
  for (; pos < sequence.size(); ++pos) {
    if (cost >= budget.total() - kTolerance) break;
    const Element i = sequence[pos];
    const double b = budget.budget(i);
    if (b > budget.total() - cost + kTolerance) {
      run.trace.push_back(Event(TraceKind::kReject, i, pos, 0.0));
      continue;
    }
    const double with_i = f.Value(run.solution.With(i));
    ++run.marginal_queries;
    const double marginal = with_i - value;
    if (marginal >= tau * b - kTolerance) {
      run.solution.insert(i);
      value = with_i;
      cost += b;
      run.trace.push_back(Event(TraceKind::kAdd, i, pos, marginal));
    } else {
      run.trace.push_back(Event(TraceKind::kReject, i, pos, marginal));
    }
  }
  run.value = value;
  run.queries = mark.Spent();
  return run;
}

CompositeResult BudgetThird(ValueOracle& f, std::span<const Element> sequence,
                            const BudgetConstraint& budget, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw InputError("epsilon must lie in (0, 1)");
  }
  return Maximize(AlgorithmTag::kBudgetThird, f, sequence, budget, epsilon);
}

FinalAddResult FinalAdd(const BudgetConstraint& budget, double epsilon,
                        std::span<const Element> sequence,
                        const ElementSet& solution, Element j) {
  FinalAddResult out{solution, ElementSet(solution.universe()), false};
  const double limit = budget.total() + kTolerance;
  double cost = budget.Cost(solution) + budget.budget(j);
  if (cost <= limit) {
    out.solution.insert(j);
    out.added = true;
    return out;
  }
  const double small = epsilon * budget.total();
  for (Element e : sequence) {
    if (cost <= limit) break;
    if (solution.contains(e) && budget.budget(e) < small) {
      out.removed.insert(e);
      cost -= budget.budget(e);
    }
  }
  if (cost > limit) return {solution, ElementSet(solution.universe()), false};
  out.solution -= out.removed;
  out.solution.insert(j);
  out.added = true;
  return out;
}

CompositeResult BudgetHalf(ValueOracle& f, std::span<const Element> sequence,
                           const BudgetConstraint& budget, double epsilon) {
  return Maximize(AlgorithmTag::kBudgetHalf, f, sequence, budget, epsilon);
}

RunResult MatroidLocalSearch(ValueOracle& f, std::span<const Element> sequence,
                             const Matroid& matroid,
                             const IterationObserver& observer) {
  CheckSequence(f, sequence);
  const std::size_t n = f.ground_size();
  if (matroid.ground_size() != n) {
    throw InputError("matroid and oracle disagree on the ground set size");
  }
  QueryMark mark(f);
  const std::int64_t indep_start = matroid.query_count();
  const std::size_t full_rank = matroid.FullRank();

  RunResult run;
  run.solution = ElementSet(n);
  run.removed = ElementSet(n);
  ElementSet held(n);  // S u R
  double held_value = 0.0;
  std::vector<double> v(n, 0.0);

  for (std::size_t pos = 0; pos < sequence.size(); ++pos) {
    const Element j = sequence[pos];
    // A basis of the whole matroid cannot be extended.
    const bool independent = run.solution.size() < full_rank &&
                             matroid.IsIndependent(run.solution.With(j));
    const double with_j = f.Value(held.With(j));
    ++run.marginal_queries;
    const double marginal = with_j - held_value;

    if (independent) {
      v[j] = marginal;
      run.solution.insert(j);
      held.insert(j);
      held_value = with_j;
      TraceEvent event = Event(TraceKind::kAdd, j, pos, marginal);
      event.v = v[j];
      run.trace.push_back(event);
    } else {
      const ElementSet circuit = CircuitOfDependent(matroid, run.solution, j);
      std::optional<Element> weakest;
      circuit.ForEach([&](Element i) {
        if (i == j) return;
        if (!weakest || v[i] < v[*weakest]) weakest = i;
      });
      if (weakest && marginal > v[*weakest] + kTolerance) {
        v[j] = v[*weakest] + marginal;
        run.solution.erase(*weakest);
        run.solution.insert(j);
        run.removed.insert(*weakest);
        held.insert(j);
        held_value = with_j;
        TraceEvent event = Event(TraceKind::kSwap, j, pos, marginal);
        event.swapped_out = *weakest;
        event.v = v[j];
        run.trace.push_back(event);
      } else {
        run.trace.push_back(Event(TraceKind::kReject, j, pos, marginal));
      }
    }
    if (observer) observer(pos + 1, run.solution, run.removed);
  }
  run.value =
      run.removed.empty() ? held_value : f.Value(run.solution);
  run.queries = mark.Spent();
  run.independence_queries = matroid.query_count() - indep_start;
  return run;
}

BudgetConstraint AsBudget(const Constraint& constraint, std::size_t n) {
  if (const auto* b = std::get_if<BudgetConstraint>(&constraint)) {
    if (b->ground_size() != n) {
      throw InputError("budget vector length does not match the ground set");
    }
    return *b;
  }
  if (const auto* k = std::get_if<CardinalityConstraint>(&constraint)) {
    return BudgetConstraint::Unit(n, k->k);
  }
  throw InputError("budget algorithms need a budget or cardinality constraint");
}

std::shared_ptr<const Matroid> AsMatroid(const Constraint& constraint,
                                         std::size_t n) {
  if (const auto* m = std::get_if<std::shared_ptr<const Matroid>>(&constraint)) {
    if ((*m)->ground_size() != n) {
      throw InputError("matroid ground set does not match the oracle");
    }
    return *m;
  }
  if (const auto* k = std::get_if<CardinalityConstraint>(&constraint)) {
    return std::make_shared<UniformMatroid>(n, k->k);
  }
  throw InputError("matroid algorithm needs a matroid or cardinality constraint");
}

void CheckApplicable(AlgorithmTag tag, const Constraint& constraint) {
  const bool ok = [&] {
    switch (tag) {
      case AlgorithmTag::kCardinality:
        return std::holds_alternative<CardinalityConstraint>(constraint);
      case AlgorithmTag::kBudgetThird:
      case AlgorithmTag::kBudgetHalf:
        return std::holds_alternative<BudgetConstraint>(constraint) ||
               std::holds_alternative<CardinalityConstraint>(constraint);
      case AlgorithmTag::kMatroid:
        return std::holds_alternative<std::shared_ptr<const Matroid>>(
                   constraint) ||
               std::holds_alternative<CardinalityConstraint>(constraint);
    }
    return false;
  }();
  if (!ok) {
    throw InputError(std::string(AlgorithmName(tag)) +
                     " cannot run under a " + ConstraintKind(constraint) +
                     " constraint");
  }
}

std::vector<ParamSetting> EnumerateParams(AlgorithmTag tag, ValueOracle& f,
                                          std::span<const Element> sequence,
                                          const Constraint& constraint,
                                          double epsilon) {
  CheckSequence(f, sequence);
  CheckApplicable(tag, constraint);
  const std::size_t n = f.ground_size();
  std::vector<ParamSetting> params;
  auto grid = [&](double base, std::size_t count, const ElementSet* x) {
    for (std::size_t i = 0; i < count; ++i) {
      ParamSetting p;
      p.tag = tag;
      p.epsilon = epsilon;
      p.threshold = base * std::pow(1.0 + epsilon, static_cast<double>(i));
      if (x != nullptr) p.high_budget_set = *x;
      params.push_back(std::move(p));
    }
  };

  switch (tag) {
    case AlgorithmTag::kCardinality: {
      if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
      const std::size_t k = CardinalityK(constraint);
      if (k < 1) throw InputError("cardinality k must be >= 1");
      const double top = MaxSingleton(f, sequence);
      grid(ThresholdBase(top, static_cast<double>(k)),
           GridSize(static_cast<double>(k), epsilon), nullptr);
      break;
    }
    case AlgorithmTag::kBudgetThird: {
      if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
      const BudgetConstraint budget = AsBudget(constraint, n);
      const std::vector<Element> pool =
          BudgetFeasibleElements(sequence, budget, budget.total());
      const double top = MaxSingleton(f, pool);
      grid(ThresholdBase(top, budget.total()),
           GridSize(static_cast<double>(pool.size()), epsilon), nullptr);
      for (Element e : pool) {
        ParamSetting p;
        p.tag = tag;
        p.epsilon = epsilon;
        p.singleton = e;
        params.push_back(std::move(p));
      }
      break;
    }
    case AlgorithmTag::kBudgetHalf: {
      if (!(epsilon > 0.0 && epsilon < 0.5)) {
        throw InputError("budget_half needs epsilon in (0, 0.5)");
      }
      const BudgetConstraint budget = AsBudget(constraint, n);
      const std::vector<Element> pool =
          BudgetFeasibleElements(sequence, budget, budget.total());
      std::vector<double> single(n, 0.0);
      for (Element e : pool) single[e] = f.Value(ElementSet(n, {e}));
      const auto max_size =
          static_cast<std::size_t>(std::floor(1.0 / epsilon + kTolerance));
      for (const ElementSet& x :
           HighBudgetSets(pool, budget, n, max_size)) {
        const std::vector<Element> filtered =
            BudgetFeasibleElements(pool, budget, MinBudget(budget, x));
        if (filtered.empty()) continue;
        double top = 0.0;
        for (Element e : filtered) top = std::max(top, single[e]);
        grid(ThresholdBase(top, budget.total()),
             GridSize(static_cast<double>(filtered.size()), epsilon), &x);
      }
      break;
    }
    case AlgorithmTag::kMatroid: {
      ParamSetting p;
      p.tag = tag;
      p.epsilon = epsilon;
      params.push_back(std::move(p));
      break;
    }
  }
  return params;
}

RunResult RunOne(const ParamSetting& param, ValueOracle& f,
                 std::span<const Element> sequence,
                 const Constraint& constraint) {
  CheckApplicable(param.tag, constraint);
  const std::size_t n = f.ground_size();
  switch (param.tag) {
    case AlgorithmTag::kCardinality:
      if (!param.threshold) throw InputError("cardinality run needs a tau");
      return ThresholdAdd(f, sequence, CardinalityK(constraint),
                          *param.threshold);
    case AlgorithmTag::kBudgetThird: {
      const BudgetConstraint budget = AsBudget(constraint, n);
      if (param.singleton) {
        QueryMark mark(f);
        RunResult run;
        run.solution = ElementSet(n);
        run.removed = ElementSet(n);
        const Element e = *param.singleton;
        const auto it = std::find(sequence.begin(), sequence.end(), e);
        if (it != sequence.end() && budget.budget(e) <= budget.total() + kTolerance) {
          run.solution.insert(e);
          run.value = f.Value(run.solution);
          run.trace.push_back(Event(TraceKind::kAdd, e,
                               static_cast<std::size_t>(it - sequence.begin()),
                               run.value));
        }
        run.queries = mark.Spent();
        return run;
      }
      if (!param.threshold) throw InputError("budget run needs a tau");
      return BudgetThresholdAdd(f, sequence, budget, *param.threshold);
    }
    case AlgorithmTag::kBudgetHalf: {
      if (!param.threshold || !param.high_budget_set) {
        throw InputError("budget_half run needs tau and X");
      }
      return BudgetHalfRun(f, sequence, AsBudget(constraint, n), param.epsilon,
                           *param.high_budget_set, *param.threshold);
    }
    case AlgorithmTag::kMatroid:
      return MatroidLocalSearch(f, sequence, *AsMatroid(constraint, n));
  }
  throw InputError("unknown algorithm tag");
}

CompositeResult Maximize(AlgorithmTag tag, ValueOracle& f,
                         std::span<const Element> sequence,
                         const Constraint& constraint, double epsilon) {
  const std::int64_t start = f.query_count();
  std::vector<ParamSetting> params =
      EnumerateParams(tag, f, sequence, constraint, epsilon);
  return RunAll(std::move(params), f, sequence, constraint,
                f.query_count() - start);
}

CompositeResult MaximizeParallel(AlgorithmTag tag,
                                 const OracleFactory& make_oracle,
                                 std::span<const Element> sequence,
                                 const Constraint& constraint, double epsilon,
                                 int jobs) {
  std::unique_ptr<ValueOracle> first = make_oracle();
  if (jobs <= 1) return Maximize(tag, *first, sequence, constraint, epsilon);

  CompositeResult out;
  out.params = EnumerateParams(tag, *first, sequence, constraint, epsilon);
  out.enumeration_queries = first->query_count();
  out.runs.resize(out.params.size());
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(jobs), out.params.size());
  std::vector<std::unique_ptr<ValueOracle>> oracles;
  for (std::size_t w = 0; w < workers; ++w) oracles.push_back(make_oracle());
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < out.params.size(); i += workers) {
          out.runs[i] = RunOne(out.params[i], *oracles[w], sequence, constraint);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (std::thread& t : threads) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  out.total_queries = out.enumeration_queries;
  for (std::size_t i = 0; i < out.runs.size(); ++i) {
    out.total_queries += out.runs[i].queries;
    if (i == 0 || out.runs[i].value > out.best.value + kTolerance) {
      out.best = out.runs[i];
      out.best_index = i;
    }
  }
  return out;
}

}  // namespace subord
