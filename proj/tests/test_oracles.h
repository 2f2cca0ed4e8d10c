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

// Independent reference implementations used only by tests. None of these
// call into the algorithms or verify modules.

#ifndef SUBORD_TESTS_TEST_ORACLES_H_
#define SUBORD_TESTS_TEST_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "subord/assortment.h"
#include "subord/constraints.h"
#include "subord/core.h"
#include "subord/element_set.h"

namespace subord::testing {

// Maximum of f over every subset accepted by `feasible`, by plain mask scan.
inline std::pair<ElementSet, double> ExhaustiveMax(
    ValueOracle& f, const std::function<bool(const ElementSet&)>& feasible) {
  const std::size_t n = f.ground_size();
  ElementSet best(n);
  double best_value = f.Value(best);
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    const ElementSet s = ElementSet::FromMask(n, m);
    if (!feasible(s)) continue;
    const double v = f.Value(s);
    if (v > best_value) {
      best_value = v;
      best = s;
    }
  }
  return {best, best_value};
}

// Best revenue over all subsets of `ground`, straight from Revenue().
inline std::pair<ElementSet, double> ExhaustiveAssortment(
    const ChoiceModel& model, const ElementSet& ground) {
  const std::size_t n = model.num_products();
  ElementSet best(n);
  double best_value = 0.0;
  const std::uint64_t g = ground.ToMask();
  for (std::uint64_t m = g;; m = (m - 1) & g) {
    const ElementSet s = ElementSet::FromMask(n, m);
    const double v = model.Revenue(s);
    if (v > best_value + 1e-12) {
      best_value = v;
      best = s;
    }
    if (m == 0) break;
  }
  return {best, best_value};
}

// Classic greedy: repeatedly add the element with the largest marginal.
inline double GreedyValue(ValueOracle& f, std::size_t k) {
  const std::size_t n = f.ground_size();
  ElementSet s(n);
  double value = f.Value(s);
  for (std::size_t step = 0; step < k; ++step) {
    double best = -1.0;
    Element pick = n;
    for (Element e = 0; e < n; ++e) {
      if (s.contains(e)) continue;
      const double v = f.Value(s.With(e));
      if (v > best) {
        best = v;
        pick = e;
      }
    }
    if (pick == n) break;
    s.insert(pick);
    value = best;
  }
  return value;
}

struct MonteCarloEstimate {
  double mean = 0.0;
  double stderr_mean = 0.0;
};

// Simulates customers walking the Markov chain until they hit an offered
// product or leave.
inline MonteCarloEstimate SimulateMarkovRevenue(const MarkovModel& model,
                                                const ElementSet& offered,
                                                std::size_t trajectories,
                                                std::uint64_t seed) {
  const std::size_t n = model.num_products();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto draw = [&](const std::vector<double>& probs) -> std::size_t {
    double u = unit(rng);
    for (std::size_t j = 0; j < probs.size(); ++j) {
      if (u < probs[j]) return j;
      u -= probs[j];
    }
    return n;  // outside option
  };
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t t = 0; t < trajectories; ++t) {
    std::size_t at = draw(model.arrival());
    double revenue = 0.0;
    while (at < n) {
      if (offered.contains(at)) {
        revenue = model.prices()[at];
        break;
      }
      at = draw(model.transition()[at]);
    }
    sum += revenue;
    sum_sq += revenue * revenue;
  }
  const double m = sum / static_cast<double>(trajectories);
  const double var = sum_sq / static_cast<double>(trajectories) - m * m;
  return {m, std::sqrt(std::max(var, 0.0) / static_cast<double>(trajectories))};
}

// Column vectors over GF(2); the independent sets of the column matroid are
// tabulated into explicit bases.
inline std::shared_ptr<ExplicitMatroid> RandomLinearMatroid(
    std::size_t n, std::size_t dimension, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> columns(n);
  for (auto& c : columns) {
    c = static_cast<std::uint32_t>(rng()) & ((1u << dimension) - 1);
  }
  auto rank = [&](std::uint64_t mask) {
    std::uint32_t pivot[32] = {};
    std::size_t r = 0;
    for (std::size_t e = 0; e < n; ++e) {
      if (!(mask >> e & 1)) continue;
      std::uint32_t v = columns[e];
      for (int bit = 31; bit >= 0 && v != 0; --bit) {
        if (!(v >> bit & 1)) continue;
        if (pivot[bit] == 0) {
          pivot[bit] = v;
          ++r;
          v = 0;
        } else {
          v ^= pivot[bit];
        }
      }
    }
    return r;
  };
  const std::size_t full = rank((std::uint64_t{1} << n) - 1);
  std::vector<ElementSet> bases;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (static_cast<std::size_t>(__builtin_popcountll(m)) == full &&
        rank(m) == full) {
      bases.push_back(ElementSet::FromMask(n, m));
    }
  }
  return std::make_shared<ExplicitMatroid>(n, std::move(bases));
}

// A choice model given by an arbitrary probability rule. Unconstrained
// optimization is exhaustive. Used to build models that break
// substitutability.
class RuleChoiceModel : public ChoiceModel {
 public:
  using Rule = std::function<double(Element, const ElementSet&)>;
  RuleChoiceModel(std::vector<double> prices, Rule rule)
      : prices_(std::move(prices)), rule_(std::move(rule)) {}

  std::size_t num_products() const override { return prices_.size(); }
  const std::vector<double>& prices() const override { return prices_; }
  std::string_view kind() const override { return "rule"; }
  double ChoiceProbability(Element i, const ElementSet& s) const override {
    return s.contains(i) ? rule_(i, s) : 0.0;
  }
  Assortment OptimizeUnconstrained(const ElementSet& ground) const override {
    auto [set, value] = ExhaustiveAssortment(*this, ground);
    return {set, value};
  }
  Assortment OptimizeUnconstrainedMaximal(
      const ElementSet& ground) const override {
    const double best = OptimizeUnconstrained(ground).revenue;
    const std::size_t n = num_products();
    Assortment out{ElementSet(n), 0.0};
    const std::uint64_t g = ground.ToMask();
    for (std::uint64_t m = g;; m = (m - 1) & g) {
      const ElementSet s = ElementSet::FromMask(n, m);
      if (Revenue(s) >= best - 1e-9 && s.size() >= out.products.size()) {
        out = {s, Revenue(s)};
      }
      if (m == 0) break;
    }
    return out;
  }

 private:
  std::vector<double> prices_;
  Rule rule_;
};

}  // namespace subord::testing

#endif  // SUBORD_TESTS_TEST_ORACLES_H_
