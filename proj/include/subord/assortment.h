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

#ifndef SUBORD_ASSORTMENT_H_
#define SUBORD_ASSORTMENT_H_

#include <cstddef>
#include <memory>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "subord/constraints.h"
#include "subord/core.h"
#include "subord/element_set.h"

namespace subord {

struct Assortment {
  ElementSet products;
  double revenue = 0.0;
};

// A discrete choice model over products 0..n-1 with fixed prices.
class ChoiceModel {
 public:
  virtual ~ChoiceModel() = default;

  virtual std::size_t num_products() const = 0;
  virtual const std::vector<double>& prices() const = 0;
  virtual std::string_view kind() const = 0;

  // Probability that a customer offered `s` buys `i`; zero when i is not in s.
  virtual double ChoiceProbability(Element i, const ElementSet& s) const = 0;
  virtual double Revenue(const ElementSet& s) const;

  // Best sub-assortment of `ground`. Among optimal sets this returns the
  // smallest canonical one; the maximal variant returns the largest.
  virtual Assortment OptimizeUnconstrained(const ElementSet& ground) const = 0;
  virtual Assortment OptimizeUnconstrainedMaximal(
      const ElementSet& ground) const = 0;
};

class MnlModel : public ChoiceModel {
 public:
  // Throws InputError on negative entries, mismatched lengths, or a zero
  // total weight.
  MnlModel(std::vector<double> weights, double outside_weight,
           std::vector<double> prices);

  std::size_t num_products() const override { return weights_.size(); }
  const std::vector<double>& prices() const override { return prices_; }
  std::string_view kind() const override { return "mnl"; }
  const std::vector<double>& weights() const { return weights_; }
  double outside_weight() const { return outside_weight_; }

  double ChoiceProbability(Element i, const ElementSet& s) const override;
  double Revenue(const ElementSet& s) const override;
  Assortment OptimizeUnconstrained(const ElementSet& ground) const override;
  Assortment OptimizeUnconstrainedMaximal(
      const ElementSet& ground) const override;

 private:
  std::vector<double> weights_;
  double outside_weight_;
  std::vector<double> prices_;
};

class MarkovModel : public ChoiceModel {
 public:
  // `arrival[i]` is the probability of starting at product i; the rest of the
  // mass arrives at the outside option. Row i of `transition` lists the move
  // probabilities to products; its deficit moves to the outside option.
  // Throws InputError unless rows are substochastic, arrivals sum to at most
  // one, and every product eventually reaches the outside option.
  MarkovModel(std::vector<double> arrival,
              std::vector<std::vector<double>> transition,
              std::vector<double> prices);

  std::size_t num_products() const override { return arrival_.size(); }
  const std::vector<double>& prices() const override { return prices_; }
  std::string_view kind() const override { return "markov"; }
  const std::vector<double>& arrival() const { return arrival_; }
  const std::vector<std::vector<double>>& transition() const {
    return transition_;
  }
  double ExitProbability(Element i) const;

  // Absorption probability at every product of `s` (zero outside `s`).
  std::vector<double> AbsorptionProbabilities(const ElementSet& s) const;
  double ChoiceProbability(Element i, const ElementSet& s) const override;
  double Revenue(const ElementSet& s) const override;
  Assortment OptimizeUnconstrained(const ElementSet& ground) const override;
  Assortment OptimizeUnconstrainedMaximal(
      const ElementSet& ground) const override;

  // Optimal-stopping continuation values: entry i is the expected revenue of
  // a customer who leaves product i unserved, when only `ground` may be
  // offered. Value iteration followed by exact policy evaluation.
  std::vector<double> ContinuationValues(const ElementSet& ground) const;

 private:
  std::vector<double> arrival_;
  std::vector<std::vector<double>> transition_;
  std::vector<double> prices_;
};

// Finite-type mixture of MNL models sharing one price vector.
class MixtureMnl {
 public:
  MixtureMnl(std::vector<double> type_weights, std::vector<MnlModel> models);

  std::size_t num_products() const { return models_.front().num_products(); }
  const std::vector<double>& prices() const { return models_.front().prices(); }
  const std::vector<double>& type_weights() const { return type_weights_; }
  const std::vector<MnlModel>& models() const { return models_; }

  // Expected revenue when every type is offered its own best subset of `s`.
  double Objective(const ElementSet& s) const;

 private:
  std::vector<double> type_weights_;
  std::vector<MnlModel> models_;
};

// f(S) = best revenue of a sub-assortment of S. Values are memoized; every
// call still counts as one query.
class ChoiceObjectiveOracle : public ValueOracle {
 public:
  explicit ChoiceObjectiveOracle(std::shared_ptr<const ChoiceModel> model);

  const ChoiceModel& model() const { return *model_; }

 protected:
  double Evaluate(const ElementSet& s) override;

 private:
  std::shared_ptr<const ChoiceModel> model_;
  std::unordered_map<ElementSet, double, ElementSetHash> memo_;
};

class MixtureOracle : public ValueOracle {
 public:
  explicit MixtureOracle(std::shared_ptr<const MixtureMnl> mixture);

 protected:
  double Evaluate(const ElementSet& s) override;

 private:
  std::shared_ptr<const MixtureMnl> mixture_;
  std::unordered_map<ElementSet, double, ElementSetHash> memo_;
};

// Products by nonincreasing price, ties by smaller id.
Order DescendingPriceOrder(const std::vector<double>& prices);

class PriceLadder {
 public:
  // Throws InputError unless prices are positive and distinct.
  explicit PriceLadder(std::vector<double> prices);

  std::size_t size() const { return prices_.size(); }
  double at(std::size_t index) const { return prices_.at(index); }
  const std::vector<double>& prices() const { return prices_; }

 private:
  std::vector<double> prices_;
};

// Ground set of (product, price) pairs, element id = product * |P| + index.
struct PricingExpansion {
  std::size_t base_products = 0;
  std::vector<double> ladder;
  std::vector<double> prices;  // per expanded element
  std::shared_ptr<const Matroid> matroid;

  std::size_t size() const { return prices.size(); }
  Element Id(std::size_t product, std::size_t price_index) const;
  std::pair<std::size_t, std::size_t> Decode(Element e) const;
};

// At most one price per product and at most k products overall.
PricingExpansion ExpandPricing(std::size_t base_products,
                               const PriceLadder& ladder, std::size_t k);

// MNL over the expansion; weights[i][p] is the weight of product i at price
// ladder[p].
MnlModel ExpandMnlPricing(const PricingExpansion& expansion,
                          const std::vector<std::vector<double>>& weights,
                          double outside_weight);

}  // namespace subord

#endif  // SUBORD_ASSORTMENT_H_
