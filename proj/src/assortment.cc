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

#include "subord/assortment.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Dense>

#include "subord/errors.h"

namespace subord {
namespace {

constexpr double kValueIterationTolerance = 1e-10;
constexpr int kValueIterationCap = 100000;

void CheckNonnegative(const std::vector<double>& values, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] >= 0.0) || !std::isfinite(values[i])) {
      throw InputError(std::string(what) + "[" + std::to_string(i) +
                       "] must be a finite nonnegative number");
    }
  }
}

void CheckGround(const ChoiceModel& model, const ElementSet& s) {
  if (s.universe() != model.num_products()) {
    throw InputError("assortment universe " + std::to_string(s.universe()) +
                     " does not match " + std::to_string(model.num_products()) +
                     " products");
  }
}

// Products of `ground` by nonincreasing price, ties by smaller id.
std::vector<Element> ByDescendingPrice(const std::vector<double>& prices,
                                       const ElementSet& ground) {
  std::vector<Element> out = ground.ToVector();
  std::stable_sort(out.begin(), out.end(), [&](Element a, Element b) {
    return prices[a] > prices[b];
  });
  return out;
}

}  // namespace

double ChoiceModel::Revenue(const ElementSet& s) const {
  CheckGround(*this, s);
  double total = 0.0;
  s.ForEach([&](Element i) { total += prices()[i] * ChoiceProbability(i, s); });
  return total;
}

MnlModel::MnlModel(std::vector<double> weights, double outside_weight,
                   std::vector<double> prices)
    : weights_(std::move(weights)),
      outside_weight_(outside_weight),
      prices_(std::move(prices)) {
  if (weights_.size() != prices_.size()) {
    throw InputError("MNL weights and prices differ in length");
  }
  CheckNonnegative(weights_, "weight");
  CheckNonnegative(prices_, "price");
  CheckNonnegative({outside_weight_}, "outside weight");
  const double total =
      std::accumulate(weights_.begin(), weights_.end(), outside_weight_);
  if (!(total > 0.0)) throw InputError("MNL weights are all zero");
}

double MnlModel::ChoiceProbability(Element i, const ElementSet& s) const {
  CheckGround(*this, s);
  if (!s.contains(i)) return 0.0;
  double denominator = outside_weight_;
  s.ForEach([&](Element e) { denominator += weights_[e]; });
  return denominator > 0.0 ? weights_[i] / denominator : 0.0;
}

double MnlModel::Revenue(const ElementSet& s) const {
  CheckGround(*this, s);
  double numerator = 0.0;
  double denominator = outside_weight_;
  s.ForEach([&](Element e) {
    numerator += prices_[e] * weights_[e];
    denominator += weights_[e];
  });
  return denominator > 0.0 ? numerator / denominator : 0.0;
}

Assortment MnlModel::OptimizeUnconstrained(const ElementSet& ground) const {
  CheckGround(*this, ground);
  const std::vector<Element> sorted = ByDescendingPrice(prices_, ground);
  double numerator = 0.0;
  double denominator = outside_weight_;
  double best = 0.0;
  std::size_t best_length = 0;
  for (std::size_t t = 0; t < sorted.size(); ++t) {
    numerator += prices_[sorted[t]] * weights_[sorted[t]];
    denominator += weights_[sorted[t]];
    const double value = denominator > 0.0 ? numerator / denominator : 0.0;
    if (value > best + kTolerance) {
      best = value;
      best_length = t + 1;
    }
  }
  Assortment out{ElementSet(num_products()), 0.0};
  for (std::size_t t = 0; t < best_length; ++t) {
    if (weights_[sorted[t]] > 0.0) out.products.insert(sorted[t]);
  }
  out.revenue = Revenue(out.products);
  return out;
}

Assortment MnlModel::OptimizeUnconstrainedMaximal(
    const ElementSet& ground) const {
  const double best = OptimizeUnconstrained(ground).revenue;
  Assortment out{ElementSet(num_products()), 0.0};
  ground.ForEach([&](Element i) {
    if (weights_[i] == 0.0 || prices_[i] >= best - kTolerance) {
      out.products.insert(i);
    }
  });
  out.revenue = Revenue(out.products);
  return out;
}

MarkovModel::MarkovModel(std::vector<double> arrival,
                         std::vector<std::vector<double>> transition,
                         std::vector<double> prices)
    : arrival_(std::move(arrival)),
      transition_(std::move(transition)),
      prices_(std::move(prices)) {
  const std::size_t n = arrival_.size();
  if (prices_.size() != n || transition_.size() != n) {
    throw InputError("Markov arrival, transition, and prices differ in size");
  }
  CheckNonnegative(arrival_, "arrival");
  CheckNonnegative(prices_, "price");
  const double arrivals =
      std::accumulate(arrival_.begin(), arrival_.end(), 0.0);
  if (arrivals > 1.0 + kTolerance) {
    throw InputError("arrival probabilities sum to " +
                     std::to_string(arrivals) + " > 1");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (transition_[i].size() != n) {
      throw InputError("transition row " + std::to_string(i) + " has " +
                       std::to_string(transition_[i].size()) +
                       " entries, expected " + std::to_string(n));
    }
    CheckNonnegative(transition_[i],
                     ("transition row " + std::to_string(i) + " entry").c_str());
    const double sum =
        std::accumulate(transition_[i].begin(), transition_[i].end(), 0.0);
    if (sum > 1.0 + kTolerance) {
      throw InputError("transition row " + std::to_string(i) + " sums to " +
                       std::to_string(sum) + " > 1");
    }
  }
  // Every product must reach the outside option, otherwise I - rho is
  // singular and absorption is undefined.
  std::vector<bool> exits(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    exits[i] = ExitProbability(i) > kTolerance;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (exits[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (transition_[i][j] > 0.0 && exits[j]) {
          exits[i] = true;
          changed = true;
          break;
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!exits[i]) {
      throw InputError("product " + std::to_string(i) +
                       " never reaches the outside option (I - rho is "
                       "singular)");
    }
  }
}

double MarkovModel::ExitProbability(Element i) const {
  const auto& row = transition_.at(i);
  return std::max(0.0, 1.0 - std::accumulate(row.begin(), row.end(), 0.0));
}

std::vector<double> MarkovModel::AbsorptionProbabilities(
    const ElementSet& s) const {
  CheckGround(*this, s);
  const std::size_t n = num_products();
  std::vector<double> out(n, 0.0);
  if (s.empty()) return out;
  std::vector<Element> transient;
  for (Element i = 0; i < n; ++i) {
    if (!s.contains(i)) transient.push_back(i);
  }
  // Expected visits x to transient states: (I - Q_TT)^T x = lambda_T.
  const auto t = static_cast<Eigen::Index>(transient.size());
  Eigen::VectorXd visits = Eigen::VectorXd::Zero(t);
  if (t > 0) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(t, t);
    Eigen::VectorXd lambda(t);
    for (Eigen::Index r = 0; r < t; ++r) {
      lambda(r) = arrival_[transient[r]];
      for (Eigen::Index c = 0; c < t; ++c) {
        a(c, r) -= transition_[transient[r]][transient[c]];
      }
    }
    visits = a.partialPivLu().solve(lambda);
  }
  s.ForEach([&](Element i) {
    double p = arrival_[i];
    for (Eigen::Index r = 0; r < t; ++r) {
      p += visits(r) * transition_[transient[r]][i];
    }
    out[i] = p;
  });
  return out;
}

double MarkovModel::ChoiceProbability(Element i, const ElementSet& s) const {
  if (!s.contains(i)) return 0.0;
  return AbsorptionProbabilities(s)[i];
}

double MarkovModel::Revenue(const ElementSet& s) const {
  const std::vector<double> p = AbsorptionProbabilities(s);
  double total = 0.0;
  s.ForEach([&](Element i) { total += prices_[i] * p[i]; });
  return total;
}

std::vector<double> MarkovModel::ContinuationValues(
    const ElementSet& ground) const {
  CheckGround(*this, ground);
  const std::size_t n = num_products();
  auto continuation = [&](const std::vector<double>& g) {
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) c[i] += transition_[i][j] * g[j];
    }
    return c;
  };

  std::vector<double> g(n, 0.0);
  std::vector<double> c(n, 0.0);
  for (int iter = 0;; ++iter) {
    if (iter == kValueIterationCap) {
      throw NumericalError("value iteration did not converge in " +
                           std::to_string(kValueIterationCap) + " sweeps");
    }
    c = continuation(g);
    double diff = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double next = ground.contains(i) ? std::max(prices_[i], c[i]) : c[i];
      diff = std::max(diff, std::abs(next - g[i]));
      g[i] = next;
    }
    if (diff < kValueIterationTolerance) break;
  }

  // Exact evaluation of the stopping rule until it is stable.
  ElementSet stop(n);
  for (std::size_t round = 0; round <= n + 1; ++round) {
    ElementSet next(n);
    ground.ForEach([&](Element i) {
      if (prices_[i] > c[i] + kTolerance) next.insert(i);
    });
    if (round > 0 && next == stop) break;
    stop = next;
    std::vector<Element> transient;
    for (Element i = 0; i < n; ++i) {
      if (!stop.contains(i)) transient.push_back(i);
    }
    const auto t = static_cast<Eigen::Index>(transient.size());
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(t, t);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(t);
    for (Eigen::Index r = 0; r < t; ++r) {
      for (Eigen::Index col = 0; col < t; ++col) {
        a(r, col) -= transition_[transient[r]][transient[col]];
      }
      stop.ForEach([&](Element j) {
        b(r) += transition_[transient[r]][j] * prices_[j];
      });
    }
    const Eigen::VectorXd gt = t > 0 ? Eigen::VectorXd(a.partialPivLu().solve(b))
                                     : Eigen::VectorXd();
    stop.ForEach([&](Element j) { g[j] = prices_[j]; });
    for (Eigen::Index r = 0; r < t; ++r) g[transient[r]] = gt(r);
    c = continuation(g);
  }
  return c;
}

Assortment MarkovModel::OptimizeUnconstrained(const ElementSet& ground) const {
  const std::vector<double> c = ContinuationValues(ground);
  Assortment out{ElementSet(num_products()), 0.0};
  ground.ForEach([&](Element i) {
    if (prices_[i] > c[i] + kTolerance) out.products.insert(i);
  });
  out.revenue = Revenue(out.products);
  return out;
}

Assortment MarkovModel::OptimizeUnconstrainedMaximal(
    const ElementSet& ground) const {
  const std::vector<double> c = ContinuationValues(ground);
  Assortment out{ElementSet(num_products()), 0.0};
  ground.ForEach([&](Element i) {
    if (prices_[i] >= c[i] - kTolerance) out.products.insert(i);
  });
  out.revenue = Revenue(out.products);
  return out;
}

MixtureMnl::MixtureMnl(std::vector<double> type_weights,
                       std::vector<MnlModel> models)
    : type_weights_(std::move(type_weights)), models_(std::move(models)) {
  if (models_.empty() || models_.size() != type_weights_.size()) {
    throw InputError("mixture needs one weight per model and at least one");
  }
  CheckNonnegative(type_weights_, "type weight");
  const double total =
      std::accumulate(type_weights_.begin(), type_weights_.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-9) {
    throw InputError("mixture type weights sum to " + std::to_string(total));
  }
  for (std::size_t j = 1; j < models_.size(); ++j) {
    if (models_[j].prices() != models_[0].prices()) {
      throw InputError("mixture type " + std::to_string(j) +
                       " does not share the price vector");
    }
  }
}

double MixtureMnl::Objective(const ElementSet& s) const {
  double total = 0.0;
  for (std::size_t j = 0; j < models_.size(); ++j) {
    total += type_weights_[j] * models_[j].OptimizeUnconstrained(s).revenue;
  }
  return total;
}

ChoiceObjectiveOracle::ChoiceObjectiveOracle(
    std::shared_ptr<const ChoiceModel> model)
    : ValueOracle(model->num_products()), model_(std::move(model)) {}

double ChoiceObjectiveOracle::Evaluate(const ElementSet& s) {
  auto it = memo_.find(s);
  if (it != memo_.end()) return it->second;
  const double value = model_->OptimizeUnconstrained(s).revenue;
  memo_.emplace(s, value);
  return value;
}

MixtureOracle::MixtureOracle(std::shared_ptr<const MixtureMnl> mixture)
    : ValueOracle(mixture->num_products()), mixture_(std::move(mixture)) {}

double MixtureOracle::Evaluate(const ElementSet& s) {
  auto it = memo_.find(s);
  if (it != memo_.end()) return it->second;
  const double value = mixture_->Objective(s);
  memo_.emplace(s, value);
  return value;
}

Order DescendingPriceOrder(const std::vector<double>& prices) {
  return Order(ByDescendingPrice(prices, ElementSet::Full(prices.size())));
}

PriceLadder::PriceLadder(std::vector<double> prices)
    : prices_(std::move(prices)) {
  if (prices_.empty()) throw InputError("price ladder is empty");
  for (std::size_t p = 0; p < prices_.size(); ++p) {
    if (!(prices_[p] > 0.0)) throw InputError("ladder prices must be positive");
    for (std::size_t q = 0; q < p; ++q) {
      if (prices_[q] == prices_[p]) {
        throw InputError("ladder price " + std::to_string(prices_[p]) +
                         " repeats");
      }
    }
  }
}

Element PricingExpansion::Id(std::size_t product,
                             std::size_t price_index) const {
  if (product >= base_products || price_index >= ladder.size()) {
    throw InputError("pricing pair out of range");
  }
  return product * ladder.size() + price_index;
}

std::pair<std::size_t, std::size_t> PricingExpansion::Decode(Element e) const {
  if (e >= size()) throw InputError("expanded element out of range");
  return {e / ladder.size(), e % ladder.size()};
}

PricingExpansion ExpandPricing(std::size_t base_products,
                               const PriceLadder& ladder, std::size_t k) {
  PricingExpansion out;
  out.base_products = base_products;
  out.ladder = ladder.prices();
  const std::size_t n = base_products * ladder.size();
  out.prices.resize(n);
  std::vector<std::size_t> block_of(n);
  for (Element e = 0; e < n; ++e) {
    out.prices[e] = ladder.at(e % ladder.size());
    block_of[e] = e / ladder.size();
  }
  if (ladder.size() == 1) {
    out.matroid = std::make_shared<UniformMatroid>(n, k);
  } else {
    out.matroid = std::make_shared<PartitionMatroid>(
        std::move(block_of), std::vector<std::size_t>(base_products, 1), k);
  }
  return out;
}

MnlModel ExpandMnlPricing(const PricingExpansion& expansion,
                          const std::vector<std::vector<double>>& weights,
                          double outside_weight) {
  if (weights.size() != expansion.base_products) {
    throw InputError("need one weight row per base product");
  }
  std::vector<double> flat;
  flat.reserve(expansion.size());
  for (const auto& row : weights) {
    if (row.size() != expansion.ladder.size()) {
      throw InputError("need one weight per ladder price");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return MnlModel(std::move(flat), outside_weight, expansion.prices);
}

}  // namespace subord
