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

#ifndef SUBORD_INSTANCES_H_
#define SUBORD_INSTANCES_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subord/assortment.h"
#include "subord/constraints.h"
#include "subord/core.h"
#include "subord/element_set.h"

namespace subord {

enum class InstanceKind {
  kExplicitFunction,
  kMnl,
  kMarkov,
  kMixture,
  kHiddenSet,
  kExample1,
  kCoverage,
};

std::string_view InstanceKindName(InstanceKind kind);
InstanceKind ParseInstanceKind(std::string_view name);

struct Example1Params {
  std::size_t k = 0;
  double eps_f = 0.0;
};

struct HiddenSetParams {
  std::size_t n1 = 0;
  std::size_t k1 = 0;
  std::size_t k2 = 0;
  std::size_t r = 0;
  std::uint64_t seed = 0;
};

// Weighted coverage: element e covers items covers[e].
struct CoverageParams {
  std::vector<double> item_weights;
  std::vector<std::vector<std::size_t>> covers;
};

struct Instance {
  InstanceKind kind = InstanceKind::kExplicitFunction;
  std::string id;

  std::vector<double> table;  // explicit-function, indexed by bit mask
  std::shared_ptr<const MnlModel> mnl;
  std::shared_ptr<const MarkovModel> markov;
  std::shared_ptr<const MixtureMnl> mixture;
  Example1Params example1;
  HiddenSetParams hidden;
  ElementSet planted;  // hidden-set A1, derived from the seed
  CoverageParams coverage;

  Constraint constraint = Unconstrained{};
  std::optional<Order> order;

  std::size_t ground_size() const;
  // The choice model for mnl and markov instances, null otherwise.
  std::shared_ptr<const ChoiceModel> choice_model() const;
  std::unique_ptr<ValueOracle> MakeOracle() const;
  // Declared order if any; otherwise descending price for choice models and
  // mixtures, natural indexing for everything else.
  Order DefaultOrder() const;
};

// Good elements 0..k-1, poor elements k..2k-1, special element 2k. The
// special element is worth 1 + eps_f alone and pairs badly with good ones.
Instance GenExample1(std::size_t k, double eps_f);

// Throws InputError unless n1 > k1 > k2 >= 1 and r < k1. Elements 0..n1-1
// form N1, the next k2 form N2.
Instance GenHiddenSet(std::size_t n1, std::size_t k1, std::size_t k2,
                      std::size_t r, std::uint64_t seed);
double HiddenSetValue(const HiddenSetParams& params, const ElementSet& planted,
                      const ElementSet& s);

Instance GenRandomSubmodular(std::size_t n, std::uint64_t seed);
Instance GenRandomMnl(std::size_t n, std::uint64_t seed);
Instance GenRandomMarkov(std::size_t n, std::uint64_t seed);
Instance GenMarkov4Item();
Instance GenRandomMixture(std::size_t n, std::size_t types,
                          std::uint64_t seed);

// JSON text format. Parse errors carry the offending field and, for syntax
// errors, the line and column.
Instance ParseInstance(std::string_view text);
std::string SerializeInstance(const Instance& instance);
Instance LoadInstance(const std::string& path);
void SaveInstance(const Instance& instance, const std::string& path);

}  // namespace subord

#endif  // SUBORD_INSTANCES_H_
