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

#include "subord/instances.h"

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "subord/errors.h"

namespace subord {
namespace {

using nlohmann::json;

constexpr std::size_t kMaxExplicitN = 16;

std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  std::mt19937_64 rng(seq);
  return rng();
}

ElementSet SamplePlanted(const HiddenSetParams& p) {
  std::mt19937_64 rng(MixSeed(p.seed, 1));
  std::vector<Element> n1(p.n1);
  std::iota(n1.begin(), n1.end(), 0);
  std::shuffle(n1.begin(), n1.end(), rng);
  n1.resize(p.k1);
  return ElementSet(p.n1 + p.k2, n1);
}

template <typename T>
T Field(const json& j, const char* name) {
  if (!j.contains(name)) {
    throw ParseError(std::string("missing field '") + name + "'");
  }
  try {
    return j.at(name).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field '") + name + "': " + e.what());
  }
}

// Runs `build`, turning validation errors into parse errors for `field`.
template <typename Fn>
auto Validated(const char* field, Fn&& build) {
  try {
    return build();
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(std::string("field '") + field + "': " + e.what());
  }
}

json ConstraintToJson(const Constraint& c) {
  if (std::holds_alternative<Unconstrained>(c)) return nullptr;
  if (const auto* k = std::get_if<CardinalityConstraint>(&c)) {
    return {{"type", "cardinality"}, {"k", k->k}};
  }
  if (const auto* b = std::get_if<BudgetConstraint>(&c)) {
    return {{"type", "budget"}, {"budgets", b->budgets()}, {"total", b->total()}};
  }
  const auto& m = std::get<std::shared_ptr<const Matroid>>(c);
  if (const auto* u = dynamic_cast<const UniformMatroid*>(m.get())) {
    return {{"type", "matroid"},
            {"matroid", "uniform"},
            {"n", u->ground_size()},
            {"rank", u->rank_bound()}};
  }
  if (const auto* p = dynamic_cast<const PartitionMatroid*>(m.get())) {
    json out = {{"type", "matroid"},
                {"matroid", "partition"},
                {"blocks", p->block_of()},
                {"capacities", p->capacities()}};
    if (p->total_cap()) out["total_cap"] = *p->total_cap();
    return out;
  }
  const auto& e = dynamic_cast<const ExplicitMatroid&>(*m);
  json bases = json::array();
  for (const ElementSet& b : e.bases()) bases.push_back(b.ToVector());
  return {{"type", "matroid"},
          {"matroid", "explicit"},
          {"n", e.ground_size()},
          {"bases", bases}};
}

Constraint ConstraintFromJson(const json& j, std::size_t n) {
  if (j.is_null()) return Unconstrained{};
  const auto type = Field<std::string>(j, "type");
  return Validated("constraint", [&]() -> Constraint {
    if (type == "cardinality") {
      return CardinalityConstraint{Field<std::size_t>(j, "k")};
    }
    if (type == "budget") {
      auto budgets = Field<std::vector<double>>(j, "budgets");
      if (budgets.size() != n) {
        throw ParseError("field 'budgets': expected " + std::to_string(n) +
                         " entries, got " + std::to_string(budgets.size()));
      }
      return BudgetConstraint(std::move(budgets), Field<double>(j, "total"));
    }
    if (type == "matroid") {
      const auto kind = Field<std::string>(j, "matroid");
      if (kind == "uniform") {
        return std::shared_ptr<const Matroid>(
            std::make_shared<UniformMatroid>(n, Field<std::size_t>(j, "rank")));
      }
      if (kind == "partition") {
        auto blocks = Field<std::vector<std::size_t>>(j, "blocks");
        if (blocks.size() != n) {
          throw ParseError("field 'blocks': expected " + std::to_string(n) +
                           " entries");
        }
        std::optional<std::size_t> total;
        if (j.contains("total_cap")) total = Field<std::size_t>(j, "total_cap");
        return std::shared_ptr<const Matroid>(std::make_shared<PartitionMatroid>(
            std::move(blocks), Field<std::vector<std::size_t>>(j, "capacities"),
            total));
      }
      if (kind == "explicit") {
        std::vector<ElementSet> bases;
        for (const auto& b :
             Field<std::vector<std::vector<std::size_t>>>(j, "bases")) {
          bases.emplace_back(n, b);
        }
        return std::shared_ptr<const Matroid>(
            std::make_shared<ExplicitMatroid>(n, std::move(bases)));
      }
      throw ParseError("field 'matroid': unknown matroid kind '" + kind + "'");
    }
    throw ParseError("field 'type': unknown constraint type '" + type + "'");
  });
}

}  // namespace

std::string_view InstanceKindName(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kExplicitFunction:
      return "explicit-function";
    case InstanceKind::kMnl:
      return "mnl";
    case InstanceKind::kMarkov:
      return "markov";
    case InstanceKind::kMixture:
      return "mixture";
    case InstanceKind::kHiddenSet:
      return "hidden-set";
    case InstanceKind::kExample1:
      return "example1";
    case InstanceKind::kCoverage:
      return "coverage";
  }
  return "unknown";
}

InstanceKind ParseInstanceKind(std::string_view name) {
  for (InstanceKind k :
       {InstanceKind::kExplicitFunction, InstanceKind::kMnl,
        InstanceKind::kMarkov, InstanceKind::kMixture, InstanceKind::kHiddenSet,
        InstanceKind::kExample1, InstanceKind::kCoverage}) {
    if (InstanceKindName(k) == name) return k;
  }
  throw ParseError("field 'kind': unknown instance kind '" + std::string(name) +
                   "'");
}

std::size_t Instance::ground_size() const {
  switch (kind) {
    case InstanceKind::kExplicitFunction:
      return static_cast<std::size_t>(std::countr_zero(table.size()));
    case InstanceKind::kMnl:
      return mnl->num_products();
    case InstanceKind::kMarkov:
      return markov->num_products();
    case InstanceKind::kMixture:
      return mixture->num_products();
    case InstanceKind::kHiddenSet:
      return hidden.n1 + hidden.k2;
    case InstanceKind::kExample1:
      return 2 * example1.k + 1;
    case InstanceKind::kCoverage:
      return coverage.covers.size();
  }
  return 0;
}

std::shared_ptr<const ChoiceModel> Instance::choice_model() const {
  if (kind == InstanceKind::kMnl) return mnl;
  if (kind == InstanceKind::kMarkov) return markov;
  return nullptr;
}

std::unique_ptr<ValueOracle> Instance::MakeOracle() const {
  const std::size_t n = ground_size();
  switch (kind) {
    case InstanceKind::kExplicitFunction:
      return std::make_unique<TableOracle>(n, table);
    case InstanceKind::kMnl:
    case InstanceKind::kMarkov:
      return std::make_unique<ChoiceObjectiveOracle>(choice_model());
    case InstanceKind::kMixture:
      return std::make_unique<MixtureOracle>(mixture);
    case InstanceKind::kHiddenSet:
      return std::make_unique<FunctionOracle>(
          n, [params = hidden, planted = planted](const ElementSet& s) {
            return HiddenSetValue(params, planted, s);
          });
    case InstanceKind::kExample1:
      return std::make_unique<FunctionOracle>(
          n, [k = example1.k, eps = example1.eps_f](const ElementSet& s) {
            double good = 0.0;
            double poor = 0.0;
            s.ForEach([&](Element e) {
              if (e < k) {
                good += 1.0;
              } else if (e < 2 * k) {
                poor += 1.0;
              }
            });
            const double head = s.contains(2 * k) ? std::max(good, 1.0 + eps)
                                                  : good;
            return head + eps * poor;
          });
    case InstanceKind::kCoverage:
      return std::make_unique<FunctionOracle>(
          n, [params = coverage](const ElementSet& s) {
            std::vector<bool> hit(params.item_weights.size(), false);
            double total = 0.0;
            s.ForEach([&](Element e) {
              for (std::size_t item : params.covers[e]) {
                if (!hit[item]) {
                  hit[item] = true;
                  total += params.item_weights[item];
                }
              }
            });
            return total;
          });
  }
  throw InternalError("unhandled instance kind");
}

Order Instance::DefaultOrder() const {
  if (order) return *order;
  switch (kind) {
    case InstanceKind::kMnl:
    case InstanceKind::kMarkov:
      return DescendingPriceOrder(choice_model()->prices());
    case InstanceKind::kMixture:
      return DescendingPriceOrder(mixture->prices());
    default:
      return Order::Identity(ground_size());
  }
}

Instance GenExample1(std::size_t k, double eps_f) {
  if (k < 2) throw InputError("example1 needs k >= 2");
  if (!(eps_f > 0.0 && eps_f < 1.0)) {
    throw InputError("example1 needs 0 < eps_f < 1");
  }
  Instance out;
  out.kind = InstanceKind::kExample1;
  out.id = "example1-k" + std::to_string(k);
  out.example1 = {k, eps_f};
  out.constraint = CardinalityConstraint{k};
  return out;
}

double HiddenSetValue(const HiddenSetParams& p, const ElementSet& planted,
                      const ElementSet& s) {
  double outside = 0.0;  // |S1 \ A1|
  double inside = 0.0;   // |S1 n A1|
  double tail = 0.0;     // |S2|
  s.ForEach([&](Element e) {
    if (e >= p.n1) {
      tail += 1.0;
    } else if (planted.contains(e)) {
      inside += 1.0;
    } else {
      outside += 1.0;
    }
  });
  const double k1 = static_cast<double>(p.k1);
  const double alpha = k1 / static_cast<double>(p.k2);
  const double head = std::min(outside + inside, 2.0 * k1);
  const double used =
      std::min(1.0, (outside + std::min(static_cast<double>(p.r), inside)) / k1);
  return head + alpha * tail * (1.0 - used);
}

Instance GenHiddenSet(std::size_t n1, std::size_t k1, std::size_t k2,
                      std::size_t r, std::uint64_t seed) {
  if (!(n1 > k1 && k1 > k2 && k2 >= 1)) {
    throw InputError("hidden-set needs n1 > k1 > k2 >= 1");
  }
  if (r >= k1) throw InputError("hidden-set needs r < k1");
  Instance out;
  out.kind = InstanceKind::kHiddenSet;
  out.id = "hidden-set-" + std::to_string(n1) + "-" + std::to_string(k1) +
           "-" + std::to_string(k2) + "-" + std::to_string(r);
  out.hidden = {n1, k1, k2, r, seed};
  out.planted = SamplePlanted(out.hidden);
  out.constraint = CardinalityConstraint{k1 + k2};
  return out;
}

Instance GenRandomSubmodular(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw InputError("need n >= 1");
  std::mt19937_64 rng(MixSeed(seed, 2));
  const std::size_t items = 2 * n;
  std::uniform_real_distribution<double> weight(0.5, 2.0);
  std::uniform_int_distribution<std::size_t> pick(0, items - 1);
  std::uniform_int_distribution<std::size_t> count(1, 3);
  Instance out;
  out.kind = InstanceKind::kCoverage;
  out.id = "coverage-" + std::to_string(n) + "-" + std::to_string(seed);
  out.coverage.item_weights.resize(items);
  for (double& w : out.coverage.item_weights) w = weight(rng);
  out.coverage.covers.resize(n);
  for (auto& cover : out.coverage.covers) {
    const std::size_t c = count(rng);
    while (cover.size() < c) {
      const std::size_t item = pick(rng);
      if (std::find(cover.begin(), cover.end(), item) == cover.end()) {
        cover.push_back(item);
      }
    }
    std::sort(cover.begin(), cover.end());
  }
  return out;
}

Instance GenRandomMnl(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw InputError("need n >= 1");
  std::mt19937_64 rng(MixSeed(seed, 3));
  std::uniform_real_distribution<double> weight(0.1, 2.0);
  std::uniform_real_distribution<double> price(1.0, 10.0);
  std::vector<double> v(n);
  std::vector<double> r(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = weight(rng);
    r[i] = price(rng);
  }
  Instance out;
  out.kind = InstanceKind::kMnl;
  out.id = "mnl-" + std::to_string(n) + "-" + std::to_string(seed);
  out.mnl = std::make_shared<MnlModel>(std::move(v), weight(rng), std::move(r));
  return out;
}

Instance GenRandomMarkov(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw InputError("need n >= 1");
  std::mt19937_64 rng(MixSeed(seed, 4));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> exit(0.1, 0.5);
  std::uniform_real_distribution<double> price(1.0, 10.0);
  std::vector<double> arrival(n);
  for (double& a : arrival) a = unit(rng) + 1e-3;
  const double total = std::accumulate(arrival.begin(), arrival.end(), 0.0);
  for (double& a : arrival) a /= total;
  std::vector<std::vector<double>> rho(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    const double stay = 1.0 - exit(rng);
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) row += rho[i][j] = unit(rng) + 1e-3;
    }
    for (double& x : rho[i]) x = row > 0.0 ? x * stay / row : 0.0;
  }
  std::vector<double> r(n);
  for (double& x : r) x = price(rng);
  Instance out;
  out.kind = InstanceKind::kMarkov;
  out.id = "markov-" + std::to_string(n) + "-" + std::to_string(seed);
  out.markov = std::make_shared<MarkovModel>(std::move(arrival), std::move(rho),
                                             std::move(r));
  return out;
}

Instance GenMarkov4Item() {
  const double third = 1.0 / 3.0;
  Instance out;
  out.kind = InstanceKind::kMarkov;
  out.id = "markov4";
  out.markov = std::make_shared<MarkovModel>(
      std::vector<double>{0.0, 1.0, 0.0, 0.0},
      std::vector<std::vector<double>>{{0.0, 0.0, 0.0, 0.0},
                                       {third, 0.0, third, third},
                                       {0.0, 0.0, 0.0, 0.0},
                                       {0.0, 0.0, 0.0, 0.0}},
      std::vector<double>{8.0, 4.0, 4.0, 2.0});
  return out;
}

Instance GenRandomMixture(std::size_t n, std::size_t types,
                          std::uint64_t seed) {
  if (n < 1 || types < 1) throw InputError("need n >= 1 and types >= 1");
  std::mt19937_64 rng(MixSeed(seed, 5));
  std::uniform_real_distribution<double> weight(0.1, 2.0);
  std::uniform_real_distribution<double> price(1.0, 10.0);
  std::vector<double> r(n);
  for (double& x : r) x = price(rng);
  std::vector<double> alpha(types);
  for (double& a : alpha) a = weight(rng);
  const double total = std::accumulate(alpha.begin(), alpha.end(), 0.0);
  for (double& a : alpha) a /= total;
  std::vector<MnlModel> models;
  for (std::size_t t = 0; t < types; ++t) {
    std::vector<double> v(n);
    for (double& x : v) x = weight(rng);
    models.emplace_back(std::move(v), weight(rng), r);
  }
  Instance out;
  out.kind = InstanceKind::kMixture;
  out.id = "mixture-" + std::to_string(n) + "-" + std::to_string(seed);
  out.mixture = std::make_shared<MixtureMnl>(std::move(alpha), std::move(models));
  return out;
}

Instance ParseInstance(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed instance: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  Instance out;
  out.kind = ParseInstanceKind(Field<std::string>(j, "kind"));
  if (j.contains("id")) out.id = Field<std::string>(j, "id");

  switch (out.kind) {
    case InstanceKind::kExplicitFunction: {
      const auto n = Field<std::size_t>(j, "n");
      if (n > kMaxExplicitN) {
        throw ParseError("field 'n': explicit functions support n <= " +
                         std::to_string(kMaxExplicitN));
      }
      out.table = Field<std::vector<double>>(j, "values");
      if (out.table.size() != (std::size_t{1} << n)) {
        throw ParseError("field 'values': expected 2^n = " +
                         std::to_string(std::size_t{1} << n) + " entries, got " +
                         std::to_string(out.table.size()));
      }
      Validated("values", [&] { return TableOracle(n, out.table).ground_size(); });
      break;
    }
    case InstanceKind::kMnl:
      out.mnl = Validated("weights", [&] {
        return std::make_shared<MnlModel>(Field<std::vector<double>>(j, "weights"),
                                          Field<double>(j, "outside_weight"),
                                          Field<std::vector<double>>(j, "prices"));
      });
      break;
    case InstanceKind::kMarkov:
      out.markov = Validated("transition", [&] {
        return std::make_shared<MarkovModel>(
            Field<std::vector<double>>(j, "arrival"),
            Field<std::vector<std::vector<double>>>(j, "transition"),
            Field<std::vector<double>>(j, "prices"));
      });
      break;
    case InstanceKind::kMixture: {
      const auto prices = Field<std::vector<double>>(j, "prices");
      if (!j.contains("models") || !j.at("models").is_array()) {
        throw ParseError("field 'models': expected an array");
      }
      out.mixture = Validated("models", [&] {
        std::vector<MnlModel> models;
        for (const json& m : j.at("models")) {
          models.emplace_back(Field<std::vector<double>>(m, "weights"),
                              Field<double>(m, "outside_weight"), prices);
        }
        return std::make_shared<MixtureMnl>(
            Field<std::vector<double>>(j, "type_weights"), std::move(models));
      });
      break;
    }
    case InstanceKind::kHiddenSet:
      out = Validated("n1", [&] {
        return GenHiddenSet(Field<std::size_t>(j, "n1"), Field<std::size_t>(j, "k1"),
                            Field<std::size_t>(j, "k2"), Field<std::size_t>(j, "r"),
                            Field<std::uint64_t>(j, "seed"));
      });
      out.constraint = Unconstrained{};
      if (j.contains("id")) out.id = Field<std::string>(j, "id");
      break;
    case InstanceKind::kExample1:
      out = Validated("k", [&] {
        return GenExample1(Field<std::size_t>(j, "k"), Field<double>(j, "eps_f"));
      });
      out.constraint = Unconstrained{};
      if (j.contains("id")) out.id = Field<std::string>(j, "id");
      break;
    case InstanceKind::kCoverage: {
      out.coverage.item_weights = Field<std::vector<double>>(j, "item_weights");
      out.coverage.covers =
          Field<std::vector<std::vector<std::size_t>>>(j, "covers");
      for (std::size_t e = 0; e < out.coverage.covers.size(); ++e) {
        for (std::size_t item : out.coverage.covers[e]) {
          if (item >= out.coverage.item_weights.size()) {
            throw ParseError("field 'covers': element " + std::to_string(e) +
                             " names unknown item " + std::to_string(item));
          }
        }
      }
      for (double w : out.coverage.item_weights) {
        if (!(w >= 0.0)) throw ParseError("field 'item_weights': negative weight");
      }
      break;
    }
  }

  const std::size_t n = out.ground_size();
  out.constraint = ConstraintFromJson(
      j.contains("constraint") ? j.at("constraint") : json(nullptr), n);
  if (const auto* m =
          std::get_if<std::shared_ptr<const Matroid>>(&out.constraint)) {
    if ((*m)->ground_size() != n) {
      throw ParseError("field 'constraint': matroid ground set has " +
                       std::to_string((*m)->ground_size()) + " elements, expected " +
                       std::to_string(n));
    }
  }
  if (j.contains("order") && !j.at("order").is_null()) {
    auto perm = Field<std::vector<std::size_t>>(j, "order");
    if (perm.size() != n) {
      throw ParseError("field 'order': expected " + std::to_string(n) +
                       " entries");
    }
    out.order = Validated("order", [&] { return Order(std::move(perm)); });
  }
  return out;
}

std::string SerializeInstance(const Instance& in) {
  json j;
  j["kind"] = InstanceKindName(in.kind);
  if (!in.id.empty()) j["id"] = in.id;
  switch (in.kind) {
    case InstanceKind::kExplicitFunction:
      j["n"] = in.ground_size();
      j["values"] = in.table;
      break;
    case InstanceKind::kMnl:
      j["weights"] = in.mnl->weights();
      j["outside_weight"] = in.mnl->outside_weight();
      j["prices"] = in.mnl->prices();
      break;
    case InstanceKind::kMarkov:
      j["arrival"] = in.markov->arrival();
      j["transition"] = in.markov->transition();
      j["prices"] = in.markov->prices();
      break;
    case InstanceKind::kMixture: {
      j["prices"] = in.mixture->prices();
      j["type_weights"] = in.mixture->type_weights();
      json models = json::array();
      for (const MnlModel& m : in.mixture->models()) {
        models.push_back(
            {{"weights", m.weights()}, {"outside_weight", m.outside_weight()}});
      }
      j["models"] = models;
      break;
    }
    case InstanceKind::kHiddenSet:
      j["n1"] = in.hidden.n1;
      j["k1"] = in.hidden.k1;
      j["k2"] = in.hidden.k2;
      j["r"] = in.hidden.r;
      j["seed"] = in.hidden.seed;
      break;
    case InstanceKind::kExample1:
      j["k"] = in.example1.k;
      j["eps_f"] = in.example1.eps_f;
      break;
    case InstanceKind::kCoverage:
      j["item_weights"] = in.coverage.item_weights;
      j["covers"] = in.coverage.covers;
      break;
  }
  const json constraint = ConstraintToJson(in.constraint);
  if (!constraint.is_null()) j["constraint"] = constraint;
  if (in.order) {
    j["order"] = std::vector<Element>(in.order->perm().begin(),
                                      in.order->perm().end());
  }
  return j.dump(2) + "\n";
}

Instance LoadInstance(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open instance file '" + path + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  try {
    return ParseInstance(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void SaveInstance(const Instance& instance, const std::string& path) {
  std::ofstream file(path);
  if (!file) throw ParseError("cannot write instance file '" + path + "'");
  file << SerializeInstance(instance);
}

}  // namespace subord
