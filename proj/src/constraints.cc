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

#include "subord/constraints.h"

#include <algorithm>
#include <string>

#include "subord/core.h"
#include "subord/errors.h"

namespace subord {

BudgetConstraint::BudgetConstraint(std::vector<double> budgets, double total)
    : budgets_(std::move(budgets)), total_(total) {
  if (!(total_ >= 0.0)) throw InputError("total budget must be >= 0");
  for (std::size_t i = 0; i < budgets_.size(); ++i) {
    if (!(budgets_[i] >= 0.0)) {
      throw InputError("budget of element " + std::to_string(i) +
                       " must be >= 0");
    }
  }
}

BudgetConstraint BudgetConstraint::Unit(std::size_t n, std::size_t k) {
  return BudgetConstraint(std::vector<double>(n, 1.0), static_cast<double>(k));
}

double BudgetConstraint::Cost(const ElementSet& s) const {
  double cost = 0.0;
  s.ForEach([&](Element e) { cost += budgets_.at(e); });
  return cost;
}

bool BudgetConstraint::Feasible(const ElementSet& s) const {
  return Cost(s) <= total_ + kTolerance;
}

bool Matroid::IsIndependent(const ElementSet& s) const {
  if (s.universe() != ground_size_) {
    throw InputError("independence query on a set of the wrong universe");
  }
  queries_.fetch_add(1);
  return Independent(s);
}

UniformMatroid::UniformMatroid(std::size_t n, std::size_t rank)
    : Matroid(n), rank_(rank) {}

std::size_t UniformMatroid::FullRank() const {
  return std::min(rank_, ground_size());
}

std::string UniformMatroid::Describe() const {
  return "uniform(n=" + std::to_string(ground_size()) +
         ", rank=" + std::to_string(rank_) + ")";
}

PartitionMatroid::PartitionMatroid(std::vector<std::size_t> block_of,
                                   std::vector<std::size_t> capacities,
                                   std::optional<std::size_t> total_cap)
    : Matroid(block_of.size()),
      block_of_(std::move(block_of)),
      capacities_(std::move(capacities)),
      total_cap_(total_cap) {
  for (std::size_t e = 0; e < block_of_.size(); ++e) {
    if (block_of_[e] >= capacities_.size()) {
      throw InputError("element " + std::to_string(e) +
                       " assigned to unknown block " +
                       std::to_string(block_of_[e]));
    }
  }
}

bool PartitionMatroid::Independent(const ElementSet& s) const {
  if (total_cap_ && s.size() > *total_cap_) return false;
  std::vector<std::size_t> used(capacities_.size(), 0);
  bool ok = true;
  s.ForEach([&](Element e) {
    if (++used[block_of_[e]] > capacities_[block_of_[e]]) ok = false;
  });
  return ok;
}

std::size_t PartitionMatroid::FullRank() const {
  std::vector<std::size_t> sizes(capacities_.size(), 0);
  for (std::size_t b : block_of_) ++sizes[b];
  std::size_t rank = 0;
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    rank += std::min(sizes[b], capacities_[b]);
  }
  return total_cap_ ? std::min(rank, *total_cap_) : rank;
}

std::string PartitionMatroid::Describe() const {
  std::string out = "partition(n=" + std::to_string(ground_size()) +
                    ", blocks=" + std::to_string(capacities_.size());
  if (total_cap_) out += ", total=" + std::to_string(*total_cap_);
  return out + ")";
}

std::optional<std::string> AuditBasisExchange(
    const std::vector<ElementSet>& bases) {
  if (bases.empty()) return "a matroid needs at least one basis";
  const std::size_t n = bases.front().universe();
  for (const ElementSet& b : bases) {
    if (b.universe() != n) return "bases over different ground sets";
    if (b.size() != bases.front().size()) return "bases of different sizes";
  }
  auto is_basis = [&](const ElementSet& s) {
    return std::find(bases.begin(), bases.end(), s) != bases.end();
  };
  for (const ElementSet& b1 : bases) {
    for (const ElementSet& b2 : bases) {
      for (Element x : (b1 - b2).ToVector()) {
        bool exchanged = false;
        for (Element y : (b2 - b1).ToVector()) {
          if (is_basis(b1.Without(x).With(y))) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged) {
          return "basis exchange fails for B1=" + b1.ToString() +
                 ", B2=" + b2.ToString() + ", x=" + std::to_string(x);
        }
      }
    }
  }
  return std::nullopt;
}

ExplicitMatroid::ExplicitMatroid(std::size_t n, std::vector<ElementSet> bases)
    : Matroid(n), bases_(std::move(bases)) {
  for (const ElementSet& b : bases_) {
    if (b.universe() != n) throw InputError("basis over the wrong ground set");
  }
  std::sort(bases_.begin(), bases_.end(),
            [](const ElementSet& a, const ElementSet& b) {
              return a.ToVector() < b.ToVector();
            });
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  if (auto violation = AuditBasisExchange(bases_)) {
    throw InputError("not a matroid: " + *violation);
  }
}

bool ExplicitMatroid::Independent(const ElementSet& s) const {
  for (const ElementSet& b : bases_) {
    if (s.IsSubsetOf(b)) return true;
  }
  return false;
}

std::size_t ExplicitMatroid::FullRank() const {
  return bases_.front().size();
}

std::string ExplicitMatroid::Describe() const {
  return "explicit(n=" + std::to_string(ground_size()) +
         ", bases=" + std::to_string(bases_.size()) + ")";
}

std::optional<std::string> AuditMatroidAxioms(const Matroid& m) {
  const std::size_t n = m.ground_size();
  if (n > 12) throw EnumerationCapError("matroid audit supports n <= 12");
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<char> indep(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    indep[mask] = m.IsIndependent(ElementSet::FromMask(n, mask));
  }
  if (!indep[0]) return "empty set is dependent";
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    if (!indep[mask]) continue;
    for (std::size_t e = 0; e < n; ++e) {
      if ((mask >> e & 1) && !indep[mask & ~(1ULL << e)]) {
        return "downward closure fails below " +
               ElementSet::FromMask(n, mask).ToString();
      }
    }
  }
  for (std::uint64_t a = 0; a < count; ++a) {
    if (!indep[a]) continue;
    for (std::uint64_t b = 0; b < count; ++b) {
      if (!indep[b] || __builtin_popcountll(b) <= __builtin_popcountll(a)) {
        continue;
      }
      bool augmented = false;
      for (std::size_t e = 0; e < n && !augmented; ++e) {
        if ((b >> e & 1) && !(a >> e & 1) && indep[a | (1ULL << e)]) {
          augmented = true;
        }
      }
      if (!augmented) {
        return "augmentation fails for A=" +
               ElementSet::FromMask(n, a).ToString() +
               ", B=" + ElementSet::FromMask(n, b).ToString();
      }
    }
  }
  return std::nullopt;
}

ElementSet CircuitOfDependent(const Matroid& m, const ElementSet& s,
                              Element j) {
  ElementSet circuit(s.universe());
  circuit.insert(j);
  const ElementSet with_j = s.With(j);
  s.ForEach([&](Element i) {
    if (m.IsIndependent(with_j.Without(i))) circuit.insert(i);
  });
  return circuit;
}

ElementSet Circuit(const Matroid& m, const ElementSet& s, Element j) {
  if (m.IsIndependent(s.With(j))) {
    throw ContractError("Circuit: S+j is independent, no circuit exists");
  }
  return CircuitOfDependent(m, s, j);
}

std::size_t Rank(const Matroid& m, const ElementSet& s) {
  ElementSet basis(s.universe());
  s.ForEach([&](Element e) {
    if (m.IsIndependent(basis.With(e))) basis.insert(e);
  });
  return basis.size();
}

bool Feasible(const Constraint& c, const ElementSet& s) {
  struct Visitor {
    const ElementSet& s;
    bool operator()(const Unconstrained&) const { return true; }
    bool operator()(const CardinalityConstraint& k) const {
      return k.Feasible(s);
    }
    bool operator()(const BudgetConstraint& b) const { return b.Feasible(s); }
    bool operator()(const std::shared_ptr<const Matroid>& m) const {
      return m->IsIndependent(s);
    }
  };
  return std::visit(Visitor{s}, c);
}

std::string ConstraintKind(const Constraint& c) {
  switch (c.index()) {
    case 0:
      return "unconstrained";
    case 1:
      return "cardinality";
    case 2:
      return "budget";
    default:
      return "matroid";
  }
}

}  // namespace subord
