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

#ifndef SUBORD_CONSTRAINTS_H_
#define SUBORD_CONSTRAINTS_H_

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "subord/element_set.h"

namespace subord {

struct CardinalityConstraint {
  std::size_t k = 0;

  bool Feasible(const ElementSet& s) const { return s.size() <= k; }
};

// Knapsack: feasible(S) iff sum_{i in S} budgets[i] <= total (+ tolerance).
class BudgetConstraint {
 public:
  BudgetConstraint(std::vector<double> budgets, double total);
  // b_i = 1, B = k.
  static BudgetConstraint Unit(std::size_t n, std::size_t k);

  const std::vector<double>& budgets() const { return budgets_; }
  double budget(Element e) const { return budgets_.at(e); }
  double total() const { return total_; }
  std::size_t ground_size() const { return budgets_.size(); }

  double Cost(const ElementSet& s) const;
  bool Feasible(const ElementSet& s) const;

 private:
  std::vector<double> budgets_;
  double total_;
};

// Independence-oracle matroid. Every IsIndependent() call is counted; the
// counter is the only mutable state, so instances can be shared read-only.
class Matroid {
 public:
  explicit Matroid(std::size_t ground_size) : ground_size_(ground_size) {}
  virtual ~Matroid() = default;
  Matroid(const Matroid&) = delete;
  Matroid& operator=(const Matroid&) = delete;

  std::size_t ground_size() const { return ground_size_; }
  bool IsIndependent(const ElementSet& s) const;
  // Rank d of the whole ground set.
  virtual std::size_t FullRank() const = 0;
  virtual std::string Describe() const = 0;

  std::int64_t query_count() const { return queries_.load(); }

 protected:
  virtual bool Independent(const ElementSet& s) const = 0;

 private:
  std::size_t ground_size_;
  mutable std::atomic<std::int64_t> queries_{0};
};

class UniformMatroid : public Matroid {
 public:
  UniformMatroid(std::size_t n, std::size_t rank);
  std::size_t rank_bound() const { return rank_; }
  std::size_t FullRank() const override;
  std::string Describe() const override;

 protected:
  bool Independent(const ElementSet& s) const override {
    return s.size() <= rank_;
  }

 private:
  std::size_t rank_;
};

// At most capacities[b] elements from block b, and optionally at most
// `total_cap` elements overall (a truncated partition matroid).
class PartitionMatroid : public Matroid {
 public:
  PartitionMatroid(std::vector<std::size_t> block_of,
                   std::vector<std::size_t> capacities,
                   std::optional<std::size_t> total_cap = std::nullopt);

  const std::vector<std::size_t>& block_of() const { return block_of_; }
  const std::vector<std::size_t>& capacities() const { return capacities_; }
  std::optional<std::size_t> total_cap() const { return total_cap_; }
  std::size_t FullRank() const override;
  std::string Describe() const override;

 protected:
  bool Independent(const ElementSet& s) const override;

 private:
  std::vector<std::size_t> block_of_;
  std::vector<std::size_t> capacities_;
  std::optional<std::size_t> total_cap_;
};

// Matroid given by its list of bases; a set is independent iff it is
// contained in some basis. Construction audits the basis-exchange axiom and
// throws InputError on violation.
class ExplicitMatroid : public Matroid {
 public:
  ExplicitMatroid(std::size_t n, std::vector<ElementSet> bases);

  const std::vector<ElementSet>& bases() const { return bases_; }
  std::size_t FullRank() const override;
  std::string Describe() const override;

 protected:
  bool Independent(const ElementSet& s) const override;

 private:
  std::vector<ElementSet> bases_;
};

// Returns a description of the first basis-exchange violation, if any.
std::optional<std::string> AuditBasisExchange(
    const std::vector<ElementSet>& bases);

// Exhaustive axiom audit (n <= 12): empty set independent, downward
// closure, augmentation. Returns a description of the first violation.
std::optional<std::string> AuditMatroidAxioms(const Matroid& m);

// Unique circuit of S+j for independent S with S+j dependent, computed as
// {j} u {i in S : S+j-i independent}. Throws ContractError when S+j is
// independent.
ElementSet Circuit(const Matroid& m, const ElementSet& s, Element j);

// Same, but trusts the caller that S+j is dependent (spends |S| queries).
ElementSet CircuitOfDependent(const Matroid& m, const ElementSet& s,
                              Element j);

// Greedy rank via the independence oracle.
std::size_t Rank(const Matroid& m, const ElementSet& s);

struct Unconstrained {};

using Constraint =
    std::variant<Unconstrained, CardinalityConstraint, BudgetConstraint,
                 std::shared_ptr<const Matroid>>;

bool Feasible(const Constraint& c, const ElementSet& s);
std::string ConstraintKind(const Constraint& c);

}  // namespace subord

#endif  // SUBORD_CONSTRAINTS_H_
