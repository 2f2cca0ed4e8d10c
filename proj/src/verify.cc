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

#include "subord/verify.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>

#include "subord/errors.h"

namespace subord {
namespace {

using Mask = std::uint64_t;

void CheckCap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw EnumerationCapError(std::string(what) + " enumerates at most n = " +
                              std::to_string(cap) + " elements, got n = " +
                              std::to_string(n));
  }
}

// Rank of every element and, per mask, the largest rank it holds (-1 for
// the empty set).
struct RankTable {
  std::vector<std::size_t> rank;

  explicit RankTable(const Order& order) : rank(order.size()) {
    for (std::size_t p = 0; p < order.size(); ++p) rank[order.at(p)] = p;
  }
  int Rightmost(Mask m) const {
    int best = -1;
    for (std::size_t e = 0; m != 0; ++e, m >>= 1) {
      if (m & 1) best = std::max(best, static_cast<int>(rank[e]));
    }
    return best;
  }
  int Leftmost(Mask m) const {
    int best = static_cast<int>(rank.size());
    for (std::size_t e = 0; m != 0; ++e, m >>= 1) {
      if (m & 1) best = std::min(best, static_cast<int>(rank[e]));
    }
    return best;
  }
};

CheckResult ScanOrder(ValueOracle& f, const Order& order, bool nested_only,
                      const char* property) {
  const std::size_t n = f.ground_size();
  CheckCap(n, kMaxOrderN, property);
  if (order.size() != n) {
    throw InputError("order length does not match the ground set");
  }
  const std::vector<double> t = TabulateValues(f, kMaxOrderN);
  const RankTable ranks(order);
  const Mask count = Mask{1} << n;
  for (Mask a = 0; a < count; ++a) {
    const int right = ranks.Rightmost(a);
    for (std::size_t pos = static_cast<std::size_t>(right + 1); pos < n;
         ++pos) {
      const Mask i = Mask{1} << order.at(pos);
      const double gain_a = t[a | i] - t[a];
      for (Mask b = a;; b = (b - 1) & a) {
        const bool nested =
            b == a || ranks.Leftmost(a & ~b) > ranks.Rightmost(b);
        if (!nested_only || nested) {
          const double gain_b = t[b | i] - t[b];
          if (gain_a > gain_b + kTolerance) {
            return ViolationWitness{property, ElementSet::FromMask(n, a),
                                    ElementSet::FromMask(n, b),
                                    ElementSet::FromMask(n, i),
                                    gain_a - gain_b};
          }
        }
        if (b == 0) break;
      }
    }
  }
  return std::nullopt;
}

void BruteForceSearch(ValueOracle& f, const Constraint& constraint,
                      std::size_t next, ElementSet& current,
                      BruteForceResult& best) {
  for (std::size_t e = next; e < f.ground_size(); ++e) {
    current.insert(e);
    if (Feasible(constraint, current)) {
      const double value = f.Value(current);
      if (value > best.value + kTolerance) best = {current, value};
      BruteForceSearch(f, constraint, e + 1, current, best);
    }
    current.erase(e);
  }
}

}  // namespace

std::string ViolationWitness::ToString() const {
  std::ostringstream out;
  out << property << " violated: A=" << a.ToString() << " B=" << b.ToString()
      << " C=" << c.ToString() << " slack=" << slack;
  return out.str();
}

std::vector<double> TabulateValues(ValueOracle& f, std::size_t cap) {
  const std::size_t n = f.ground_size();
  CheckCap(n, cap, "value table");
  const Mask count = Mask{1} << n;
  std::vector<double> values(count);
  for (Mask m = 0; m < count; ++m) {
    values[m] = f.Value(ElementSet::FromMask(n, m));
  }
  return values;
}

CheckResult CheckMonotone(ValueOracle& f) {
  const std::size_t n = f.ground_size();
  const std::vector<double> t = TabulateValues(f, kMaxPropertyN);
  const Mask count = Mask{1} << n;
  for (Mask a = 0; a < count; ++a) {
    for (Mask b = a;; b = (b - 1) & a) {
      if (t[b] > t[a] + kTolerance) {
        return ViolationWitness{"monotone", ElementSet::FromMask(n, b),
                                ElementSet::FromMask(n, a), ElementSet(n),
                                t[b] - t[a]};
      }
      if (b == 0) break;
    }
  }
  return std::nullopt;
}

CheckResult CheckSubadditive(ValueOracle& f) {
  const std::size_t n = f.ground_size();
  const std::vector<double> t = TabulateValues(f, kMaxPropertyN);
  const Mask count = Mask{1} << n;
  for (Mask a = 0; a < count; ++a) {
    for (Mask b = 0; b < count; ++b) {
      const double excess = t[a | b] - t[a] - t[b];
      if (excess > kTolerance) {
        return ViolationWitness{"subadditive", ElementSet::FromMask(n, a),
                                ElementSet::FromMask(n, b),
                                ElementSet::FromMask(n, a | b), excess};
      }
    }
  }
  return std::nullopt;
}

CheckResult CheckStrongOrder(ValueOracle& f, const Order& order) {
  // Nested violations first: they are the most informative witnesses.
  CheckResult weak = ScanOrder(f, order, true, "strong-order");
  if (weak) return weak;
  return ScanOrder(f, order, false, "strong-order");
}

CheckResult CheckWeakOrder(ValueOracle& f, const Order& order) {
  return ScanOrder(f, order, true, "weak-order");
}

bool IsNested(const Order& order, const ElementSet& b, const ElementSet& a) {
  if (!b.IsSubsetOf(a)) return false;
  const ElementSet diff = a - b;
  if (diff.empty() || b.empty()) return true;
  return order.rank(order.Leftmost(diff)) > order.rank(order.Rightmost(b));
}

BruteForceResult BruteForceOpt(ValueOracle& f, const Constraint& constraint) {
  const std::size_t n = f.ground_size();
  CheckCap(n,
           std::holds_alternative<std::shared_ptr<const Matroid>>(constraint)
               ? kMaxBruteForceMatroidN
               : kMaxBruteForceN,
           "brute-force optimum");
  BruteForceResult best{ElementSet(n), f.Value(ElementSet(n))};
  ElementSet current(n);
  BruteForceSearch(f, constraint, 0, current, best);
  return best;
}

void ValidateInterleavedPartition(const Order& order, const ElementSet& a,
                                  const InterleavedPartition& part) {
  const std::size_t m = part.odd.size();
  if (m == 0 || part.even.size() != m || part.sigma.size() != m) {
    throw InputError("interleaved partition needs m >= 1 blocks of each kind "
                     "and a permutation of size m");
  }
  std::vector<bool> seen(m, false);
  for (std::size_t s : part.sigma) {
    if (s >= m || seen[s]) throw InputError("sigma is not a permutation");
    seen[s] = true;
  }
  ElementSet covered(a.universe());
  int last_rank = -1;
  for (std::size_t l = 0; l < m; ++l) {
    for (const ElementSet* block : {&part.odd[l], &part.even[l]}) {
      if (block->universe() != a.universe()) {
        throw InputError("partition block has the wrong universe");
      }
      if (block->Intersects(covered)) {
        throw InputError("partition blocks overlap");
      }
      covered |= *block;
      if (block->empty()) continue;
      if (static_cast<int>(order.rank(order.Leftmost(*block))) <= last_rank) {
        throw InputError("partition blocks cross in the order at block " +
                         block->ToString());
      }
      last_rank = static_cast<int>(order.rank(order.Rightmost(*block)));
    }
  }
  if (!(covered == a)) {
    throw InputError("partition blocks do not cover the set exactly");
  }
}

InterleavedPartition RandomInterleavedPartition(const Order& order,
                                                const ElementSet& a,
                                                std::mt19937_64& rng) {
  std::vector<Element> elements = a.ToVector();
  std::sort(elements.begin(), elements.end(), [&](Element x, Element y) {
    return order.rank(x) < order.rank(y);
  });
  const std::size_t m = std::uniform_int_distribution<std::size_t>(
      1, std::max<std::size_t>(1, elements.size()))(rng);
  std::uniform_int_distribution<std::size_t> cut(0, elements.size());
  std::vector<std::size_t> cuts(2 * m - 1);
  for (std::size_t& c : cuts) c = cut(rng);
  std::sort(cuts.begin(), cuts.end());
  cuts.insert(cuts.begin(), 0);
  cuts.push_back(elements.size());

  InterleavedPartition part;
  for (std::size_t block = 0; block < 2 * m; ++block) {
    ElementSet s(a.universe());
    for (std::size_t i = cuts[block]; i < cuts[block + 1]; ++i) {
      s.insert(elements[i]);
    }
    (block % 2 == 0 ? part.odd : part.even).push_back(std::move(s));
  }
  part.sigma.resize(m);
  std::iota(part.sigma.begin(), part.sigma.end(), 0);
  std::shuffle(part.sigma.begin(), part.sigma.end(), rng);
  return part;
}

InterleavedBound CheckInterleavedBound(ValueOracle& f, const Order& order,
                                       const ElementSet& a,
                                       const InterleavedPartition& part) {
  ValidateInterleavedPartition(order, a, part);
  const std::size_t n = a.universe();
  const std::size_t m = part.size();
  InterleavedBound out;
  out.lhs = f.Value(a);
  ElementSet prefix_even(n);  // E(l - 1)
  for (std::size_t l = 0; l < m; ++l) {
    ElementSet left(n);  // L_sigma(l)
    for (std::size_t j = 0; j < l; ++j) {
      if (part.sigma[j] >= part.sigma[l]) left |= part.odd[j];
    }
    const ElementSet base = left | prefix_even;
    out.rhs += f.Value(base | part.odd[l]) - f.Value(base);
    prefix_even |= part.even[l];
  }
  out.rhs += f.Value(prefix_even);
  out.holds = out.lhs <= out.rhs + kTolerance;
  return out;
}

CheckResult CheckCompatibility(const ChoiceModel& model,
                               CompatibilityOrderForm form) {
  const std::size_t n = model.num_products();
  CheckCap(n, kMaxCompatibilityN, "compatibility check");
  const Mask count = Mask{1} << n;
  std::vector<double> r(count);
  for (Mask m = 0; m < count; ++m) {
    r[m] = model.Revenue(ElementSet::FromMask(n, m));
  }
  const Mask opt =
      model.OptimizeUnconstrainedMaximal(ElementSet::Full(n)).products.ToMask();
  for (Mask a = opt;; a = (a - 1) & opt) {
    for (Mask c = 0; c < count; ++c) {
      const double gain = r[a | c] - r[c];
      if (gain < -kTolerance) {
        return ViolationWitness{"compatibility-nonnegative",
                                ElementSet::FromMask(n, a), ElementSet(n),
                                ElementSet::FromMask(n, c), -gain};
      }
    }
    if (a == 0) break;
  }
  for (Mask a = opt;; a = (a - 1) & opt) {
    for (Mask b = a;; b = (b - 1) & a) {
      for (Mask c = 0; c < count; ++c) {
        double gain_a = r[c | a] - r[a];
        double gain_b = r[c | b] - r[b];
        if (form == CompatibilityOrderForm::kBestSubset) {
          for (Mask x = c; x != 0; x = (x - 1) & c) {
            gain_a = std::max(gain_a, r[x | a] - r[a]);
            gain_b = std::max(gain_b, r[x | b] - r[b]);
          }
          gain_a = std::max(gain_a, 0.0);
          gain_b = std::max(gain_b, 0.0);
        }
        const double excess = gain_a - gain_b;
        if (excess > kTolerance) {
          return ViolationWitness{"compatibility-order",
                                  ElementSet::FromMask(n, a),
                                  ElementSet::FromMask(n, b),
                                  ElementSet::FromMask(n, c), excess};
        }
      }
      if (b == 0) break;
    }
    if (a == 0) break;
  }
  return std::nullopt;
}

CheckResult CheckSubstitutable(const ChoiceModel& model) {
  const std::size_t n = model.num_products();
  CheckCap(n, kMaxSubstitutableN, "substitutability check");
  const Mask count = Mask{1} << n;
  for (Mask s = 1; s < count; ++s) {
    const ElementSet set = ElementSet::FromMask(n, s);
    for (Element j = 0; j < n; ++j) {
      if (set.contains(j)) continue;
      const ElementSet bigger = set.With(j);
      for (Element i : set.ToVector()) {
        const double rise = model.ChoiceProbability(i, bigger) -
                            model.ChoiceProbability(i, set);
        if (rise > kTolerance) {
          return ViolationWitness{"substitutable", set, ElementSet(n, {i}),
                                  ElementSet(n, {j}), rise};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace subord
