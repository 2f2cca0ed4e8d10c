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

#include "subord/core.h"

#include <random>
#include <string>

#include "subord/errors.h"

namespace subord {

Order::Order(std::vector<Element> perm) : perm_(std::move(perm)) {
  const std::size_t n = perm_.size();
  rank_.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Element e = perm_[i];
    if (e >= n) {
      throw InputError("order entry " + std::to_string(e) +
                       " out of range for ground set of size " +
                       std::to_string(n));
    }
    if (rank_[e] != n) {
      throw InputError("order lists element " + std::to_string(e) + " twice");
    }
    rank_[e] = i;
  }
}

Order Order::Identity(std::size_t n) {
  std::vector<Element> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  return Order(std::move(perm));
}

std::size_t Order::rank(Element e) const {
  if (e >= rank_.size()) {
    throw InputError("element id " + std::to_string(e) + " out of range");
  }
  return rank_[e];
}

Element Order::Rightmost(const ElementSet& s) const {
  if (s.empty()) throw InputError("Rightmost of an empty set");
  Element best = 0;
  bool found = false;
  s.ForEach([&](Element e) {
    if (!found || rank(e) > rank(best)) best = e;
    found = true;
  });
  return best;
}

Element Order::Leftmost(const ElementSet& s) const {
  if (s.empty()) throw InputError("Leftmost of an empty set");
  Element best = 0;
  bool found = false;
  s.ForEach([&](Element e) {
    if (!found || rank(e) < rank(best)) best = e;
    found = true;
  });
  return best;
}

double ValueOracle::Value(const ElementSet& s) {
  if (s.universe() != ground_size_) {
    throw InputError("query set has universe " + std::to_string(s.universe()) +
                     ", oracle ground set has " +
                     std::to_string(ground_size_));
  }
  ++query_count_;
  return Evaluate(s);
}

TableOracle::TableOracle(std::size_t ground_size, std::vector<double> values)
    : ValueOracle(ground_size), values_(std::move(values)) {
  if (ground_size > 20) throw InputError("value tables support n <= 20");
  if (values_.size() != (std::size_t{1} << ground_size)) {
    throw InputError("value table needs 2^n entries");
  }
  if (values_[0] != 0.0) throw InputError("value table must have f(empty)=0");
}

NoisyOracle::NoisyOracle(ValueOracle& inner, double delta, std::uint64_t seed)
    : ValueOracle(inner.ground_size()),
      inner_(inner),
      delta_(delta),
      seed_(seed) {
  if (!(delta >= 0.0 && delta < 1.0)) {
    throw InputError("noise level must lie in [0, 1)");
  }
}

double NoisyOracle::Evaluate(const ElementSet& s) {
  const double exact = inner_.Value(s);
  if (delta_ == 0.0) return exact;
  auto it = factors_.find(s);
  if (it == factors_.end()) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed_),
                      static_cast<std::uint32_t>(seed_ >> 32),
                      static_cast<std::uint32_t>(s.Hash()),
                      static_cast<std::uint32_t>(s.Hash() >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> dist(1.0 - delta_, 1.0 + delta_);
    it = factors_.emplace(s, dist(rng)).first;
  }
  return exact * it->second;
}

std::unique_ptr<NoisyOracle> WrapNoisy(ValueOracle& f, double delta,
                                       std::uint64_t seed) {
  return std::make_unique<NoisyOracle>(f, delta, seed);
}

double Marginal(ValueOracle& f, const ElementSet& c, const ElementSet& s) {
  const double with = f.Value(c | s);
  if (s.empty()) return with;
  return with - f.Value(s);
}

}  // namespace subord
