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

#ifndef SUBORD_CORE_H_
#define SUBORD_CORE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "subord/element_set.h"

namespace subord {

// Absolute tolerance for every real-valued comparison in the library.
inline constexpr double kTolerance = 1e-9;

// A permutation of the ground set together with its inverse.
class Order {
 public:
  Order() = default;
  // Throws InputError unless `perm` is a bijection on 0..perm.size()-1.
  explicit Order(std::vector<Element> perm);
  static Order Identity(std::size_t n);

  std::size_t size() const { return perm_.size(); }
  Element at(std::size_t position) const { return perm_[position]; }
  std::size_t rank(Element e) const;
  std::span<const Element> perm() const { return perm_; }

  // Element of `s` with the largest (resp. smallest) rank. Throws InputError
  // when `s` is empty.
  Element Rightmost(const ElementSet& s) const;
  Element Leftmost(const ElementSet& s) const;

 private:
  std::vector<Element> perm_;
  std::vector<std::size_t> rank_;
};

// Queryable set function over {0..n-1}. Every call to Value() is one query.
// Implementations must satisfy f(empty) = 0.
class ValueOracle {
 public:
  explicit ValueOracle(std::size_t ground_size) : ground_size_(ground_size) {}
  virtual ~ValueOracle() = default;
  ValueOracle(const ValueOracle&) = delete;
  ValueOracle& operator=(const ValueOracle&) = delete;

  std::size_t ground_size() const { return ground_size_; }

  double Value(const ElementSet& s);
  std::int64_t query_count() const { return query_count_; }

 protected:
  virtual double Evaluate(const ElementSet& s) = 0;

 private:
  std::size_t ground_size_;
  std::int64_t query_count_ = 0;
};

class FunctionOracle : public ValueOracle {
 public:
  using Fn = std::function<double(const ElementSet&)>;
  FunctionOracle(std::size_t ground_size, Fn fn)
      : ValueOracle(ground_size), fn_(std::move(fn)) {}

 protected:
  double Evaluate(const ElementSet& s) override { return fn_(s); }

 private:
  Fn fn_;
};

// Explicit value table indexed by subset bitmask; n <= 20.
class TableOracle : public ValueOracle {
 public:
  TableOracle(std::size_t ground_size, std::vector<double> values);
  const std::vector<double>& values() const { return values_; }

 protected:
  double Evaluate(const ElementSet& s) override {
    return values_[s.ToMask()];
  }

 private:
  std::vector<double> values_;
};

// Multiplicative-noise view of another oracle: each set S gets a fixed
// factor u(S) in [1-delta, 1+delta] drawn from a generator keyed by
// (seed, S), so repeated queries agree. `inner` must outlive this object.
class NoisyOracle : public ValueOracle {
 public:
  NoisyOracle(ValueOracle& inner, double delta, std::uint64_t seed);

  double delta() const { return delta_; }

 protected:
  double Evaluate(const ElementSet& s) override;

 private:
  ValueOracle& inner_;
  double delta_;
  std::uint64_t seed_;
  std::unordered_map<ElementSet, double, ElementSetHash> factors_;
};

// Throws InputError for delta outside [0, 1).
std::unique_ptr<NoisyOracle> WrapNoisy(ValueOracle& f, double delta,
                                       std::uint64_t seed);

// f(C u S) - f(S). Two queries, or one when S is empty.
double Marginal(ValueOracle& f, const ElementSet& c, const ElementSet& s);

}  // namespace subord

#endif  // SUBORD_CORE_H_
