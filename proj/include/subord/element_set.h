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

#ifndef SUBORD_ELEMENT_SET_H_
#define SUBORD_ELEMENT_SET_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace subord {

using Element = std::size_t;

// Subset of a ground set {0, ..., universe-1}, stored as a packed bitset.
// Binary operations require both operands to share the same universe.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe);
  ElementSet(std::size_t universe, std::initializer_list<Element> elements);
  ElementSet(std::size_t universe, const std::vector<Element>& elements);

  static ElementSet Full(std::size_t universe);
  // Requires universe <= 64.
  static ElementSet FromMask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const { return universe_; }
  std::size_t size() const;
  bool empty() const;

  bool contains(Element e) const;
  void insert(Element e);
  void erase(Element e);

  ElementSet With(Element e) const;
  ElementSet Without(Element e) const;
  bool IsSubsetOf(const ElementSet& other) const;
  bool Intersects(const ElementSet& other) const;

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  ElementSet& operator-=(const ElementSet& other);
  friend ElementSet operator|(ElementSet a, const ElementSet& b) {
    return a |= b;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) {
    return a &= b;
  }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) {
    return a -= b;
  }
  bool operator==(const ElementSet& other) const = default;

  // Ascending element ids.
  std::vector<Element> ToVector() const;
  std::uint64_t ToMask() const;
  std::size_t Hash() const;
  // "{0, 3, 5}"
  std::string ToString() const;

  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        fn(static_cast<Element>(w * 64 + bit));
        bits &= bits - 1;
      }
    }
  }

 private:
  void CheckElement(Element e) const;
  void CheckSameUniverse(const ElementSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.Hash(); }
};

}  // namespace subord

#endif  // SUBORD_ELEMENT_SET_H_
