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

#include "subord/element_set.h"

#include <bit>
#include <string>

#include "subord/errors.h"

namespace subord {
namespace {

std::size_t WordCount(std::size_t universe) { return (universe + 63) / 64; }

}  // namespace

ElementSet::ElementSet(std::size_t universe)
    : universe_(universe), words_(WordCount(universe), 0) {}

ElementSet::ElementSet(std::size_t universe,
                       std::initializer_list<Element> elements)
    : ElementSet(universe) {
  for (Element e : elements) insert(e);
}

ElementSet::ElementSet(std::size_t universe,
                       const std::vector<Element>& elements)
    : ElementSet(universe) {
  for (Element e : elements) insert(e);
}

ElementSet ElementSet::Full(std::size_t universe) {
  ElementSet s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~0ULL;
  if (universe % 64 != 0 && !s.words_.empty()) {
    s.words_.back() = (1ULL << (universe % 64)) - 1;
  }
  return s;
}

ElementSet ElementSet::FromMask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw InputError("FromMask requires universe <= 64");
  if (universe < 64 && (mask >> universe) != 0) {
    throw InputError("mask has bits outside the universe");
  }
  ElementSet s(universe);
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

std::size_t ElementSet::size() const {
  std::size_t count = 0;
  for (std::uint64_t w : words_) count += std::popcount(w);
  return count;
}

bool ElementSet::empty() const {
  for (std::uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

void ElementSet::CheckElement(Element e) const {
  if (e >= universe_) {
    throw InputError("element id " + std::to_string(e) +
                     " out of range for ground set of size " +
                     std::to_string(universe_));
  }
}

void ElementSet::CheckSameUniverse(const ElementSet& other) const {
  if (universe_ != other.universe_) {
    throw InputError("set operation on ground sets of different size (" +
                     std::to_string(universe_) + " vs " +
                     std::to_string(other.universe_) + ")");
  }
}

bool ElementSet::contains(Element e) const {
  if (e >= universe_) return false;
  return (words_[e / 64] >> (e % 64)) & 1ULL;
}

void ElementSet::insert(Element e) {
  CheckElement(e);
  words_[e / 64] |= 1ULL << (e % 64);
}

void ElementSet::erase(Element e) {
  CheckElement(e);
  words_[e / 64] &= ~(1ULL << (e % 64));
}

ElementSet ElementSet::With(Element e) const {
  ElementSet s = *this;
  s.insert(e);
  return s;
}

ElementSet ElementSet::Without(Element e) const {
  ElementSet s = *this;
  s.erase(e);
  return s;
}

bool ElementSet::IsSubsetOf(const ElementSet& other) const {
  CheckSameUniverse(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool ElementSet::Intersects(const ElementSet& other) const {
  CheckSameUniverse(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  CheckSameUniverse(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  CheckSameUniverse(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
  CheckSameUniverse(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] &= ~other.words_[w];
  }
  return *this;
}

std::vector<Element> ElementSet::ToVector() const {
  std::vector<Element> out;
  out.reserve(size());
  ForEach([&](Element e) { out.push_back(e); });
  return out;
}

std::uint64_t ElementSet::ToMask() const {
  if (universe_ > 64) throw InputError("ToMask requires universe <= 64");
  return words_.empty() ? 0 : words_[0];
}

std::size_t ElementSet::Hash() const {
  // FNV-1a over the words, seeded by the universe size.
  std::uint64_t h = 1469598103934665603ULL ^ universe_;
  for (std::uint64_t w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

std::string ElementSet::ToString() const {
  std::string out = "{";
  bool first = true;
  ForEach([&](Element e) {
    if (!first) out += ", ";
    out += std::to_string(e);
    first = false;
  });
  return out + "}";
}

}  // namespace subord
