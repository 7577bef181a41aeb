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

#ifndef FAIRSC_ELEMENT_MASK_H_
#define FAIRSC_ELEMENT_MASK_H_

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace fairsc {

// Fixed-size bitset over universe elements.
class ElementMask {
 public:
  ElementMask() = default;
  explicit ElementMask(int n) : n_(n), words_((n + 63) / 64, 0) {}

  static ElementMask Full(int n) {
    ElementMask m(n);
    for (int e = 0; e < n; ++e) m.Set(e);
    return m;
  }
  static ElementMask Of(int n, std::span<const int> elements) {
    ElementMask m(n);
    for (int e : elements) m.Set(e);
    return m;
  }

  int universe() const { return n_; }
  void Set(int e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void Reset(int e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }
  bool Test(int e) const { return (words_[e >> 6] >> (e & 63)) & 1; }

  int Count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  bool Any() const {
    for (std::uint64_t w : words_) {
      if (w) return true;
    }
    return false;
  }
  int AndCount(const ElementMask& other) const {
    int c = 0;
    for (size_t i = 0; i < words_.size(); ++i) {
      c += std::popcount(words_[i] & other.words_[i]);
    }
    return c;
  }
  ElementMask& operator|=(const ElementMask& other) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  ElementMask& operator&=(const ElementMask& other) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  // this &= ~other
  ElementMask& Subtract(const ElementMask& other) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }
  std::vector<int> Elements() const {
    std::vector<int> out;
    for (int e = 0; e < n_; ++e) {
      if (Test(e)) out.push_back(e);
    }
    return out;
  }
  const std::vector<std::uint64_t>& words() const { return words_; }

  bool operator==(const ElementMask&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace fairsc

#endif  // FAIRSC_ELEMENT_MASK_H_
