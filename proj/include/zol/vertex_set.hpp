// Copyright 2026 The zol Authors.
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

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace zol {

// Subset of a vertex universe {0, ..., capacity-1}, stored as a multi-word bitset.
// Sets over different capacities may be combined; the result takes the larger
// capacity.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int capacity) : capacity_(capacity), words_((capacity + 63) / 64, 0) {}
  VertexSet(int capacity, std::initializer_list<int> members) : VertexSet(capacity) {
    for (int v : members) insert(v);
  }
  VertexSet(int capacity, std::span<const int> members) : VertexSet(capacity) {
    for (int v : members) insert(v);
  }

  static VertexSet full(int capacity) {
    VertexSet s(capacity);
    for (int v = 0; v < capacity; ++v) s.insert(v);
    return s;
  }
  static VertexSet from_mask(int capacity, uint64_t mask) {
    VertexSet s(capacity);
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
  }

  int capacity() const { return capacity_; }

  bool contains(int v) const {
    if (v < 0 || v >= capacity_) return false;
    return (words_[v >> 6] >> (v & 63)) & 1;
  }
  void insert(int v) {
    grow(v + 1);
    words_[v >> 6] |= uint64_t{1} << (v & 63);
  }
  void erase(int v) {
    if (v < 0 || v >= capacity_) return;
    words_[v >> 6] &= ~(uint64_t{1} << (v & 63));
  }

  int size() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  // Smallest member, or -1 when empty.
  int first() const { return next(0); }
  // Smallest member >= from, or -1.
  int next(int from) const {
    if (from < 0) from = 0;
    if (from >= capacity_) return -1;
    size_t wi = static_cast<size_t>(from) >> 6;
    uint64_t w = words_[wi] & (~uint64_t{0} << (from & 63));
    while (true) {
      if (w) return static_cast<int>(wi * 64 + std::countr_zero(w));
      if (++wi >= words_.size()) return -1;
      w = words_[wi];
    }
  }

  // Low 64 bits; callers working on graphs with at most 64 vertices use this.
  uint64_t mask() const { return words_.empty() ? 0 : words_[0]; }
  std::span<const uint64_t> words() const { return words_; }

  bool is_subset_of(const VertexSet& o) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t ow = i < o.words_.size() ? o.words_[i] : 0;
      if (words_[i] & ~ow) return false;
    }
    return true;
  }
  bool intersects(const VertexSet& o) const {
    size_t n = std::min(words_.size(), o.words_.size());
    for (size_t i = 0; i < n; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  VertexSet& operator|=(const VertexSet& o) {
    grow(o.capacity_);
    for (size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    grow(o.capacity_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= i < o.words_.size() ? o.words_[i] : 0;
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    size_t n = std::min(words_.size(), o.words_.size());
    for (size_t i = 0; i < n; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  // Equality and ordering ignore capacity; only membership matters.
  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    size_t n = std::max(a.words_.size(), b.words_.size());
    for (size_t i = 0; i < n; ++i)
      if (a.word(i) != b.word(i)) return false;
    return true;
  }
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    size_t n = std::max(a.words_.size(), b.words_.size());
    for (size_t i = n; i-- > 0;)
      if (a.word(i) != b.word(i)) return a.word(i) < b.word(i);
    return false;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int v = first(); v >= 0; v = next(v + 1)) out.push_back(v);
    return out;
  }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    iterator() = default;
    iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
    int operator*() const { return v_; }
    iterator& operator++() {
      v_ = set_->next(v_ + 1);
      return *this;
    }
    iterator operator++(int) {
      iterator t = *this;
      ++*this;
      return t;
    }
    bool operator==(const iterator& o) const { return v_ == o.v_; }

   private:
    const VertexSet* set_ = nullptr;
    int v_ = -1;
  };
  iterator begin() const { return {this, first()}; }
  iterator end() const { return {this, -1}; }

 private:
  uint64_t word(size_t i) const { return i < words_.size() ? words_[i] : 0; }
  void grow(int capacity) {
    if (capacity <= capacity_) return;
    capacity_ = capacity;
    words_.resize((capacity + 63) / 64, 0);
  }

  int capacity_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace zol
