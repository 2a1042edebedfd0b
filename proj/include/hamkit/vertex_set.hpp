#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace hamkit {

using Vertex = int;

// Dynamic bitset over vertex ids [0, universe). Graphs up to 64 vertices
// stay in the inline word and never touch the heap.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    iterator() = default;
    iterator(const VertexSet* s, Vertex v) : set_(s), v_(v) {}
    Vertex operator*() const { return v_; }
    iterator& operator++() {
      v_ = set_->next(v_);
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator& o) const { return v_ == o.v_; }
    bool operator!=(const iterator& o) const { return v_ != o.v_; }

   private:
    const VertexSet* set_ = nullptr;
    Vertex v_ = -1;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> vs) : VertexSet(universe) {
    for (Vertex v : vs) insert(v);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }
  template <class Range>
  static VertexSet of(std::size_t universe, const Range& vs) {
    VertexSet s(universe);
    for (Vertex v : vs) s.insert(v);
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < universe_ &&
           ((words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U);
  }
  void insert(Vertex v) { words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) { words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  // Lowest member, or -1.
  Vertex front() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }
  // Lowest member strictly greater than v, or -1.
  Vertex next(Vertex v) const {
    auto pos = static_cast<std::size_t>(v + 1);
    if (pos >= universe_) return -1;
    std::size_t i = pos >> 6;
    std::uint64_t w = words_[i] & (~std::uint64_t{0} << (pos & 63));
    while (true) {
      if (w) return static_cast<Vertex>(i * 64 + std::countr_zero(w));
      if (++i >= words_.size()) return -1;
      w = words_[i];
    }
  }

  iterator begin() const { return iterator(this, front()); }
  iterator end() const { return iterator(this, -1); }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (Vertex v : *this) out.push_back(v);
    return out;
  }

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  std::size_t intersection_size(const VertexSet& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet with(Vertex v) const {
    auto s = *this;
    s.insert(v);
    return s;
  }
  VertexSet without(Vertex v) const {
    auto s = *this;
    s.erase(v);
    return s;
  }

  bool operator==(const VertexSet& o) const {
    if (universe_ != o.universe_) return false;
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != o.words_[i]) return false;
    return true;
  }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  // Raw words, lowest vertex in bit 0 of word 0.
  const std::uint64_t* data() const { return words_.data(); }
  std::size_t word_count() const { return words_.size(); }

 private:
  void trim() {
    if (universe_ % 64 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  boost::container::small_vector<std::uint64_t, 1> words_;
};

}  // namespace hamkit
