#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace cctri {

using Vertex = int;

// Dynamic bitset over a fixed universe {0, ..., universe-1}. Graphs up to 128
// vertices stay on the stack.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* set, Vertex pos) : set_(set), pos_(pos) {}

    Vertex operator*() const { return pos_; }
    const_iterator& operator++() {
      pos_ = set_->next(pos_);
      return *this;
    }
    const_iterator operator++(int) {
      const_iterator tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const const_iterator& o) const { return pos_ == o.pos_; }

   private:
    const VertexSet* set_ = nullptr;
    Vertex pos_ = -1;
  };

  VertexSet() = default;
  explicit VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {}
  VertexSet(int universe, std::initializer_list<Vertex> elems) : VertexSet(universe) {
    for (Vertex v : elems) insert(v);
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }
  template <class Range>
  static VertexSet from_range(int universe, const Range& r) {
    VertexSet s(universe);
    for (Vertex v : r) s.insert(v);
    return s;
  }

  int universe() const { return universe_; }

  bool contains(Vertex v) const {
    assert(v >= 0 && v < universe_);
    return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  void insert(Vertex v) {
    assert(v >= 0 && v < universe_);
    words_[v / kWordBits] |= Word{1} << (v % kWordBits);
  }
  void erase(Vertex v) {
    assert(v >= 0 && v < universe_);
    words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  bool empty() const {
    for (Word w : words_)
      if (w) return false;
    return true;
  }
  int size() const {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }

  // First element, or -1.
  Vertex first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<Vertex>(i * kWordBits + std::countr_zero(words_[i]));
    return -1;
  }
  // Smallest element greater than v, or -1.
  Vertex next(Vertex v) const {
    int p = v + 1;
    if (p >= universe_) return -1;
    std::size_t i = p / kWordBits;
    Word w = words_[i] & (~Word{0} << (p % kWordBits));
    while (true) {
      if (w) return static_cast<Vertex>(i * kWordBits + std::countr_zero(w));
      if (++i == words_.size()) return -1;
      w = words_[i];
    }
  }
  Vertex last() const {
    for (std::size_t i = words_.size(); i-- > 0;)
      if (words_[i]) return static_cast<Vertex>(i * kWordBits + 63 - std::countl_zero(words_[i]));
    return -1;
  }

  const_iterator begin() const { return const_iterator(this, first()); }
  const_iterator end() const { return const_iterator(this, -1); }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (Vertex v : *this) out.push_back(v);
    return out;
  }

  VertexSet& operator|=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  VertexSet& operator^=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

  VertexSet complement() const {
    VertexSet s = *this;
    for (auto& w : s.words_) w = ~w;
    s.trim();
    return s;
  }

  bool is_subset_of(const VertexSet& o) const {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const VertexSet& o) const {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  int intersection_size(const VertexSet& o) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  // True iff some element is greater than v.
  bool has_element_above(Vertex v) const { return next(v) != -1; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  // Lexicographic order of the sorted element sequences; a proper prefix is
  // smaller, so {1,2} < {1,2,3} < {1,3}.
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    assert(a.universe_ == b.universe_);
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      Word d = a.words_[i] ^ b.words_[i];
      if (!d) continue;
      Vertex e = static_cast<Vertex>(i * kWordBits + std::countr_zero(d));
      if (a.contains(e)) return b.has_element_above(e);
      return !a.has_element_above(e);
    }
    return false;
  }
  friend bool operator>(const VertexSet& a, const VertexSet& b) { return b < a; }
  friend bool operator<=(const VertexSet& a, const VertexSet& b) { return !(b < a); }
  friend bool operator>=(const VertexSet& a, const VertexSet& b) { return !(a < b); }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(universe_);
    for (Word w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }

  const Word* data() const { return words_.data(); }
  std::size_t word_size() const { return words_.size(); }

 private:
  static std::size_t word_count(int universe) {
    return static_cast<std::size_t>((universe + kWordBits - 1) / kWordBits);
  }
  void trim() {
    if (universe_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (universe_ % kWordBits)) - 1;
  }

  int universe_ = 0;
  boost::container::small_vector<Word, 2> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

// Subset of the cliques of an edge clique cover, as a bitmask over clique
// indices. Covers are limited to 64 cliques.
class Part {
 public:
  static constexpr int kMaxCliques = 64;

  constexpr Part() = default;
  constexpr explicit Part(std::uint64_t bits) : bits_(bits) {}
  static constexpr Part single(int i) { return Part(std::uint64_t{1} << i); }
  static constexpr Part all(int cc) {
    return Part(cc >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cc) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool test(int i) const { return (bits_ >> i) & 1U; }
  constexpr void set(int i) { bits_ |= std::uint64_t{1} << i; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool is_subset_of(Part o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(Part o) const { return (bits_ & o.bits_) != 0; }

  constexpr Part operator|(Part o) const { return Part(bits_ | o.bits_); }
  constexpr Part operator&(Part o) const { return Part(bits_ & o.bits_); }
  constexpr Part operator-(Part o) const { return Part(bits_ & ~o.bits_); }
  constexpr Part& operator|=(Part o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr auto operator<=>(const Part&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace cctri

template <>
struct std::hash<cctri::VertexSet> {
  std::size_t operator()(const cctri::VertexSet& s) const { return s.hash(); }
};
template <>
struct std::hash<cctri::Part> {
  std::size_t operator()(cctri::Part p) const { return std::hash<std::uint64_t>{}(p.bits()); }
};
