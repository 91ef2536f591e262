#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

namespace kswap {

using Vertex = std::uint32_t;

/// Fixed-width bit vector over the vertex indices [0, size()).
///
/// All binary operations require both operands to have the same width. Bits
/// at positions >= size() in the last word are kept zero so that word-wise
/// popcounts and comparisons stay exact.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;

    Vertex operator*() const { return static_cast<Vertex>(word_index_ * kWordBits + std::countr_zero(current_)); }

    const_iterator& operator++() {
      current_ &= current_ - 1;
      advance();
      return *this;
    }
    const_iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const const_iterator& other) const {
      return word_index_ == other.word_index_ && current_ == other.current_;
    }

   private:
    friend class VertexSet;
    const_iterator(std::span<const Word> words, std::size_t index)
        : words_(words), word_index_(index), current_(index < words.size() ? words[index] : 0) {
      advance();
    }
    void advance() {
      while (current_ == 0 && word_index_ < words_.size()) {
        ++word_index_;
        current_ = word_index_ < words_.size() ? words_[word_index_] : 0;
      }
    }

    std::span<const Word> words_;
    std::size_t word_index_ = 0;
    Word current_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  static VertexSet full(std::size_t size) {
    VertexSet s(size);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  template <typename Range>
  static VertexSet of(std::size_t size, const Range& vertices) {
    VertexSet s(size);
    for (auto v : vertices) s.set(static_cast<Vertex>(v));
    return s;
  }
  static VertexSet of(std::size_t size, std::initializer_list<Vertex> vertices) {
    VertexSet s(size);
    for (auto v : vertices) s.set(v);
    return s;
  }

  std::size_t size() const { return size_; }
  std::span<const Word> words() const { return words_; }

  bool test(Vertex v) const {
    assert(v < size_);
    return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  void set(Vertex v) {
    assert(v < size_);
    words_[v / kWordBits] |= Word{1} << (v % kWordBits);
  }
  void reset(Vertex v) {
    assert(v < size_);
    words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  /// |*this ∩ other| without materializing the intersection.
  std::size_t count_and(const VertexSet& other) const {
    assert(other.size_ == size_);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
  }
  /// |*this \ other|
  std::size_t count_and_not(const VertexSet& other) const {
    assert(other.size_ == size_);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & ~other.words_[i]));
    return c;
  }
  bool is_subset_of(const VertexSet& other) const {
    assert(other.size_ == size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }
  bool intersects(const VertexSet& other) const {
    assert(other.size_ == size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  /// Lowest member, or size() when empty.
  Vertex first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<Vertex>(i * kWordBits + std::countr_zero(words_[i]));
    return static_cast<Vertex>(size_);
  }

  VertexSet& operator&=(const VertexSet& other) {
    assert(other.size_ == size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& other) {
    assert(other.size_ == size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& other) {
    assert(other.size_ == size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  /// Complement within [0, size()).
  VertexSet operator~() const {
    VertexSet s(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    s.trim();
    return s;
  }

  bool operator==(const VertexSet&) const = default;

  const_iterator begin() const { return const_iterator(words_, 0); }
  const_iterator end() const { return const_iterator(words_, words_.size()); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

 private:
  void trim() {
    if (const auto tail = size_ % kWordBits; tail != 0 && !words_.empty())
      words_.back() &= (Word{1} << tail) - 1;
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace kswap
