#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace ocnet {

using ElementIndex = std::size_t;

inline constexpr ElementIndex kNoElement = static_cast<ElementIndex>(-1);

// Subset of a universe {0, ..., n-1}, stored as a dense bit vector.
//
// Every binary operation requires both operands to share the same universe
// size; mixing universes is a programming error and asserts.
class ElementSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  ElementSet() = default;

  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

  ElementSet(std::size_t universe, std::initializer_list<ElementIndex> members)
      : ElementSet(universe) {
    for (auto m : members) insert(m);
  }

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  template <class Range>
  static ElementSet from_members(std::size_t universe, const Range& members) {
    ElementSet s(universe);
    for (auto m : members) s.insert(static_cast<ElementIndex>(m));
    return s;
  }

  // Bits of `mask` interpreted as members; only meaningful for universe <= 64.
  static ElementSet from_mask(std::size_t universe, std::uint64_t mask) {
    ElementSet s(universe);
    if (!s.words_.empty()) s.words_[0] = mask;
    s.trim();
    return s;
  }

  std::size_t universe_size() const noexcept { return universe_; }

  bool contains(ElementIndex i) const noexcept {
    return i < universe_ && ((words_[i / kWordBits] >> (i % kWordBits)) & 1U);
  }

  void insert(ElementIndex i) {
    check_index(i);
    words_[i / kWordBits] |= Word{1} << (i % kWordBits);
  }

  void erase(ElementIndex i) {
    check_index(i);
    words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
  }

  void clear() noexcept { std::fill(words_.begin(), words_.end(), Word{0}); }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  bool is_full() const noexcept { return size() == universe_; }

  // Smallest member >= from, or kNoElement.
  ElementIndex next(ElementIndex from) const noexcept {
    if (from >= universe_) return kNoElement;
    std::size_t wi = from / kWordBits;
    Word w = words_[wi] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w != 0) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size()) return kNoElement;
      w = words_[wi];
    }
  }

  ElementIndex first() const noexcept { return next(0); }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w != 0) {
        f(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<ElementIndex> members() const {
    std::vector<ElementIndex> out;
    out.reserve(size());
    for_each([&](ElementIndex i) { out.push_back(i); });
    return out;
  }

  bool is_subset_of(const ElementSet& other) const noexcept {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  bool is_proper_subset_of(const ElementSet& other) const noexcept {
    return is_subset_of(other) && *this != other;
  }

  bool intersects(const ElementSet& other) const noexcept {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  // Agreement of the two sets on members strictly below `bound`.
  bool agrees_below(const ElementSet& other, ElementIndex bound) const noexcept {
    assert(universe_ == other.universe_);
    std::size_t full_words = bound / kWordBits;
    for (std::size_t i = 0; i < full_words; ++i)
      if (words_[i] != other.words_[i]) return false;
    std::size_t rest = bound % kWordBits;
    if (rest == 0) return true;
    Word mask = (Word{1} << rest) - 1;
    return ((words_[full_words] ^ other.words_[full_words]) & mask) == 0;
  }

  ElementSet& operator&=(const ElementSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  // Complement relative to the universe.
  ElementSet operator~() const {
    ElementSet s(*this);
    for (auto& w : s.words_) w = ~w;
    s.trim();
    return s;
  }

  ElementSet with(ElementIndex i) const {
    ElementSet s(*this);
    s.insert(i);
    return s;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  const std::vector<Word>& words() const noexcept { return words_; }

 private:
  void check_index(ElementIndex i) const {
    if (i >= universe_)
      throw std::out_of_range("element index " + std::to_string(i) +
                              " outside universe of size " + std::to_string(universe_));
  }

  void trim() noexcept {
    if (universe_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (universe_ % kWordBits)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

// Lexicographic comparison of the sorted member lists; a proper prefix sorts
// first. This is the canonical order used for every reported family.
inline bool lex_less(const ElementSet& a, const ElementSet& b) {
  ElementIndex i = a.first();
  ElementIndex j = b.first();
  while (i != kNoElement && j != kNoElement) {
    if (i != j) return i < j;
    i = a.next(i + 1);
    j = b.next(j + 1);
  }
  return i == kNoElement && j != kNoElement;
}

// Order by cardinality first, then lexicographically.
inline bool size_lex_less(const ElementSet& a, const ElementSet& b) {
  auto sa = a.size();
  auto sb = b.size();
  if (sa != sb) return sa < sb;
  return lex_less(a, b);
}

inline void sort_canonical(std::vector<ElementSet>& family) {
  std::sort(family.begin(), family.end(), lex_less);
}

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ s.universe_size();
    for (auto w : s.words()) {
      h ^= w;
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace ocnet
