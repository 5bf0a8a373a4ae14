#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ocnet/element_set.hpp"
#include "ocnet/ortho_closure.hpp"

namespace ocnet {

using LatticeIndex = std::size_t;

// A finite lattice with an order-reversing unary map, addressed by dense
// element indices. Both the closed-set lattice and explicitly tabulated
// lattices model it, so the law checkers below are shared.
template <class L>
concept FiniteOrthoStructure = requires(const L& l, LatticeIndex a, LatticeIndex b) {
  { l.size() } -> std::convertible_to<std::size_t>;
  { l.leq(a, b) } -> std::convertible_to<bool>;
  { l.meet(a, b) } -> std::convertible_to<LatticeIndex>;
  { l.join(a, b) } -> std::convertible_to<LatticeIndex>;
  { l.ortho(a) } -> std::convertible_to<LatticeIndex>;
  { l.zero() } -> std::convertible_to<LatticeIndex>;
  { l.one() } -> std::convertible_to<LatticeIndex>;
  { l.label(a) } -> std::convertible_to<std::string>;
};

// L(P): the ⊥⊥-closed subsets of a poset ordered by inclusion. Elements are
// kept sorted by cardinality, then lexicographically, so zero comes first and
// one last.
class OrthoLattice {
 public:
  explicit OrthoLattice(ClosureContext ctx, std::size_t cap = kDefaultFamilyCap)
      : ctx_(std::move(ctx)) {
    elements_ = enumerate_closed_sets(ctx_, cap);
    std::sort(elements_.begin(), elements_.end(), size_lex_less);
    for (LatticeIndex i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
    ortho_.reserve(elements_.size());
    for (const auto& e : elements_) ortho_.push_back(index_of(ctx_.orthocomplement(e)));
  }

  const ClosureContext& context() const noexcept { return ctx_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<ElementSet>& elements() const noexcept { return elements_; }
  const ElementSet& set(LatticeIndex i) const { return elements_.at(i); }

  bool contains(const ElementSet& s) const { return index_.count(s) != 0; }

  LatticeIndex index_of(const ElementSet& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) throw std::invalid_argument("set is not closed: " + describe(s));
    return it->second;
  }

  LatticeIndex zero() const noexcept { return 0; }
  LatticeIndex one() const noexcept { return elements_.size() - 1; }

  bool leq(LatticeIndex a, LatticeIndex b) const { return set(a).is_subset_of(set(b)); }
  LatticeIndex meet(LatticeIndex a, LatticeIndex b) const { return index_of(set(a) & set(b)); }
  LatticeIndex join(LatticeIndex a, LatticeIndex b) const {
    return index_of(ctx_.closure(set(a) | set(b)));
  }
  LatticeIndex ortho(LatticeIndex a) const { return ortho_.at(a); }

  // Arbitrary meets are intersections; the empty meet is the universe.
  LatticeIndex meet_all(std::span<const LatticeIndex> items) const {
    ElementSet acc = ElementSet::full(ctx_.size());
    for (auto i : items) acc &= set(i);
    return index_of(acc);
  }

  // Arbitrary joins close the union; the empty join is the bottom.
  LatticeIndex join_all(std::span<const LatticeIndex> items) const {
    ElementSet acc(ctx_.size());
    for (auto i : items) acc |= set(i);
    return index_of(ctx_.closure(acc));
  }

  std::string label(LatticeIndex i) const { return describe(set(i)); }

  std::string describe(const ElementSet& s) const {
    std::string out = "{";
    bool first = true;
    s.for_each([&](ElementIndex x) {
      if (!first) out += ',';
      out += ctx_.poset().label(x);
      first = false;
    });
    return out + "}";
  }

 private:
  ClosureContext ctx_;
  std::vector<ElementSet> elements_;
  std::unordered_map<ElementSet, LatticeIndex, ElementSetHash> index_;
  std::vector<LatticeIndex> ortho_;
};

class InvalidLattice : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A lattice given by its order and a unary map, independent of any poset.
// Construction checks the partial order and the existence of binary meets
// and joins; whether the map is an orthocomplementation is left to
// check_orthocomplementation.
class AbstractLattice {
 public:
  AbstractLattice() = default;

  static AbstractLattice from_pairs(std::vector<std::string> labels,
                                    const std::vector<std::pair<LatticeIndex, LatticeIndex>>& leq_pairs,
                                    std::vector<LatticeIndex> ortho) {
    const std::size_t n = labels.size();
    if (n == 0) throw InvalidLattice("lattice needs at least one element");
    if (ortho.size() != n) throw InvalidLattice("unary map must be defined on every element");
    for (auto o : ortho)
      if (o >= n) throw InvalidLattice("unary map points outside the lattice");
    std::vector<std::pair<ElementIndex, ElementIndex>> pairs(leq_pairs.begin(), leq_pairs.end());
    AbstractLattice l;
    try {
      l.order_ = Poset::from_pairs(std::move(labels), pairs);
    } catch (const InvalidOrder& e) {
      throw InvalidLattice(e.what());
    }
    l.ortho_ = std::move(ortho);
    l.meet_.assign(n * n, 0);
    l.join_.assign(n * n, 0);
    for (LatticeIndex a = 0; a < n; ++a) {
      for (LatticeIndex b = 0; b < n; ++b) {
        l.meet_[a * n + b] = l.extremal_bound(l.order_.down(a) & l.order_.down(b), true, a, b);
        l.join_[a * n + b] = l.extremal_bound(l.order_.up(a) & l.order_.up(b), false, a, b);
      }
    }
    // Bottom: everything lies above it. Top: everything lies below it.
    l.zero_ = l.meet_[0];
    l.one_ = l.join_[0];
    for (LatticeIndex a = 1; a < n; ++a) {
      l.zero_ = l.meet_[l.zero_ * n + a];
      l.one_ = l.join_[l.one_ * n + a];
    }
    return l;
  }

  std::size_t size() const noexcept { return order_.size(); }
  bool leq(LatticeIndex a, LatticeIndex b) const { return order_.leq(a, b); }
  LatticeIndex meet(LatticeIndex a, LatticeIndex b) const { return meet_.at(a * size() + b); }
  LatticeIndex join(LatticeIndex a, LatticeIndex b) const { return join_.at(a * size() + b); }
  LatticeIndex ortho(LatticeIndex a) const { return ortho_.at(a); }
  LatticeIndex zero() const noexcept { return zero_; }
  LatticeIndex one() const noexcept { return one_; }
  std::string label(LatticeIndex a) const { return order_.label(a); }
  const Poset& order() const noexcept { return order_; }
  const std::vector<LatticeIndex>& ortho_map() const noexcept { return ortho_; }
  LatticeIndex index_of(const std::string& label) const { return order_.index_of(label); }

 private:
  // Greatest (lower=true) or least element of `bounds`.
  LatticeIndex extremal_bound(const ElementSet& bounds, bool lower, LatticeIndex a, LatticeIndex b) const {
    LatticeIndex found = kNoElement;
    bounds.for_each([&](ElementIndex c) {
      const ElementSet& cone = lower ? order_.down(c) : order_.up(c);
      if (found == kNoElement && bounds.is_subset_of(cone)) found = c;
    });
    if (found == kNoElement)
      throw InvalidLattice(std::string("no ") + (lower ? "meet" : "join") + " for '" + order_.label(a) +
                           "' and '" + order_.label(b) + "'");
    return found;
  }

  Poset order_;
  std::vector<LatticeIndex> ortho_;
  std::vector<LatticeIndex> meet_;
  std::vector<LatticeIndex> join_;
  LatticeIndex zero_ = 0;
  LatticeIndex one_ = 0;
};

enum class Law { orthocomplementation, de_morgan, orthomodular, distributive };

inline const char* to_string(Law l) {
  switch (l) {
    case Law::orthocomplementation: return "orthocomplementation";
    case Law::de_morgan: return "de_morgan";
    case Law::orthomodular: return "orthomodular";
    case Law::distributive: return "distributive";
  }
  return "?";
}

struct LawReport {
  Law law;
  bool holds = true;
  // Violating tuple of lattice indices, empty when the law holds.
  std::vector<LatticeIndex> witness;
  std::string detail;
  // Set by check_distributive when the lattice is also orthocomplemented.
  bool boolean = false;
};

namespace detail {

inline LawReport violated(Law law, std::vector<LatticeIndex> witness, std::string detail) {
  return LawReport{law, false, std::move(witness), std::move(detail), false};
}

}  // namespace detail

// Involution, order reversal, and the complement laws a ∧ a' = 0, a ∨ a' = 1.
template <FiniteOrthoStructure L>
LawReport check_orthocomplementation(const L& l) {
  const std::size_t n = l.size();
  for (LatticeIndex a = 0; a < n; ++a) {
    if (l.ortho(l.ortho(a)) != a) return detail::violated(Law::orthocomplementation, {a}, "a'' != a");
    if (l.meet(a, l.ortho(a)) != l.zero())
      return detail::violated(Law::orthocomplementation, {a}, "a ∧ a' != 0");
    if (l.join(a, l.ortho(a)) != l.one())
      return detail::violated(Law::orthocomplementation, {a}, "a ∨ a' != 1");
  }
  for (LatticeIndex a = 0; a < n; ++a)
    for (LatticeIndex b = 0; b < n; ++b)
      if (l.leq(a, b) && !l.leq(l.ortho(b), l.ortho(a)))
        return detail::violated(Law::orthocomplementation, {a, b}, "a <= b but b' </= a'");
  return {Law::orthocomplementation, true, {}, {}, false};
}

// (a ∨ b)' = a' ∧ b' and (a ∧ b)' = a' ∨ b' for all pairs.
template <FiniteOrthoStructure L>
LawReport check_de_morgan(const L& l) {
  const std::size_t n = l.size();
  for (LatticeIndex a = 0; a < n; ++a) {
    for (LatticeIndex b = 0; b < n; ++b) {
      if (l.ortho(l.join(a, b)) != l.meet(l.ortho(a), l.ortho(b)))
        return detail::violated(Law::de_morgan, {a, b}, "(a ∨ b)' != a' ∧ b'");
      if (l.ortho(l.meet(a, b)) != l.join(l.ortho(a), l.ortho(b)))
        return detail::violated(Law::de_morgan, {a, b}, "(a ∧ b)' != a' ∨ b'");
    }
  }
  return {Law::de_morgan, true, {}, {}, false};
}

// a <= b implies b = a ∨ (b ∧ a'). The witness is the first failing (a, b)
// in element order.
template <FiniteOrthoStructure L>
LawReport check_orthomodular(const L& l) {
  const std::size_t n = l.size();
  for (LatticeIndex a = 0; a < n; ++a) {
    const LatticeIndex a_perp = l.ortho(a);
    for (LatticeIndex b = 0; b < n; ++b) {
      if (!l.leq(a, b)) continue;
      if (l.join(a, l.meet(b, a_perp)) != b)
        return detail::violated(Law::orthomodular, {a, b}, "a <= b but a ∨ (b ∧ a') != b");
    }
  }
  return {Law::orthomodular, true, {}, {}, false};
}

// Both distributive identities over all triples. A distributive lattice that
// also passes check_orthocomplementation is flagged Boolean.
template <FiniteOrthoStructure L>
LawReport check_distributive(const L& l) {
  const std::size_t n = l.size();
  for (LatticeIndex a = 0; a < n; ++a) {
    for (LatticeIndex b = 0; b < n; ++b) {
      const LatticeIndex ab_meet = l.meet(a, b);
      const LatticeIndex ab_join = l.join(a, b);
      for (LatticeIndex c = 0; c < n; ++c) {
        if (l.meet(a, l.join(b, c)) != l.join(ab_meet, l.meet(a, c)))
          return detail::violated(Law::distributive, {a, b, c}, "a ∧ (b ∨ c) != (a ∧ b) ∨ (a ∧ c)");
        if (l.join(a, l.meet(b, c)) != l.meet(ab_join, l.join(a, c)))
          return detail::violated(Law::distributive, {a, b, c}, "a ∨ (b ∧ c) != (a ∨ b) ∧ (a ∨ c)");
      }
    }
  }
  LawReport r{Law::distributive, true, {}, {}, false};
  r.boolean = check_orthocomplementation(l).holds;
  return r;
}

// Minimal non-zero elements, in element order.
template <FiniteOrthoStructure L>
std::vector<LatticeIndex> atoms(const L& l) {
  std::vector<LatticeIndex> out;
  const std::size_t n = l.size();
  for (LatticeIndex a = 0; a < n; ++a) {
    if (a == l.zero()) continue;
    bool minimal = true;
    for (LatticeIndex b = 0; b < n && minimal; ++b)
      if (b != a && b != l.zero() && l.leq(b, a)) minimal = false;
    if (minimal) out.push_back(a);
  }
  return out;
}

// Covering pairs (a, b): a < b with nothing strictly between.
template <FiniteOrthoStructure L>
std::vector<std::pair<LatticeIndex, LatticeIndex>> hasse(const L& l) {
  std::vector<std::pair<LatticeIndex, LatticeIndex>> out;
  const std::size_t n = l.size();
  for (LatticeIndex a = 0; a < n; ++a) {
    for (LatticeIndex b = 0; b < n; ++b) {
      if (a == b || !l.leq(a, b)) continue;
      bool covers = true;
      for (LatticeIndex c = 0; c < n && covers; ++c)
        if (c != a && c != b && l.leq(a, c) && l.leq(c, b)) covers = false;
      if (covers) out.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace ocnet
