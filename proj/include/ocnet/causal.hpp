#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ocnet/element_set.hpp"
#include "ocnet/net.hpp"
#include "ocnet/next_closure.hpp"
#include "ocnet/ortho_closure.hpp"
#include "ocnet/poset.hpp"
#include "ocnet/relations.hpp"

namespace ocnet {

// A net together with its causal order and derived relations.
class CausalContext {
 public:
  CausalContext() = default;
  explicit CausalContext(OccurrenceNet net)
      : net_(std::move(net)), closure_(poset_of(net_)), li_(li_relation(closure_.poset())) {}

  const OccurrenceNet& net() const noexcept { return net_; }
  const Poset& poset() const noexcept { return closure_.poset(); }
  const SymmetricRelation& co() const noexcept { return closure_.co(); }
  const SymmetricRelation& li() const noexcept { return li_; }
  const ClosureContext& closure_context() const noexcept { return closure_; }
  std::size_t size() const noexcept { return net_.size(); }

  // Int(e) = {e} ∪ •e ∪ e•.
  ElementSet neighbourhood(ElementIndex e) const {
    return (net_.preset(e) | net_.postset(e)).with(e);
  }

 private:
  OccurrenceNet net_;
  ClosureContext closure_;
  SymmetricRelation li_;
};

enum class CausalRule { pre_closed, post_closed, event_neighbourhood, convex };

inline const char* to_string(CausalRule r) {
  switch (r) {
    case CausalRule::pre_closed: return "i";
    case CausalRule::post_closed: return "ii";
    case CausalRule::event_neighbourhood: return "iii";
    case CausalRule::convex: return "iv";
  }
  return "?";
}

// Rules i-iii name `event`; rule iii also names the missing condition.
// Rule iv names the li pair x <= y and the missing interval element.
struct RuleViolation {
  CausalRule rule;
  ElementIndex event = kNoElement;
  ElementIndex x = kNoElement;
  ElementIndex y = kNoElement;
  ElementIndex missing = kNoElement;
};

// First violated rule of causal closedness, in rule order i, ii, iii, iv and
// then index order; std::nullopt when `c` is causally closed.
inline std::optional<RuleViolation> is_causally_closed(const CausalContext& ctx, const ElementSet& c) {
  const auto& net = ctx.net();
  const ElementSet& events = net.events();
  for (ElementIndex e = events.first(); e != kNoElement; e = events.next(e + 1))
    if (!c.contains(e) && net.preset(e).is_subset_of(c)) return RuleViolation{CausalRule::pre_closed, e};
  for (ElementIndex e = events.first(); e != kNoElement; e = events.next(e + 1))
    if (!c.contains(e) && net.postset(e).is_subset_of(c)) return RuleViolation{CausalRule::post_closed, e};
  for (ElementIndex e = events.first(); e != kNoElement; e = events.next(e + 1)) {
    if (!c.contains(e)) continue;
    ElementSet missing = (net.preset(e) | net.postset(e)) - c;
    if (!missing.empty())
      return RuleViolation{CausalRule::event_neighbourhood, e, kNoElement, kNoElement, missing.first()};
  }
  for (ElementIndex x = c.first(); x != kNoElement; x = c.next(x + 1)) {
    for (ElementIndex y = c.first(); y != kNoElement; y = c.next(y + 1)) {
      if (!ctx.poset().leq(x, y)) continue;
      ElementSet missing = interval(ctx.poset(), x, y) - c;
      if (!missing.empty())
        return RuleViolation{CausalRule::convex, kNoElement, x, y, missing.first()};
    }
  }
  return std::nullopt;
}

// φ(A): least causally closed superset, by iterating rules i-iv to a
// fixpoint. Rule iv is applied as C := C ∪ (↑C ∩ ↓C), which is the union of
// all intervals [x, y] with x, y in C.
inline ElementSet phi(const CausalContext& ctx, const ElementSet& a) {
  const auto& net = ctx.net();
  const auto& p = ctx.poset();
  const ElementSet& events = net.events();
  ElementSet c = a;
  bool changed = true;
  while (changed) {
    ElementSet before = c;
    events.for_each([&](ElementIndex e) {
      if (net.preset(e).is_subset_of(c)) c.insert(e);
    });
    events.for_each([&](ElementIndex e) {
      if (net.postset(e).is_subset_of(c)) c.insert(e);
    });
    events.for_each([&](ElementIndex e) {
      if (c.contains(e)) c |= net.preset(e) | net.postset(e);
    });
    ElementSet up(c.universe_size()), down(c.universe_size());
    c.for_each([&](ElementIndex x) {
      up |= p.up(x);
      down |= p.down(x);
    });
    c |= up & down;
    changed = c != before;
  }
  return c;
}

class NotACoset : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct InductiveChain {
  // A_0, A_1, ..., A_k with A_k = A_{k+1}; the stable set appears once.
  std::vector<ElementSet> steps;
  ElementSet limit;
};

// A_{i+1} = A_i ∪ ⋃{Int(e) | •e ⊆ A_i or e• ⊆ A_i}, starting from a B-coset.
inline InductiveChain inductive_chain(const CausalContext& ctx, const ElementSet& a) {
  if (!is_b_coset(ctx.net(), ctx.co(), a))
    throw NotACoset("inductive construction requires a B-coset");
  const auto& net = ctx.net();
  InductiveChain chain;
  chain.steps.push_back(a);
  while (true) {
    const ElementSet& current = chain.steps.back();
    ElementSet next = current;
    net.events().for_each([&](ElementIndex e) {
      if (net.preset(e).is_subset_of(current) || net.postset(e).is_subset_of(current))
        next |= ctx.neighbourhood(e);
    });
    if (next == current) break;
    chain.steps.push_back(std::move(next));
  }
  chain.limit = chain.steps.back();
  return chain;
}

// Members of `s` joined by a flow arc to some element outside `s`.
inline ElementSet frontier(const CausalContext& ctx, const ElementSet& s) {
  const auto& net = ctx.net();
  ElementSet out(s.universe_size());
  ElementSet outside = ~s;
  s.for_each([&](ElementIndex x) {
    if (net.preset(x).intersects(outside) || net.postset(x).intersects(outside)) out.insert(x);
  });
  return out;
}

template <std::invocable<const ElementSet&> Visit>
std::size_t enumerate_causally_closed(const CausalContext& ctx, Visit&& visit,
                                      std::size_t cap = kDefaultFamilyCap) {
  return next_closure(
      ctx.size(), [&](const ElementSet& s) { return phi(ctx, s); }, visit, cap);
}

inline std::vector<ElementSet> enumerate_causally_closed(const CausalContext& ctx,
                                                         std::size_t cap = kDefaultFamilyCap) {
  return closed_family(
      ctx.size(), [&](const ElementSet& s) { return phi(ctx, s); }, cap);
}

struct FamilyComparison {
  std::vector<ElementSet> closed_sets;      // L(N), canonical order
  std::vector<ElementSet> causally_closed;  // CC(N), canonical order
  bool l_subset_of_cc = true;
  bool equal = true;
  bool k_dense = false;
  std::vector<ElementSet> cc_not_closed;   // CC(N) \ L(N)
  std::vector<ElementSet> closed_not_cc;   // L(N) \ CC(N), expected empty

  // L ⊆ CC always; equality whenever the net is K-dense.
  bool theorem_holds() const noexcept { return l_subset_of_cc && (!k_dense || equal); }
};

namespace detail {

// a \ b for canonically sorted families.
inline std::vector<ElementSet> family_difference(const std::vector<ElementSet>& a,
                                                 const std::vector<ElementSet>& b) {
  std::vector<ElementSet> out;
  std::size_t j = 0;
  for (const auto& s : a) {
    while (j < b.size() && lex_less(b[j], s)) ++j;
    if (j < b.size() && b[j] == s) continue;
    out.push_back(s);
  }
  return out;
}

}  // namespace detail

inline FamilyComparison compare_families(const CausalContext& ctx, bool k_dense,
                                         std::size_t cap = kDefaultFamilyCap) {
  FamilyComparison r;
  r.k_dense = k_dense;
  r.closed_sets = enumerate_closed_sets(ctx.closure_context(), cap);
  r.causally_closed = enumerate_causally_closed(ctx, cap);
  sort_canonical(r.closed_sets);
  sort_canonical(r.causally_closed);
  r.cc_not_closed = detail::family_difference(r.causally_closed, r.closed_sets);
  r.closed_not_cc = detail::family_difference(r.closed_sets, r.causally_closed);
  r.l_subset_of_cc = r.closed_not_cc.empty();
  r.equal = r.l_subset_of_cc && r.cc_not_closed.empty();
  return r;
}

inline FamilyComparison compare_families(const CausalContext& ctx, std::size_t cap = kDefaultFamilyCap) {
  return compare_families(ctx, is_k_dense(ctx.poset()).holds, cap);
}

struct BCutClosureReport {
  ElementSet phi;
  ElementSet closure;  // A^⊥⊥
  bool equal = false;
  bool phi_subset_of_closure = false;
  bool k_dense = false;

  bool assertion_holds() const noexcept { return !k_dense || equal; }
};

inline BCutClosureReport check_b_cut_closure(const CausalContext& ctx, const ElementSet& a, bool k_dense) {
  if (!is_b_coset(ctx.net(), ctx.co(), a)) throw NotACoset("comparison requires a B-coset");
  BCutClosureReport r;
  r.phi = phi(ctx, a);
  r.closure = ctx.closure_context().closure(a);
  r.equal = r.phi == r.closure;
  r.phi_subset_of_closure = r.phi.is_subset_of(r.closure);
  r.k_dense = k_dense;
  return r;
}

inline BCutClosureReport check_b_cut_closure(const CausalContext& ctx, const ElementSet& a) {
  return check_b_cut_closure(ctx, a, is_k_dense(ctx.poset()).holds);
}

// B-cuts of the subposet induced by `y`: co-cliques of conditions of `y`
// that no other condition of `y` extends. The order is the ambient one
// restricted to `y`, so co between members of `y` is unchanged.
inline std::vector<ElementSet> induced_b_cuts(const CausalContext& ctx, const ElementSet& y) {
  return maximal_cliques(ctx.co().rows(), y & ctx.net().conditions());
}

}  // namespace ocnet
