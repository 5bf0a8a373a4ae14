#pragma once

#include <concepts>
#include <cstddef>
#include <vector>

#include "ocnet/element_set.hpp"
#include "ocnet/next_closure.hpp"
#include "ocnet/poset.hpp"
#include "ocnet/relations.hpp"

namespace ocnet {

// Orthocomplement and ⊥⊥ closure induced by the concurrency relation of a
// poset. The table of singleton orthocomplements {x}^⊥ = co(x) is built once;
// every S^⊥ is an intersection of rows.
class ClosureContext {
 public:
  ClosureContext() = default;
  explicit ClosureContext(Poset poset) : poset_(std::move(poset)), co_(co_relation(poset_)) {}

  const Poset& poset() const noexcept { return poset_; }
  const SymmetricRelation& co() const noexcept { return co_; }
  std::size_t size() const noexcept { return poset_.size(); }

  const ElementSet& singleton_ortho(ElementIndex x) const { return co_.row(x); }

  // S^⊥ = {x | x co y for all y in S}; the empty set maps to the universe.
  ElementSet orthocomplement(const ElementSet& s) const {
    ElementSet out = ElementSet::full(size());
    s.for_each([&](ElementIndex y) { out &= co_.row(y); });
    return out;
  }

  ElementSet closure(const ElementSet& s) const { return orthocomplement(orthocomplement(s)); }

  bool is_closed(const ElementSet& s) const { return closure(s) == s; }

 private:
  Poset poset_;
  SymmetricRelation co_;
};

inline ElementSet orthocomplement(const ClosureContext& ctx, const ElementSet& s) {
  return ctx.orthocomplement(s);
}
inline ElementSet closure_pp(const ClosureContext& ctx, const ElementSet& s) { return ctx.closure(s); }
inline bool is_closed(const ClosureContext& ctx, const ElementSet& s) { return ctx.is_closed(s); }

// L(P) streamed in lectic order.
template <std::invocable<const ElementSet&> Visit>
std::size_t enumerate_closed_sets(const ClosureContext& ctx, Visit&& visit,
                                  std::size_t cap = kDefaultFamilyCap) {
  return next_closure(
      ctx.size(), [&](const ElementSet& s) { return ctx.closure(s); }, visit, cap);
}

inline std::vector<ElementSet> enumerate_closed_sets(const ClosureContext& ctx,
                                                     std::size_t cap = kDefaultFamilyCap) {
  return closed_family(
      ctx.size(), [&](const ElementSet& s) { return ctx.closure(s); }, cap);
}

}  // namespace ocnet
