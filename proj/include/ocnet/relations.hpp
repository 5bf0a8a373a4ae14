#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "ocnet/element_set.hpp"
#include "ocnet/net.hpp"
#include "ocnet/poset.hpp"

namespace ocnet {

enum class RelationKind { li, co };

// li = <= ∪ >=, co = complement of li. Row x lists the partners of x
// (li rows include x itself, co rows never do).
class SymmetricRelation {
 public:
  SymmetricRelation() = default;
  SymmetricRelation(RelationKind kind, std::vector<ElementSet> rows)
      : kind_(kind), rows_(std::move(rows)) {}

  RelationKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return rows_.size(); }
  bool related(ElementIndex x, ElementIndex y) const { return rows_.at(x).contains(y); }
  const ElementSet& row(ElementIndex x) const { return rows_.at(x); }
  const std::vector<ElementSet>& rows() const noexcept { return rows_; }

  // x related to every member of s.
  bool related_to_all(ElementIndex x, const ElementSet& s) const { return s.is_subset_of(rows_.at(x)); }

 private:
  RelationKind kind_ = RelationKind::co;
  std::vector<ElementSet> rows_;
};

inline SymmetricRelation li_relation(const Poset& p) {
  std::vector<ElementSet> rows;
  rows.reserve(p.size());
  for (ElementIndex x = 0; x < p.size(); ++x) rows.push_back(p.up(x) | p.down(x));
  return {RelationKind::li, std::move(rows)};
}

inline SymmetricRelation co_relation(const Poset& p) {
  std::vector<ElementSet> rows;
  rows.reserve(p.size());
  for (ElementIndex x = 0; x < p.size(); ++x) rows.push_back(~(p.up(x) | p.down(x)));
  return {RelationKind::co, std::move(rows)};
}

namespace detail {

// Bron–Kerbosch with Tomita pivoting. `adjacent[x]` must exclude x.
template <class Emit>
void bron_kerbosch(const std::vector<ElementSet>& adjacent, ElementSet& clique, ElementSet candidates,
                   ElementSet excluded, Emit& emit) {
  if (candidates.empty()) {
    if (excluded.empty()) emit(clique);
    return;
  }
  ElementIndex pivot = kNoElement;
  std::size_t best = 0;
  (candidates | excluded).for_each([&](ElementIndex u) {
    auto n = (candidates & adjacent[u]).size();
    if (pivot == kNoElement || n > best) {
      pivot = u;
      best = n;
    }
  });
  ElementSet branch = candidates - adjacent[pivot];
  branch.for_each([&](ElementIndex v) {
    clique.insert(v);
    bron_kerbosch(adjacent, clique, candidates & adjacent[v], excluded & adjacent[v], emit);
    clique.erase(v);
    candidates.erase(v);
    excluded.insert(v);
  });
}

}  // namespace detail

// All maximal cliques inside `within`, in canonical order. Self loops in
// `relation` are ignored.
inline std::vector<ElementSet> maximal_cliques(const std::vector<ElementSet>& relation,
                                               const ElementSet& within) {
  const std::size_t n = within.universe_size();
  std::vector<ElementSet> adjacent;
  adjacent.reserve(n);
  for (ElementIndex x = 0; x < n; ++x) {
    ElementSet row = relation[x] & within;
    if (row.contains(x)) row.erase(x);
    adjacent.push_back(std::move(row));
  }
  std::vector<ElementSet> out;
  ElementSet clique(n);
  auto emit = [&](const ElementSet& c) { out.push_back(c); };
  detail::bron_kerbosch(adjacent, clique, within, ElementSet(n), emit);
  sort_canonical(out);
  return out;
}

// Maximal cliques of co ∪ id.
inline std::vector<ElementSet> cuts(const Poset& p) {
  return maximal_cliques(co_relation(p).rows(), p.universe());
}

// Maximal cliques of li.
inline std::vector<ElementSet> lines(const Poset& p) {
  return maximal_cliques(li_relation(p).rows(), p.universe());
}

// Every co-clique of conditions, including the empty set, in canonical order.
inline std::vector<ElementSet> b_cosets(const OccurrenceNet& net, const SymmetricRelation& co) {
  std::vector<ElementSet> out;
  ElementSet current(net.size());
  // Extend `current` only with candidates of larger index so each clique is
  // produced once.
  auto extend = [&](auto& self, const ElementSet& candidates) -> void {
    out.push_back(current);
    candidates.for_each([&](ElementIndex b) {
      current.insert(b);
      ElementSet next = candidates & co.row(b);
      for (ElementIndex i = next.first(); i != kNoElement && i <= b; i = next.next(i + 1)) next.erase(i);
      self(self, next);
      current.erase(b);
    });
  };
  extend(extend, net.conditions());
  sort_canonical(out);
  return out;
}

inline std::vector<ElementSet> b_cosets(const OccurrenceNet& net) {
  return b_cosets(net, co_relation(poset_of(net)));
}

// Co-cliques of conditions that no further condition extends.
inline std::vector<ElementSet> b_cuts(const OccurrenceNet& net, const SymmetricRelation& co) {
  return maximal_cliques(co.rows(), net.conditions());
}

inline std::vector<ElementSet> b_cuts(const OccurrenceNet& net) {
  return b_cuts(net, co_relation(poset_of(net)));
}

inline bool is_coset(const SymmetricRelation& co, const ElementSet& s) {
  bool ok = true;
  s.for_each([&](ElementIndex x) { ok = ok && (s - ElementSet(s.universe_size(), {x})).is_subset_of(co.row(x)); });
  return ok;
}

inline bool is_b_coset(const OccurrenceNet& net, const SymmetricRelation& co, const ElementSet& s) {
  return s.is_subset_of(net.conditions()) && is_coset(co, s);
}

enum class DensityProperty { n_dense, k_dense };

// Premise of N-density: y < v, y < x, w < v, y co w, w co x, x co v.
struct NQuadruple {
  ElementIndex x, y, v, w;
  friend bool operator==(const NQuadruple&, const NQuadruple&) = default;
};

struct LineCutWitness {
  ElementSet line;
  ElementSet cut;
};

struct DensityReport {
  DensityProperty property;
  bool holds = true;
  std::variant<std::monostate, NQuadruple, LineCutWitness> witness;
};

// True when some z satisfies y < z < v, w co z, z co x.
inline bool has_n_interpolant(const Poset& p, const SymmetricRelation& co, const NQuadruple& q) {
  ElementSet between = p.strictly_above(q.y) & p.strictly_below(q.v);
  between &= co.row(q.w);
  between &= co.row(q.x);
  return !between.empty();
}

inline bool n_premise(const Poset& p, const SymmetricRelation& co, const NQuadruple& q) {
  return p.less(q.y, q.v) && p.less(q.y, q.x) && p.less(q.w, q.v) && co.related(q.y, q.w) &&
         co.related(q.w, q.x) && co.related(q.x, q.v);
}

// Scans every quadruple matching the N-shape premise; the first one without
// an interpolating z (in x, y, v, w index order) is the witness.
inline DensityReport is_n_dense(const Poset& p) {
  const auto co = co_relation(p);
  DensityReport r{DensityProperty::n_dense, true, {}};
  const std::size_t n = p.size();
  for (ElementIndex x = 0; x < n; ++x) {
    for (ElementIndex y = 0; y < n; ++y) {
      if (!p.less(y, x)) continue;
      for (ElementIndex v = 0; v < n; ++v) {
        if (!p.less(y, v) || !co.related(x, v)) continue;
        for (ElementIndex w = 0; w < n; ++w) {
          NQuadruple q{x, y, v, w};
          if (!p.less(w, v) || !co.related(y, w) || !co.related(w, x)) continue;
          if (!has_n_interpolant(p, co, q)) {
            r.holds = false;
            r.witness = q;
            return r;
          }
        }
      }
    }
  }
  return r;
}

// Every line meets every cut. Throws std::logic_error if some line and cut
// share more than one element, which no partial order allows.
inline DensityReport is_k_dense(const std::vector<ElementSet>& all_cuts,
                                const std::vector<ElementSet>& all_lines) {
  DensityReport r{DensityProperty::k_dense, true, {}};
  for (const auto& l : all_lines) {
    for (const auto& c : all_cuts) {
      auto common = (l & c).size();
      if (common > 1) throw std::logic_error("line and cut share more than one element");
      if (common == 0 && r.holds) {
        r.holds = false;
        r.witness = LineCutWitness{l, c};
      }
    }
  }
  return r;
}

inline DensityReport is_k_dense(const Poset& p) { return is_k_dense(cuts(p), lines(p)); }

}  // namespace ocnet
