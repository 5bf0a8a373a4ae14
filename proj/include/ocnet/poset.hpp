#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ocnet/element_set.hpp"
#include "ocnet/net.hpp"

namespace ocnet {

class InvalidOrder : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Finite partially ordered set. Row x of the order holds {y | x <= y}.
class Poset {
 public:
  Poset() = default;

  // Takes the reflexive-transitive closure of `pairs` (a <= b) and rejects
  // the result if it is not antisymmetric.
  static Poset from_pairs(std::vector<std::string> labels,
                          const std::vector<std::pair<ElementIndex, ElementIndex>>& pairs) {
    const std::size_t n = labels.size();
    std::vector<Arc> arcs;
    for (auto [a, b] : pairs) {
      if (a >= n || b >= n) throw LookupError("order pair references element outside universe");
      if (a != b) arcs.push_back({a, b});
    }
    auto up = detail::transitive_closure(n, arcs);
    for (std::size_t i = 0; i < n; ++i) up[i].insert(i);
    return Poset(std::move(labels), std::move(up));
  }

  // Validates reflexivity, antisymmetry and transitivity of the given matrix.
  static Poset from_matrix(std::vector<std::string> labels, std::vector<ElementSet> up) {
    const std::size_t n = labels.size();
    if (up.size() != n) throw InvalidOrder("order matrix has wrong number of rows");
    for (std::size_t x = 0; x < n; ++x) {
      if (up[x].universe_size() != n) throw InvalidOrder("order matrix row has wrong width");
      if (!up[x].contains(x)) throw InvalidOrder("not reflexive at '" + labels[x] + "'");
      bool transitive = true;
      up[x].for_each([&](ElementIndex y) { transitive = transitive && up[y].is_subset_of(up[x]); });
      if (!transitive) throw InvalidOrder("not transitive at '" + labels[x] + "'");
    }
    return Poset(std::move(labels), std::move(up));
  }

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(ElementIndex x) const { return labels_.at(check(x)); }

  bool leq(ElementIndex x, ElementIndex y) const { return up_.at(check(x)).contains(y); }
  bool less(ElementIndex x, ElementIndex y) const { return x != y && leq(x, y); }
  bool comparable(ElementIndex x, ElementIndex y) const { return leq(x, y) || leq(y, x); }

  // {y | x <= y} and {y | y <= x}.
  const ElementSet& up(ElementIndex x) const { return up_.at(check(x)); }
  const ElementSet& down(ElementIndex x) const { return down_.at(check(x)); }

  ElementSet strictly_above(ElementIndex x) const { return up(x) - ElementSet(size(), {x}); }
  ElementSet strictly_below(ElementIndex x) const { return down(x) - ElementSet(size(), {x}); }

  ElementSet universe() const { return ElementSet::full(size()); }
  ElementSet empty_set() const { return ElementSet(size()); }

  ElementIndex index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw LookupError("unknown element '" + label + "'");
    return it->second;
  }

  ElementSet set_of(const std::vector<std::string>& labels) const {
    ElementSet s(size());
    for (const auto& l : labels) s.insert(index_of(l));
    return s;
  }

  // Covering pairs x ⋖ y in index order.
  std::vector<Arc> covers() const {
    std::vector<Arc> out;
    for (ElementIndex x = 0; x < size(); ++x)
      upper_covers(x).for_each([&](ElementIndex y) { out.push_back({x, y}); });
    return out;
  }

  ElementSet upper_covers(ElementIndex x) const {
    ElementSet result = strictly_above(x);
    ElementSet strict = result;
    strict.for_each([&](ElementIndex z) { result -= strictly_above(z); });
    return result;
  }

  ElementSet lower_covers(ElementIndex x) const {
    ElementSet result = strictly_below(x);
    ElementSet strict = result;
    strict.for_each([&](ElementIndex z) { result -= strictly_below(z); });
    return result;
  }

  // Restriction of the order to the members of `subset`, reindexed densely
  // in increasing index order. `mapping[i]` gives the original index.
  Poset induced(const ElementSet& subset, std::vector<ElementIndex>* mapping = nullptr) const {
    auto members = subset.members();
    const std::size_t m = members.size();
    std::vector<std::string> labels;
    std::vector<ElementSet> up(m, ElementSet(m));
    for (std::size_t i = 0; i < m; ++i) {
      labels.push_back(labels_[members[i]]);
      for (std::size_t j = 0; j < m; ++j)
        if (leq(members[i], members[j])) up[i].insert(j);
    }
    if (mapping) *mapping = members;
    return Poset(std::move(labels), std::move(up));
  }

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.labels_ == b.labels_ && a.up_ == b.up_;
  }

 private:
  Poset(std::vector<std::string> labels, std::vector<ElementSet> up)
      : labels_(std::move(labels)), up_(std::move(up)) {
    const std::size_t n = labels_.size();
    down_.assign(n, ElementSet(n));
    for (std::size_t x = 0; x < n; ++x) {
      up_[x].for_each([&](ElementIndex y) { down_[y].insert(x); });
      if (!index_.emplace(labels_[x], x).second)
        throw StructuralError("duplicate label '" + labels_[x] + "'");
    }
    for (std::size_t x = 0; x < n; ++x) {
      ElementSet both = up_[x] & down_[x];
      if (both.size() != 1)
        throw InvalidOrder("not antisymmetric: '" + labels_[x] + "' and '" +
                           labels_[(both - ElementSet(n, {x})).first()] + "'");
    }
  }

  ElementIndex check(ElementIndex x) const {
    if (x >= labels_.size())
      throw LookupError("element index " + std::to_string(x) + " not in poset");
    return x;
  }

  std::vector<std::string> labels_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::map<std::string, ElementIndex> index_;
};

// (X, ⊑) with X = B ∪ E and ⊑ = F*. Indices and labels follow the net.
inline Poset poset_of(const OccurrenceNet& net) {
  std::vector<std::pair<ElementIndex, ElementIndex>> pairs;
  for (const auto& a : net.arcs()) pairs.emplace_back(a.from, a.to);
  return Poset::from_pairs(net.labels(), pairs);
}

inline const ElementSet& preset(const OccurrenceNet& net, ElementIndex x) { return net.preset(x); }
inline const ElementSet& postset(const OccurrenceNet& net, ElementIndex x) { return net.postset(x); }
inline ElementSet preset(const Poset& p, ElementIndex x) { return p.lower_covers(x); }
inline ElementSet postset(const Poset& p, ElementIndex x) { return p.upper_covers(x); }

// [x, y]; empty when x is not below y.
inline ElementSet interval(const Poset& p, ElementIndex x, ElementIndex y) {
  return p.up(x) & p.down(y);
}

// F^-(S): elements outside S strictly below some member of S.
inline ElementSet past(const Poset& p, const ElementSet& s) {
  ElementSet out(p.size());
  s.for_each([&](ElementIndex y) { out |= p.down(y); });
  return out - s;
}

// F^+(S): elements outside S strictly above some member of S.
inline ElementSet future(const Poset& p, const ElementSet& s) {
  ElementSet out(p.size());
  s.for_each([&](ElementIndex y) { out |= p.up(y); });
  return out - s;
}

struct IntervalFiniteReport {
  bool holds = true;
  std::size_t max_interval = 0;
  ElementIndex witness_low = kNoElement;
  ElementIndex witness_high = kNoElement;
};

struct DegreeFiniteReport {
  bool holds = true;
  std::size_t max_in = 0;
  std::size_t max_out = 0;
};

// Always holds on a finite poset; the maxima are the useful output.
inline IntervalFiniteReport check_interval_finite(const Poset& p) {
  IntervalFiniteReport r;
  for (ElementIndex x = 0; x < p.size(); ++x) {
    p.up(x).for_each([&](ElementIndex y) {
      auto n = interval(p, x, y).size();
      if (n > r.max_interval) {
        r.max_interval = n;
        r.witness_low = x;
        r.witness_high = y;
      }
    });
  }
  return r;
}

inline DegreeFiniteReport check_degree_finite(const Poset& p) {
  DegreeFiniteReport r;
  for (ElementIndex x = 0; x < p.size(); ++x) {
    r.max_in = std::max(r.max_in, p.lower_covers(x).size());
    r.max_out = std::max(r.max_out, p.upper_covers(x).size());
  }
  return r;
}

}  // namespace ocnet
