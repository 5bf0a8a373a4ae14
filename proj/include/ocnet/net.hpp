#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ocnet/element_set.hpp"

namespace ocnet {

enum class ElementKind { condition, event };

inline const char* to_string(ElementKind k) {
  return k == ElementKind::condition ? "condition" : "event";
}

// Malformed input that is not a statement about net axioms: duplicate labels,
// arcs over undeclared elements, an element declared with both kinds.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unknown element label or out-of-range index.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct Arc {
  ElementIndex from = 0;
  ElementIndex to = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Unvalidated net description. Elements are referenced by label.
struct NetCandidate {
  struct Declaration {
    std::string label;
    ElementKind kind;
  };
  std::vector<Declaration> elements;
  std::vector<std::pair<std::string, std::string>> arcs;

  NetCandidate& cond(std::string label) {
    elements.push_back({std::move(label), ElementKind::condition});
    return *this;
  }
  NetCandidate& event(std::string label) {
    elements.push_back({std::move(label), ElementKind::event});
    return *this;
  }
  NetCandidate& arc(std::string from, std::string to) {
    arcs.emplace_back(std::move(from), std::move(to));
    return *this;
  }
};

enum class NetAxiom {
  same_kind_arc,
  event_without_precondition,
  event_without_postcondition,
  condition_multiple_producers,
  condition_multiple_consumers,
  cycle,
};

inline const char* to_string(NetAxiom a) {
  switch (a) {
    case NetAxiom::same_kind_arc: return "arc between elements of the same kind";
    case NetAxiom::event_without_precondition: return "event without precondition";
    case NetAxiom::event_without_postcondition: return "event without postcondition";
    case NetAxiom::condition_multiple_producers: return "condition with more than one producer";
    case NetAxiom::condition_multiple_consumers: return "condition with more than one consumer";
    case NetAxiom::cycle: return "cycle";
  }
  return "?";
}

struct Violation {
  NetAxiom axiom;
  // Element labels; for a cycle the path closes on its first element.
  std::vector<std::string> witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

class InvalidNet : public std::runtime_error {
 public:
  explicit InvalidNet(ValidationReport report)
      : std::runtime_error(describe(report)), report_(std::move(report)) {}
  const ValidationReport& report() const noexcept { return report_; }

 private:
  static std::string describe(const ValidationReport& r) {
    std::ostringstream os;
    os << "invalid occurrence net:";
    for (const auto& v : r.violations) {
      os << " [" << to_string(v.axiom) << ":";
      for (const auto& w : v.witness) os << ' ' << w;
      os << ']';
    }
    return os.str();
  }
  ValidationReport report_;
};

namespace detail {

// Structural resolution of a candidate: label -> index, arcs as indices.
struct ResolvedCandidate {
  std::vector<std::string> labels;
  std::vector<ElementKind> kinds;
  std::vector<Arc> arcs;
};

inline ResolvedCandidate resolve(const NetCandidate& raw) {
  ResolvedCandidate r;
  std::map<std::string, ElementIndex> index;
  for (const auto& d : raw.elements) {
    auto [it, inserted] = index.emplace(d.label, r.labels.size());
    if (!inserted) {
      if (r.kinds[it->second] != d.kind)
        throw StructuralError("label '" + d.label + "' declared as both condition and event");
      throw StructuralError("duplicate label '" + d.label + "'");
    }
    r.labels.push_back(d.label);
    r.kinds.push_back(d.kind);
  }
  for (const auto& [from, to] : raw.arcs) {
    auto f = index.find(from);
    auto t = index.find(to);
    if (f == index.end()) throw StructuralError("arc references undeclared element '" + from + "'");
    if (t == index.end()) throw StructuralError("arc references undeclared element '" + to + "'");
    r.arcs.push_back({f->second, t->second});
  }
  std::sort(r.arcs.begin(), r.arcs.end());
  r.arcs.erase(std::unique(r.arcs.begin(), r.arcs.end()), r.arcs.end());
  return r;
}

// Reachability by Warshall over successor bit rows: reach[i] = F+ successors.
inline std::vector<ElementSet> transitive_closure(std::size_t n, const std::vector<Arc>& arcs) {
  std::vector<ElementSet> reach(n, ElementSet(n));
  for (const auto& a : arcs) reach[a.from].insert(a.to);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i].contains(k)) reach[i] |= reach[k];
  return reach;
}

inline ValidationReport check_axioms(const ResolvedCandidate& r) {
  ValidationReport report;
  const std::size_t n = r.labels.size();
  std::vector<std::vector<ElementIndex>> pre(n), post(n), succ(n);
  for (const auto& a : r.arcs) {
    succ[a.from].push_back(a.to);
    if (r.kinds[a.from] == r.kinds[a.to]) {
      report.violations.push_back({NetAxiom::same_kind_arc, {r.labels[a.from], r.labels[a.to]}});
      continue;
    }
    post[a.from].push_back(a.to);
    pre[a.to].push_back(a.from);
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (r.kinds[x] == ElementKind::event) {
      if (pre[x].empty())
        report.violations.push_back({NetAxiom::event_without_precondition, {r.labels[x]}});
      if (post[x].empty())
        report.violations.push_back({NetAxiom::event_without_postcondition, {r.labels[x]}});
    } else {
      if (pre[x].size() > 1) {
        std::vector<std::string> w{r.labels[x]};
        for (auto p : pre[x]) w.push_back(r.labels[p]);
        report.violations.push_back({NetAxiom::condition_multiple_producers, std::move(w)});
      }
      if (post[x].size() > 1) {
        std::vector<std::string> w{r.labels[x]};
        for (auto p : post[x]) w.push_back(r.labels[p]);
        report.violations.push_back({NetAxiom::condition_multiple_consumers, std::move(w)});
      }
    }
  }

  // One cycle witness per strongly connected component with a cycle,
  // anchored at the component's smallest element.
  auto reach = transitive_closure(n, r.arcs);
  ElementSet reported(n);
  for (ElementIndex x = 0; x < n; ++x) {
    if (!reach[x].contains(x) || reported.contains(x)) continue;
    ElementSet component(n);
    for (ElementIndex y = 0; y < n; ++y)
      if (reach[x].contains(y) && reach[y].contains(x)) component.insert(y);
    reported |= component;

    // BFS inside the component from x back to x.
    std::vector<ElementIndex> parent(n, kNoElement);
    std::vector<ElementIndex> queue{x};
    ElementIndex closing = kNoElement;
    for (std::size_t head = 0; head < queue.size() && closing == kNoElement; ++head) {
      ElementIndex u = queue[head];
      for (auto v : succ[u]) {
        if (v == x) {
          closing = u;
          break;
        }
        if (component.contains(v) && parent[v] == kNoElement) {
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    std::vector<std::string> path;
    for (ElementIndex u = closing; u != x; u = parent[u]) path.push_back(r.labels[u]);
    path.push_back(r.labels[x]);
    std::reverse(path.begin(), path.end());
    path.push_back(r.labels[x]);
    report.violations.push_back({NetAxiom::cycle, std::move(path)});
  }
  return report;
}

}  // namespace detail

// Checks every occurrence-net axiom and reports all violations. Structural
// problems (undeclared or duplicate labels) throw StructuralError instead.
inline ValidationReport validate_net(const NetCandidate& raw) {
  return detail::check_axioms(detail::resolve(raw));
}

// A finite occurrence net (B, E, F). Immutable; only constructible from a
// candidate that passes validate_net.
class OccurrenceNet {
 public:
  OccurrenceNet() = default;

  static OccurrenceNet build(const NetCandidate& raw) {
    auto resolved = detail::resolve(raw);
    auto report = detail::check_axioms(resolved);
    if (!report.ok()) throw InvalidNet(std::move(report));
    return OccurrenceNet(std::move(resolved));
  }

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(ElementIndex x) const { return labels_.at(check(x)); }
  ElementKind kind(ElementIndex x) const { return kinds_.at(check(x)); }
  bool is_condition(ElementIndex x) const { return kind(x) == ElementKind::condition; }
  bool is_event(ElementIndex x) const { return kind(x) == ElementKind::event; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  const ElementSet& conditions() const noexcept { return conditions_; }
  const ElementSet& events() const noexcept { return events_; }

  // F-neighbours: the preset •x and postset x•.
  const ElementSet& preset(ElementIndex x) const { return pre_.at(check(x)); }
  const ElementSet& postset(ElementIndex x) const { return post_.at(check(x)); }

  bool has_arc(ElementIndex from, ElementIndex to) const {
    return post_.at(check(from)).contains(to);
  }

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

  NetCandidate to_candidate() const {
    NetCandidate c;
    for (std::size_t i = 0; i < size(); ++i) c.elements.push_back({labels_[i], kinds_[i]});
    for (const auto& a : arcs_) c.arcs.emplace_back(labels_[a.from], labels_[a.to]);
    return c;
  }

  friend bool operator==(const OccurrenceNet& a, const OccurrenceNet& b) {
    return a.labels_ == b.labels_ && a.kinds_ == b.kinds_ && a.arcs_ == b.arcs_;
  }

 private:
  explicit OccurrenceNet(detail::ResolvedCandidate r)
      : labels_(std::move(r.labels)), kinds_(std::move(r.kinds)), arcs_(std::move(r.arcs)) {
    const std::size_t n = labels_.size();
    conditions_ = ElementSet(n);
    events_ = ElementSet(n);
    pre_.assign(n, ElementSet(n));
    post_.assign(n, ElementSet(n));
    for (std::size_t i = 0; i < n; ++i) {
      (kinds_[i] == ElementKind::condition ? conditions_ : events_).insert(i);
      index_.emplace(labels_[i], i);
    }
    for (const auto& a : arcs_) {
      post_[a.from].insert(a.to);
      pre_[a.to].insert(a.from);
    }
  }

  ElementIndex check(ElementIndex x) const {
    if (x >= labels_.size())
      throw LookupError("element index " + std::to_string(x) + " not in net");
    return x;
  }

  std::vector<std::string> labels_;
  std::vector<ElementKind> kinds_;
  std::vector<Arc> arcs_;
  std::map<std::string, ElementIndex> index_;
  ElementSet conditions_;
  ElementSet events_;
  std::vector<ElementSet> pre_;
  std::vector<ElementSet> post_;
};

}  // namespace ocnet
