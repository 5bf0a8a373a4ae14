#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ocnet/io.hpp"
#include "ocnet/lattice.hpp"
#include "ocnet/net.hpp"
#include "ocnet/poset.hpp"

namespace ocnet {

// SplitMix64. Fully specified so that generated structures are identical on
// every platform; std distributions are deliberately not used.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  double unit() { return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0); }

  bool chance(double p) { return unit() < p; }

 private:
  std::uint64_t state_;
};

class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GenParams {
  std::uint64_t seed = 1;
  std::size_t max_conditions = 8;
  std::size_t max_events = 3;
  std::size_t layers = 3;
  double arc_density = 0.3;
};

struct PosetGenParams {
  std::uint64_t seed = 1;
  std::size_t size = 6;
  double edge_probability = 0.3;
};

// Builds a net event by event. Events get a layer; an event consumes
// conditions that are still unconsumed, preferring ones produced in earlier
// layers, and produces fresh postconditions. Every condition therefore has at
// most one producer and one consumer and the net is acyclic by construction.
// Exactly `max_events` events are generated; the condition count never
// exceeds `max_conditions`.
inline OccurrenceNet random_net(const GenParams& params) {
  if (params.max_conditions < 1) throw InvalidParams("max_conditions must be at least 1");
  if (!(params.arc_density >= 0.0 && params.arc_density <= 1.0))
    throw InvalidParams("arc_density must lie in [0, 1]");
  if (params.max_events > 0 && params.layers < 1) throw InvalidParams("events need at least one layer");
  if (params.max_events > 0 && params.max_conditions < params.max_events + 1)
    throw InvalidParams("max_conditions must exceed max_events");

  SplitMix64 rng(params.seed);
  const std::size_t budget = params.max_conditions;
  const std::size_t events = params.max_events;

  std::vector<std::size_t> layer(events);
  for (auto& l : layer) l = static_cast<std::size_t>(rng.below(params.layers));
  std::sort(layer.begin(), layer.end());

  NetCandidate net;
  std::size_t conditions = 0;
  struct Available {
    std::string label;
    std::size_t layer;  // producer layer + 1; 0 for initial conditions
  };
  std::vector<Available> available;

  auto fresh_condition = [&](std::size_t produced_in) {
    std::string label = "b" + std::to_string(conditions++);
    net.cond(label);
    available.push_back({label, produced_in});
    return label;
  };

  for (std::size_t i = 0; i < events; ++i) {
    const std::size_t here = layer[i] + 1;
    const std::size_t later_posts = events - i - 1;
    std::string event = "e" + std::to_string(i);

    std::size_t want_pre = 1;
    while (want_pre < 4 && rng.chance(params.arc_density)) ++want_pre;
    std::vector<std::string> pres;
    for (std::size_t j = 0; j < want_pre; ++j) {
      std::vector<std::size_t> earlier;
      for (std::size_t k = 0; k < available.size(); ++k)
        if (available[k].layer < here) earlier.push_back(k);
      const bool can_fresh = conditions + 1 + 1 + later_posts <= budget;
      std::size_t pick;
      if (!earlier.empty() && (!can_fresh || rng.chance(0.7))) {
        pick = earlier[rng.below(earlier.size())];
      } else if (can_fresh) {
        fresh_condition(0);
        pick = available.size() - 1;
      } else if (j == 0) {
        // Budget exhausted: any unconsumed condition from an earlier event
        // keeps the net acyclic. One exists because every event leaves its
        // own postconditions unconsumed.
        pick = rng.below(available.size());
      } else {
        break;
      }
      pres.push_back(available[pick].label);
      available.erase(available.begin() + static_cast<std::ptrdiff_t>(pick));
    }

    net.event(event);
    for (const auto& p : pres) net.arc(p, event);

    std::size_t want_post = 1;
    while (want_post < 3 && rng.chance(params.arc_density)) ++want_post;
    want_post = std::min(want_post, budget - conditions - later_posts);
    for (std::size_t j = 0; j < want_post; ++j) net.arc(event, fresh_condition(here));
  }

  while (conditions < budget) {
    if (rng.chance(0.2)) fresh_condition(0);
    else break;
  }
  return OccurrenceNet::build(net);
}

// Transitive closure of a random DAG: edges follow a random permutation.
inline Poset random_poset(const PosetGenParams& params) {
  if (!(params.edge_probability >= 0.0 && params.edge_probability <= 1.0))
    throw InvalidParams("edge_probability must lie in [0, 1]");
  SplitMix64 rng(params.seed);
  const std::size_t n = params.size;
  std::vector<ElementIndex> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  std::vector<std::pair<ElementIndex, ElementIndex>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.chance(params.edge_probability)) pairs.emplace_back(perm[i], perm[j]);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return Poset::from_pairs(std::move(labels), pairs);
}

using Fixture = std::variant<OccurrenceNet, Poset, AbstractLattice>;

class FixtureUnavailable : public std::runtime_error {
 public:
  explicit FixtureUnavailable(const std::string& name)
      : std::runtime_error("fixture '" + name + "' has no known finite instance") {}
};

namespace detail {

struct FixtureSource {
  std::string_view name;
  DocumentKind kind;
  std::string_view text;
};

// Fixture sources, in canonical serialized form. An empty text marks a
// fixture whose class has no known finite instance.
inline constexpr FixtureSource kFixtures[] = {
    {"n_poset", DocumentKind::poset,
     "version 1\n"
     "elem y w x v\n"
     "le y x\n"
     "le y v\n"
     "le w v\n"},
    {"chain3", DocumentKind::net,
     "version 1\n"
     "cond b1 b2\n"
     "event e1\n"
     "arc b1 e1\n"
     "arc e1 b2\n"},
    {"two_chains", DocumentKind::net,
     "version 1\n"
     "cond b1\n"
     "event e\n"
     "cond b2 b3\n"
     "event f\n"
     "cond b4\n"
     "arc b1 e\n"
     "arc e b2\n"
     "arc b3 f\n"
     "arc f b4\n"},
    // 2x2 grid of events; column/row indices in the labels. Finite
    // truncations of the grid are K-dense (see README, known limitations).
    {"grid_non_kdense", DocumentKind::net,
     "version 1\n"
     "cond h00 h01 v00 v10\n"
     "event e00\n"
     "cond h10 v01\n"
     "event e10\n"
     "cond h20 v11\n"
     "event e01\n"
     "cond h11 v02\n"
     "event e11\n"
     "cond h21 v12\n"
     "arc h00 e00\n"
     "arc h01 e01\n"
     "arc v00 e00\n"
     "arc v10 e10\n"
     "arc e00 h10\n"
     "arc e00 v01\n"
     "arc h10 e10\n"
     "arc v01 e01\n"
     "arc e10 h20\n"
     "arc e10 v11\n"
     "arc v11 e11\n"
     "arc e01 h11\n"
     "arc e01 v02\n"
     "arc h11 e11\n"
     "arc e11 h21\n"
     "arc e11 v12\n"},
    // No instance found: bounded search (tools/fixture_search) over every
    // poset with at most 8 elements finds no non-N-dense poset with an
    // orthomodular lattice of closed sets.
    {"boolean_non_ndense", DocumentKind::poset, ""},
    {"fig1_oml", DocumentKind::lattice,
     "version 1\n"
     "elem zero a a_c b b_c one\n"
     "le zero a\n"
     "le zero a_c\n"
     "le zero b\n"
     "le zero b_c\n"
     "le a one\n"
     "le a_c one\n"
     "le b one\n"
     "le b_c one\n"
     "ortho zero one\n"
     "ortho a a_c\n"
     "ortho a_c a\n"
     "ortho b b_c\n"
     "ortho b_c b\n"
     "ortho one zero\n"},
};

inline const FixtureSource& fixture_source(std::string_view name) {
  for (const auto& f : kFixtures)
    if (f.name == name) return f;
  throw LookupError("unknown fixture '" + std::string(name) + "'");
}

}  // namespace detail

inline std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& f : detail::kFixtures) out.emplace_back(f.name);
  return out;
}

inline DocumentKind fixture_kind(std::string_view name) { return detail::fixture_source(name).kind; }

inline std::string fixture_text(std::string_view name) {
  const auto& src = detail::fixture_source(name);
  if (src.text.empty()) throw FixtureUnavailable(std::string(name));
  return std::string(src.text);
}

inline bool fixture_available(std::string_view name) { return !detail::fixture_source(name).text.empty(); }

inline Fixture fixture(std::string_view name) {
  const auto& src = detail::fixture_source(name);
  if (src.text.empty()) throw FixtureUnavailable(std::string(name));
  switch (src.kind) {
    case DocumentKind::net: return parse_net(src.text);
    case DocumentKind::poset: return parse_poset(src.text);
    case DocumentKind::lattice: return parse_lattice(src.text);
  }
  throw LookupError("unknown fixture kind");
}

}  // namespace ocnet
