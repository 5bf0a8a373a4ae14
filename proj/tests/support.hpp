#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ocnet/netgen.hpp"

namespace testing_support {

// Random net suite: each net gets its own generator seed and parameters
// drawn from a master SplitMix64, so one master seed fixes the whole suite.
inline std::vector<ocnet::OccurrenceNet> random_nets(std::size_t count, std::size_t max_elements,
                                                    std::uint64_t master_seed) {
  ocnet::SplitMix64 rng(master_seed);
  std::vector<ocnet::OccurrenceNet> out;
  while (out.size() < count) {
    ocnet::GenParams g;
    g.seed = rng.next();
    const std::size_t max_events = (max_elements - 1) / 2;
    g.max_events = rng.chance(0.05) ? 0 : 1 + rng.below(max_events);
    const std::size_t lo = g.max_events + 1;
    const std::size_t hi = max_elements - g.max_events;
    g.max_conditions = lo + rng.below(hi - lo + 1);
    g.layers = 1 + rng.below(4);
    g.arc_density = 0.1 * static_cast<double>(1 + rng.below(6));
    out.push_back(ocnet::random_net(g));
  }
  return out;
}

inline std::vector<ocnet::Poset> random_posets(std::size_t count, std::size_t max_elements,
                                               std::uint64_t master_seed) {
  ocnet::SplitMix64 rng(master_seed);
  std::vector<ocnet::Poset> out;
  while (out.size() < count) {
    ocnet::PosetGenParams g;
    g.seed = rng.next();
    g.size = 1 + rng.below(max_elements);
    g.edge_probability = 0.1 * static_cast<double>(1 + rng.below(7));
    out.push_back(ocnet::random_poset(g));
  }
  return out;
}

// Random subset of {0..n-1}, each element with probability p.
inline ocnet::ElementSet random_subset(ocnet::SplitMix64& rng, std::size_t n, double p = 0.3) {
  ocnet::ElementSet s(n);
  for (std::size_t i = 0; i < n; ++i)
    if (rng.chance(p)) s.insert(i);
  return s;
}

inline ocnet::OccurrenceNet net_fixture(const std::string& name) {
  return std::get<ocnet::OccurrenceNet>(ocnet::fixture(name));
}

inline ocnet::Poset poset_fixture(const std::string& name) { return std::get<ocnet::Poset>(ocnet::fixture(name)); }

}  // namespace testing_support
