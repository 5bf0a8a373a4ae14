// Bounded search for the two counterexample classes that cannot be read off
// a figure:
//   grid_non_kdense     a non-K-dense occurrence net with a B-cut c such that
//                       c^⊥ = ∅ and φ(c) ⊂ X
//   boolean_non_ndense  a non-N-dense poset whose closed-set lattice is
//                       orthomodular (Boolean with four atoms preferred)
//
// Posets are enumerated exhaustively up to --exhaustive elements (every poset
// has a linear extension, so naturally labelled DAGs cover all of them) and
// sampled at random beyond that. Nets are sampled with random_net.

#include <cstdint>
#include <iostream>
#include <optional>
#include <unordered_set>
#include <vector>

#include "CLI11.hpp"
#include "ocnet/causal.hpp"
#include "ocnet/io.hpp"
#include "ocnet/lattice.hpp"
#include "ocnet/netgen.hpp"
#include "ocnet/relations.hpp"

using namespace ocnet;

namespace {

struct PosetStats {
  std::size_t posets = 0;
  std::size_t non_n_dense = 0;
  std::size_t orthomodular = 0;
};

bool is_candidate(const Poset& p, PosetStats& stats) {
  ++stats.posets;
  if (is_n_dense(p).holds) return false;
  ++stats.non_n_dense;
  OrthoLattice lattice{ClosureContext(p)};
  if (!check_orthomodular(lattice).holds) return false;
  ++stats.orthomodular;
  return true;
}

std::optional<Poset> exhaustive_posets(std::size_t n, PosetStats& stats) {
  const std::size_t pairs = n * (n - 1) / 2;
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    // Cheap closure on byte rows for deduplication before building a Poset.
    std::uint8_t up[8] = {};
    std::uint8_t adjacent[8] = {};
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j, ++bit)
        if ((mask >> bit) & 1U) adjacent[i] |= static_cast<std::uint8_t>(1U << j);
    std::uint64_t key = 0;
    for (std::size_t i = n; i-- > 0;) {
      up[i] = static_cast<std::uint8_t>(1U << i);
      for (std::size_t j = i + 1; j < n; ++j)
        if ((adjacent[i] >> j) & 1U) up[i] |= up[j];
      key |= std::uint64_t{up[i]} << (8 * i);
    }
    if (!seen.insert(key).second) continue;
    std::vector<std::pair<ElementIndex, ElementIndex>> order;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if ((up[i] >> j) & 1U) order.emplace_back(i, j);
    auto poset = Poset::from_pairs(labels, order);
    if (is_candidate(poset, stats)) return poset;
  }
  return std::nullopt;
}

struct NetStats {
  std::size_t nets = 0;
  std::size_t non_k_dense = 0;
};

bool separates(const OccurrenceNet& net, NetStats& stats) {
  ++stats.nets;
  CausalContext ctx(net);
  if (is_k_dense(ctx.poset()).holds) return false;
  ++stats.non_k_dense;
  const auto universe = ElementSet::full(net.size());
  for (const auto& c : b_cuts(net, ctx.co())) {
    if (!ctx.closure_context().orthocomplement(c).empty()) continue;
    if (phi(ctx, c) != universe) return true;
  }
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bounded search for counterexample fixtures"};
  std::size_t exhaustive = 7;
  std::size_t random_max = 10;
  std::uint64_t samples = 20000;
  std::size_t net_max = 16;
  app.add_option("--exhaustive", exhaustive, "enumerate every poset up to this size (<= 8)")->check(CLI::Range(1, 8));
  app.add_option("--random-max", random_max, "largest random poset size");
  app.add_option("--samples", samples, "random samples per size");
  app.add_option("--net-max", net_max, "largest random net size");
  CLI11_PARSE(app, argc, argv);

  PosetStats pstats;
  std::optional<Poset> found;
  for (std::size_t n = 1; n <= exhaustive && !found; ++n) found = exhaustive_posets(n, pstats);
  for (std::size_t n = exhaustive + 1; n <= random_max && !found; ++n) {
    for (std::uint64_t seed = 1; seed <= samples && !found; ++seed) {
      double p = 0.1 + 0.6 * static_cast<double>(seed % 1000) / 1000.0;
      auto poset = random_poset({seed, n, p});
      if (is_candidate(poset, pstats)) found = poset;
    }
  }
  std::cout << "# posets examined: " << pstats.posets << ", non-N-dense: " << pstats.non_n_dense
            << ", of which orthomodular: " << pstats.orthomodular << '\n';
  if (found) std::cout << "# boolean_non_ndense candidate\n" << serialize_poset(*found);
  else std::cout << "# boolean_non_ndense: none found\n";

  NetStats nstats;
  std::optional<OccurrenceNet> grid;
  for (std::size_t total = 3; total <= net_max && !grid; ++total) {
    for (std::size_t events = 1; events * 2 + 1 <= total && !grid; ++events) {
      for (std::uint64_t seed = 1; seed <= samples / 10 && !grid; ++seed) {
        auto net = random_net({seed, total - events, events, 3, 0.5});
        if (separates(net, nstats)) grid = net;
      }
    }
  }
  std::cout << "# nets examined: " << nstats.nets << ", non-K-dense: " << nstats.non_k_dense << '\n';
  if (grid) std::cout << "# grid_non_kdense candidate\n" << serialize_net(*grid);
  else std::cout << "# grid_non_kdense: none found\n";
  return found && grid ? 0 : 1;
}
