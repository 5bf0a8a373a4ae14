// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Brute-force references come from oracle.hpp.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "oracle.hpp"
#include "ocnet/ocnet.hpp"
#include "support.hpp"

using namespace ocnet;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      note = what;
    }
  }
};

struct Criterion {
  int number;
  std::string title;
  std::function<Outcome()> run;
};

// 500 nets of at most 24 elements, 100 per master seed.
const std::vector<OccurrenceNet>& suite() {
  static const std::vector<OccurrenceNet> nets = [] {
    std::vector<OccurrenceNet> out;
    for (std::uint64_t seed : {101, 202, 303, 404, 505}) {
      auto part = testing_support::random_nets(100, 24, seed);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }();
  return nets;
}

std::vector<const OccurrenceNet*> suite_up_to(std::size_t max_elements) {
  std::vector<const OccurrenceNet*> out;
  for (const auto& n : suite())
    if (n.size() <= max_elements) out.push_back(&n);
  return out;
}

std::string describe(const Poset& p, const ElementSet& s) {
  std::string out = "{";
  for (auto x : s.members()) out += (out.size() > 1 ? "," : "") + p.label(x);
  return out + "}";
}

Outcome n_poset_regression() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  auto p = std::get<Poset>(fixture("n_poset"));
  ClosureContext ctx(p);
  auto family = enumerate_closed_sets(ctx);
  sort_canonical(family);
  std::vector<ElementSet> expected{p.empty_set(),         p.set_of({"x"}),      p.set_of({"w"}),
                                   p.set_of({"x", "y"}), p.set_of({"w", "v"}), p.universe()};
  sort_canonical(expected);
  o.require(family == expected, "L(P) differs from the six expected sets");
  o.require(ctx.orthocomplement(p.set_of({"w"})) == p.set_of({"x", "y"}), "{w}^perp != {x,y}");

  OrthoLattice l{ctx};
  auto r = check_orthomodular(l);
  o.require(!r.holds, "orthomodular law reported as holding");
  if (!r.holds) {
    o.require(r.witness.size() == 2 && l.set(r.witness[0]) == p.set_of({"w"}) &&
                  l.set(r.witness[1]) == p.set_of({"v", "w"}),
              "witness is not ({w}, {v,w})");
    auto w = l.index_of(p.set_of({"w"}));
    auto vw = l.index_of(p.set_of({"v", "w"}));
    auto xy = l.index_of(p.set_of({"x", "y"}));
    o.require(l.ortho(w) == xy, "{w}' != {x,y}");
    o.require(l.meet(xy, vw) == l.zero(), "{x,y} meet {v,w} != empty");
    o.require(l.join(w, l.zero()) != vw, "{w} join empty == {v,w}");
  }
  std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  o.require(took.count() < 1.0, "took longer than 1 s");
  return o;
}

Outcome nets_are_n_dense() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  std::size_t max_size = 0;
  for (const auto& net : suite()) {
    max_size = std::max(max_size, net.size());
    auto r = is_n_dense(poset_of(net));
    o.require(r.holds, "not N-dense:\n" + serialize_net(net));
  }
  std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  o.require(suite().size() == 500 && max_size <= 24, "suite shape");
  o.require(took.count() < 60.0, "took longer than 60 s");
  return o;
}

Outcome net_lattices_orthomodular() {
  Outcome o;
  for (const auto& net : suite()) {
    try {
      OrthoLattice l{ClosureContext(poset_of(net))};
      auto r = check_orthomodular(l);
      o.require(r.holds, "orthomodular law fails on:\n" + serialize_net(net));
    } catch (const FamilyOverflow& e) {
      o.require(false, std::string(e.what()) + " on:\n" + serialize_net(net));
    }
  }
  return o;
}

Outcome converse_counterexample() {
  Outcome o;
  std::size_t non_n_dense = 0, examined = 0;
  bool found = false;
  for (std::size_t n = 4; n <= 8 && !found; ++n) {
    for (std::uint64_t seed = 1; seed <= 4000 && !found; ++seed) {
      auto p = random_poset({seed * 7919 + n, n, 0.1 + 0.1 * static_cast<double>(seed % 7)});
      ++examined;
      if (is_n_dense(p).holds) continue;
      ++non_n_dense;
      OrthoLattice l{ClosureContext(p)};
      found = check_orthomodular(l).holds;
    }
  }
  o.require(found, "no non-N-dense poset with orthomodular L(P) among " + std::to_string(examined) +
                       " sampled posets (" + std::to_string(non_n_dense) + " non-N-dense)");
  try {
    auto p = std::get<Poset>(fixture("boolean_non_ndense"));
    OrthoLattice l{ClosureContext(p)};
    o.require(!is_n_dense(p).holds, "fixture boolean_non_ndense is N-dense");
    o.require(check_orthomodular(l).holds, "fixture boolean_non_ndense is not orthomodular");
  } catch (const FixtureUnavailable& e) {
    o.require(false, e.what());
  }
  return o;
}

std::vector<Poset> fixture_orders() {
  std::vector<Poset> out;
  for (const auto& name : fixture_names()) {
    if (!fixture_available(name)) continue;
    auto f = fixture(name);
    if (auto* n = std::get_if<OccurrenceNet>(&f)) out.push_back(poset_of(*n));
    if (auto* p = std::get_if<Poset>(&f)) out.push_back(*p);
  }
  return out;
}

Outcome cut_facts() {
  Outcome o;
  auto orders = fixture_orders();
  for (std::size_t i = 0; i < 100; ++i) orders.push_back(poset_of(suite()[i]));
  std::size_t checked = 0;
  for (const auto& p : orders) {
    ClosureContext ctx(p);
    for (const auto& c : cuts(p)) {
      auto perp = ctx.orthocomplement(c);
      o.require(perp.empty(), "cut " + describe(p, c) + " has non-empty orthocomplement");
      o.require(ctx.orthocomplement(perp).is_full(), "cut " + describe(p, c) + " is not dense");
      ++checked;
    }
  }
  o.require(checked > 0, "no cuts checked");
  return o;
}

Outcome past_future_of_closed_sets() {
  Outcome o;
  for (const auto* net : suite_up_to(16)) {
    ClosureContext ctx(poset_of(*net));
    const auto& p = ctx.poset();
    enumerate_closed_sets(ctx, [&](const ElementSet& s) {
      auto perp = ctx.orthocomplement(s);
      o.require(past(p, s) == past(p, perp), "past differs for " + describe(p, s));
      o.require(future(p, s) == future(p, perp), "future differs for " + describe(p, s));
    });
  }
  return o;
}

Outcome inductive_chain_reaches_phi() {
  Outcome o;
  std::size_t cosets = 0;
  for (const auto* net : suite_up_to(14)) {
    CausalContext ctx(*net);
    const bool brute = net->size() <= 12;
    std::vector<oracle::Mask> cc;
    oracle::Net on;
    if (brute) {
      on = oracle::from_net(*net);
      cc = oracle::causally_closed_sets(on);
    }
    for (const auto& a : b_cosets(*net, ctx.co())) {
      ++cosets;
      auto f = phi(ctx, a);
      o.require(inductive_chain(ctx, a).limit == f, "chain limit != phi for " + describe(ctx.poset(), a));
      if (brute)
        o.require(oracle::to_mask(f) == oracle::meet_above(cc, on.order.all(), oracle::to_mask(a)),
                  "phi != intersection of causally closed supersets for " + describe(ctx.poset(), a));
    }
  }
  o.require(cosets > 0, "no B-cosets checked");
  return o;
}

Outcome k_dense_families_and_grid() {
  Outcome o;
  std::size_t k_dense = 0;
  for (const auto& net : suite()) {
    CausalContext ctx(net);
    if (!is_k_dense(ctx.poset()).holds) continue;
    ++k_dense;
    auto cmp = compare_families(ctx, true);
    o.require(cmp.equal, "CC(N) != L(N) on a K-dense net:\n" + serialize_net(net));
    if (net.conditions().size() <= 16) {
      for (const auto& a : b_cosets(net, ctx.co()))
        o.require(check_b_cut_closure(ctx, a, true).equal, "phi(A) != A^pp on a K-dense net");
    } else {
      for (const auto& a : b_cuts(net, ctx.co()))
        o.require(check_b_cut_closure(ctx, a, true).equal, "phi(A) != A^pp on a K-dense net");
    }
  }
  o.require(k_dense > 0, "no K-dense nets in the suite");

  auto grid = std::get<OccurrenceNet>(fixture("grid_non_kdense"));
  CausalContext ctx(grid);
  o.require(!is_k_dense(ctx.poset()).holds, "grid_non_kdense fixture is K-dense");
  bool separating = false;
  for (const auto& c : b_cuts(grid, ctx.co())) {
    auto r = check_b_cut_closure(ctx, c, false);
    if (r.closure.is_full() && r.phi.is_proper_subset_of(r.closure)) separating = true;
  }
  o.require(separating, "grid_non_kdense has no B-cut c with phi(c) strictly inside c^pp = X");
  return o;
}

Outcome closed_sets_are_causally_closed() {
  Outcome o;
  auto check = [&](const OccurrenceNet& net) {
    CausalContext ctx(net);
    std::size_t n = 0;
    enumerate_closed_sets(ctx.closure_context(), [&](const ElementSet& s) {
      ++n;
      o.require(!is_causally_closed(ctx, s).has_value(), "closed set not causally closed:\n" + serialize_net(net));
    });
    return n;
  };
  for (const auto& name : fixture_names())
    if (fixture_available(name) && fixture_kind(name) == DocumentKind::net)
      check(std::get<OccurrenceNet>(fixture(name)));
  for (const auto& net : suite()) check(net);
  return o;
}

Outcome closure_axioms() {
  Outcome o;
  SplitMix64 rng(1010);
  const auto& nets = suite();
  std::vector<CausalContext> contexts;
  for (const auto& n : nets) contexts.emplace_back(n);
  for (int i = 0; i < 10000; ++i) {
    const auto& ctx = contexts[rng.below(contexts.size())];
    const std::size_t n = ctx.size();
    auto s = testing_support::random_subset(rng, n, 0.2);
    auto t = s | testing_support::random_subset(rng, n, 0.2);
    const auto& cc = ctx.closure_context();
    auto cs = cc.closure(s), ct = cc.closure(t);
    o.require(s.is_subset_of(cs), "perp-perp not extensive");
    o.require(cs.is_subset_of(ct), "perp-perp not monotone");
    o.require(cc.closure(cs) == cs, "perp-perp not idempotent");
    auto ps = phi(ctx, s), pt = phi(ctx, t);
    o.require(s.is_subset_of(ps), "phi not extensive");
    o.require(ps.is_subset_of(pt), "phi not monotone");
    o.require(phi(ctx, ps) == ps, "phi not idempotent");
  }
  return o;
}

Outcome enumeration_oracle() {
  Outcome o;
  std::size_t structures = 0;
  auto check_order = [&](const Poset& p) {
    ++structures;
    auto got = oracle::to_masks(enumerate_closed_sets(ClosureContext(p)));
    o.require(got == oracle::closed_sets(oracle::from_poset(p)), "L(P) differs from brute force");
  };
  auto check_net = [&](const OccurrenceNet& net) {
    check_order(poset_of(net));
    auto got = oracle::to_masks(enumerate_causally_closed(CausalContext(net)));
    o.require(got == oracle::causally_closed_sets(oracle::from_net(net)),
              "CC(N) differs from brute force:\n" + serialize_net(net));
  };
  for (const auto& name : fixture_names()) {
    if (!fixture_available(name)) continue;
    auto f = fixture(name);
    if (auto* n = std::get_if<OccurrenceNet>(&f); n && n->size() <= 16) check_net(*n);
    if (auto* p = std::get_if<Poset>(&f); p && p->size() <= 16) check_order(*p);
  }
  for (const auto* net : suite_up_to(16)) check_net(*net);
  for (const auto& p : testing_support::random_posets(100, 16, 1111)) check_order(p);
  o.require(structures > 100, "too few structures");
  return o;
}

int run(const std::string& command) { return std::system(command.c_str()); }

int exit_status(int raw) {
#ifdef WEXITSTATUS
  return WEXITSTATUS(raw);
#else
  return raw;
#endif
}

Outcome cli_and_format() {
  Outcome o;
  for (const auto& name : fixture_names()) {
    if (!fixture_available(name)) continue;
    auto text = fixture_text(name);
    auto f = fixture(name);
    if (auto* n = std::get_if<OccurrenceNet>(&f)) {
      o.require(parse_net(serialize_net(*n)) == *n, name + ": parse(serialize(net)) != net");
      o.require(serialize_net(parse_net(text)) == text, name + ": text is not canonical");
    }
    if (auto* p = std::get_if<Poset>(&f)) {
      o.require(parse_poset(serialize_poset(*p)) == *p, name + ": poset round trip");
      o.require(serialize_poset(parse_poset(text)) == text, name + ": text is not canonical");
    }
    if (std::holds_alternative<AbstractLattice>(f))
      o.require(serialize_lattice(parse_lattice(text)) == text, name + ": lattice round trip");
  }

  auto dir = fs::temp_directory_path() / ("ocnet_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string cli = OCNET_CLI;
  auto path = [&](const std::string& f) { return (dir / f).string(); };
  for (const auto& name : {"two_chains", "n_poset", "grid_non_kdense", "chain3", "fig1_oml"})
    o.require(exit_status(run(cli + " fixture " + name + " -o " + path(std::string(name) + ".onet"))) == 0,
              std::string("fixture ") + name + " not written");

  int code = exit_status(run(cli + " lattice " + path("two_chains.onet") + " --check-laws > " + path("out.txt")));
  o.require(code == 0, "lattice two_chains.onet --check-laws exited " + std::to_string(code));

  std::vector<std::string> reports;
  auto json_run = [&](const std::string& args, int expected) {
    auto out = path("report" + std::to_string(reports.size()) + ".json");
    int c = exit_status(run(cli + " " + args + " --json > " + out));
    o.require(c == expected, "'" + args + "' exited " + std::to_string(c));
    reports.push_back(out);
  };
  json_run("validate " + path("chain3.onet"), 0);
  json_run("props " + path("n_poset.onet") + " --poset", 0);
  json_run("props " + path("two_chains.onet"), 0);
  json_run("cuts " + path("two_chains.onet"), 0);
  json_run("lines " + path("grid_non_kdense.onet"), 0);
  json_run("closure " + path("two_chains.onet") + " --set b1,b3", 0);
  json_run("lattice " + path("n_poset.onet") + " --poset --check-laws", 0);
  json_run("lattice " + path("two_chains.onet") + " --check-laws", 0);
  json_run("lattice " + path("fig1_oml.onet") + " --check-laws", 0);
  json_run("causal " + path("grid_non_kdense.onet") + " --compare --enumerate", 0);

  std::string check = "python3 " + std::string(OCNET_SCHEMA_CHECK) + " " + OCNET_SCHEMA;
  for (const auto& r : reports) check += " " + r;
  o.require(exit_status(run(check)) == 0, "JSON reports do not validate against the schema");

  // Identical inputs give identical hashes.
  auto first = path("h1.json"), second = path("h2.json");
  run(cli + " props " + path("two_chains.onet") + " --json > " + first);
  run(cli + " props " + path("two_chains.onet") + " --json > " + second);
  auto hash_of = [](const std::string& file) {
    std::ifstream in(file);
    std::stringstream ss;
    ss << in.rdbuf();
    auto j = json::parse(ss.str(), nullptr, false);
    return j.is_discarded() ? std::string() : j["input"]["hash"].get<std::string>();
  };
  o.require(!hash_of(first).empty() && hash_of(first) == hash_of(second), "content hash is not stable");
  fs::remove_all(dir);
  return o;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "N-poset closed sets and orthomodular witness", n_poset_regression},
      {2, "random nets are N-dense", nets_are_n_dense},
      {3, "random net lattices are orthomodular", net_lattices_orthomodular},
      {4, "non-N-dense poset with orthomodular lattice", converse_counterexample},
      {5, "cuts have empty orthocomplement and full closure", cut_facts},
      {6, "closed sets share past and future with their orthocomplement", past_future_of_closed_sets},
      {7, "inductive chain reaches phi; phi matches brute force", inductive_chain_reaches_phi},
      {8, "K-dense nets: CC(N) = L(N) and phi(A) = A^pp; grid separates", k_dense_families_and_grid},
      {9, "closed sets are causally closed", closed_sets_are_causally_closed},
      {10, "closure axioms for perp-perp and phi", closure_axioms},
      {11, "NextClosure families match brute force", enumeration_oracle},
      {12, "format round trips, CLI exit codes, JSON schema", cli_and_format},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", took.count());
    std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << c.number << ' ' << c.title << " (" << timing << ")";
    if (!o.pass) {
      ++failed;
      std::cout << ": " << o.note;
    }
    std::cout << std::endl;
  }
  std::cout << (criteria.size() - failed) << '/' << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
