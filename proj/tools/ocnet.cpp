// ocnet: command-line front end for the occurrence-net analyses.
//
// Exit codes: 0 analysis ran and every checked assertion holds, 1 a checked
// law or theorem assertion failed (witness printed), 2 input or usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ocnet/ocnet.hpp"

using namespace ocnet;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitInput = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string path;
  bool poset = false;
  bool lattice = false;
  bool json = false;
  std::size_t max_elements = 64;
};

struct Input {
  DocumentKind kind = DocumentKind::net;
  std::optional<OccurrenceNet> net;
  std::optional<Poset> poset;  // poset_of(net) for net input
  std::optional<AbstractLattice> lattice;
  std::vector<NamedSet> sets;
  std::string hash;

  std::size_t size() const { return lattice ? lattice->size() : poset->size(); }
  const std::vector<std::string>& labels() const { return poset->labels(); }
};

const char* kind_name(DocumentKind k) {
  switch (k) {
    case DocumentKind::net: return "net";
    case DocumentKind::poset: return "poset";
    case DocumentKind::lattice: return "lattice";
  }
  return "?";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write '" + path + "'");
}

DocumentKind kind_of(const InputOptions& opt, std::string_view text) {
  if (opt.poset && opt.lattice) throw UsageError("--poset and --lattice are mutually exclusive");
  if (opt.poset) return DocumentKind::poset;
  if (opt.lattice) return DocumentKind::lattice;
  return detect_kind(text);
}

Input load(const InputOptions& opt) {
  const std::string text = read_file(opt.path);
  Input in;
  in.kind = kind_of(opt, text);
  switch (in.kind) {
    case DocumentKind::net: {
      auto doc = parse_net_document(text);
      in.net = OccurrenceNet::build(doc.candidate);
      in.poset = poset_of(*in.net);
      in.sets = std::move(doc.sets);
      in.hash = content_hash(serialize_net(*in.net, in.sets));
      break;
    }
    case DocumentKind::poset: {
      auto doc = parse_poset_document(text);
      in.poset = std::move(doc.poset);
      in.sets = std::move(doc.sets);
      in.hash = content_hash(serialize_poset(*in.poset, in.sets));
      break;
    }
    case DocumentKind::lattice:
      in.lattice = parse_lattice(text);
      in.hash = content_hash(serialize_lattice(*in.lattice));
      break;
  }
  if (in.size() > opt.max_elements)
    throw UsageError("input has " + std::to_string(in.size()) + " elements; the limit is " +
                     std::to_string(opt.max_elements) + " (raise --max-elements)");
  return in;
}

AnalysisReport start_report(const std::string& command, const Input& in) {
  AnalysisReport r;
  r.command = command;
  r.input_kind = kind_name(in.kind);
  r.input_hash = in.hash;
  r.elements = in.size();
  return r;
}

void require_order(const Input& in, const char* command) {
  if (!in.poset) throw UsageError(std::string(command) + " needs a net or poset input");
}

void require_net(const Input& in, const char* command) {
  if (!in.net) throw UsageError(std::string(command) + " needs a net input");
}

std::string braces(const std::vector<std::string>& labels, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](ElementIndex x) {
    if (!first) out += ',';
    out += labels[x];
    first = false;
  });
  return out + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream ss(s);
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

// --set accepts a declared set name or a comma-separated label list.
ElementSet resolve_set(const Input& in, const std::string& spec) {
  for (const auto& s : in.sets)
    if (s.name == spec) return in.poset->set_of(s.labels);
  try {
    return in.poset->set_of(split_commas(spec));
  } catch (const LookupError& e) {
    throw UsageError(e.what());
  }
}

// Commands ---------------------------------------------------------------

void cmd_validate(const InputOptions& opt, AnalysisReport& r, std::ostream& out) {
  const std::string text = read_file(opt.path);
  const DocumentKind kind = kind_of(opt, text);
  r.input_kind = kind_name(kind);
  if (kind != DocumentKind::net) {
    // Poset and lattice documents are validated while loading.
    Input in = load(opt);
    r.input_hash = in.hash;
    r.elements = in.size();
    r.results["valid"] = verdict(true);
    out << kind_name(kind) << ": valid (" << in.size() << " elements)\n";
    return;
  }
  auto doc = parse_net_document(text);
  auto report = validate_net(doc.candidate);
  r.elements = doc.candidate.elements.size();
  r.results["valid"] = to_json(report);
  if (!report.ok()) {
    r.input_hash = content_hash(text);
    r.fail("occurrence net axioms");
    out << "net: invalid\n";
    for (const auto& v : report.violations) {
      out << "  " << to_string(v.axiom) << ":";
      for (const auto& w : v.witness) out << ' ' << w;
      out << '\n';
    }
    return;
  }
  auto net = OccurrenceNet::build(doc.candidate);
  r.input_hash = content_hash(serialize_net(net, doc.sets));
  out << "net: valid (" << net.conditions().size() << " conditions, " << net.events().size() << " events, "
      << net.arcs().size() << " arcs)\n";
}

void cmd_props(const Input& in, AnalysisReport& r, std::ostream& out) {
  require_order(in, "props");
  const auto& p = *in.poset;
  const auto& labels = in.labels();
  auto n = timed(r, "n_density", [&] { return is_n_dense(p); });
  auto k = timed(r, "k_density", [&] { return is_k_dense(p); });
  auto interval = check_interval_finite(p);
  auto degree = check_degree_finite(p);
  r.results["n_dense"] = to_json(n, labels);
  r.results["k_dense"] = to_json(k, labels);
  r.results["interval_finite"] = to_json(interval);
  r.results["degree_finite"] = to_json(degree);

  out << "N-dense: " << yes_no(n.holds);
  if (const auto* q = std::get_if<NQuadruple>(&n.witness))
    out << "  (not N-dense: x=" << labels[q->x] << " y=" << labels[q->y] << " v=" << labels[q->v]
        << " w=" << labels[q->w] << ")";
  out << "\nK-dense: " << yes_no(k.holds);
  if (const auto* lc = std::get_if<LineCutWitness>(&k.witness))
    out << "  (line " << braces(labels, lc->line) << " misses cut " << braces(labels, lc->cut) << ")";
  out << "\ninterval-finite: " << yes_no(interval.holds) << " (largest interval " << interval.max_interval << ")\n";
  out << "degree-finite: " << yes_no(degree.holds) << " (max in " << degree.max_in << ", max out "
      << degree.max_out << ")\n";
  // Posets derived from occurrence nets are always N-dense.
  if (in.net && !n.holds) r.fail("occurrence net is N-dense");
}

void print_family(std::ostream& out, const char* title, const std::vector<std::string>& labels,
                  const std::vector<ElementSet>& family) {
  out << title << " (" << family.size() << "):\n";
  for (const auto& s : family) out << "  " << braces(labels, s) << '\n';
}

void cmd_cuts(const Input& in, AnalysisReport& r, std::ostream& out) {
  require_order(in, "cuts");
  const auto& labels = in.labels();
  auto all = timed(r, "cuts", [&] { return cuts(*in.poset); });
  r.results["cuts"] = family_json(labels, all);
  print_family(out, "cuts", labels, all);

  // Every cut c satisfies c^⊥ = ∅ and c^⊥⊥ = P.
  ClosureContext ctx(*in.poset);
  json bad = json::array();
  for (const auto& c : all) {
    auto perp = ctx.orthocomplement(c);
    if (!perp.empty() || !ctx.orthocomplement(perp).is_full()) bad.push_back(labels_of(labels, c));
  }
  r.results["cut_orthocomplement"] = verdict(bad.empty(), bad);
  if (!bad.empty()) {
    r.fail("cut orthocomplement is empty");
    out << "cuts with non-empty orthocomplement: " << bad.dump() << '\n';
  }

  if (in.net) {
    auto bc = b_cuts(*in.net, ctx.co());
    r.results["b_cuts"] = family_json(labels, bc);
    print_family(out, "B-cuts", labels, bc);
  }
}

void cmd_lines(const Input& in, AnalysisReport& r, std::ostream& out) {
  require_order(in, "lines");
  auto all = timed(r, "lines", [&] { return lines(*in.poset); });
  r.results["lines"] = family_json(in.labels(), all);
  print_family(out, "lines", in.labels(), all);
}

void cmd_closure(const Input& in, const std::string& set_spec, AnalysisReport& r, std::ostream& out) {
  require_order(in, "closure");
  const auto& labels = in.labels();
  const ElementSet s = resolve_set(in, set_spec);
  ClosureContext ctx(*in.poset);
  const auto perp = ctx.orthocomplement(s);
  const auto closed = ctx.orthocomplement(perp);
  r.results["set"] = labels_of(labels, s);
  r.results["orthocomplement"] = labels_of(labels, perp);
  r.results["closure"] = labels_of(labels, closed);
  r.results["closed"] = closed == s;
  out << "S       = " << braces(labels, s) << '\n';
  out << "S^perp  = " << braces(labels, perp) << '\n';
  out << "S^pp    = " << braces(labels, closed) << (closed == s ? "  (S is closed)" : "") << '\n';
  if (in.net) {
    CausalContext cc(*in.net);
    const auto f = phi(cc, s);
    r.results["phi"] = labels_of(labels, f);
    out << "phi(S)  = " << braces(labels, f) << '\n';
    if (is_b_coset(*in.net, cc.co(), s)) {
      auto chain = inductive_chain(cc, s);
      json steps = family_json(labels, chain.steps);
      r.results["inductive_chain"] = steps;
      out << "inductive chain: " << chain.steps.size() << " step(s), limit " << braces(labels, chain.limit) << '\n';
      if (chain.limit != f) {
        r.fail("inductive chain reaches phi");
        out << "inductive chain limit differs from phi(S)\n";
      }
    }
  }
}

template <FiniteOrthoStructure L>
void check_laws(const L& lattice, bool assert_orthomodular, AnalysisReport& r, std::ostream& out) {
  json laws = json::object();
  auto record = [&](const LawReport& rep, bool asserted) {
    laws[to_string(rep.law)] = to_json(rep, lattice);
    out << to_string(rep.law) << ": " << (rep.holds ? "holds" : "fails");
    if (!rep.holds) {
      out << "  witness (";
      for (std::size_t i = 0; i < rep.witness.size(); ++i) out << (i ? ", " : "") << lattice.label(rep.witness[i]);
      out << ")";
      if (!rep.detail.empty()) out << "  " << rep.detail;
    }
    if (rep.law == Law::distributive && rep.holds) out << (rep.boolean ? "  (Boolean)" : "");
    out << '\n';
    if (asserted && !rep.holds) r.fail(to_string(rep.law));
  };
  timed(r, "laws", [&] {
    record(check_orthocomplementation(lattice), true);
    record(check_de_morgan(lattice), true);
    record(check_orthomodular(lattice), assert_orthomodular);
    record(check_distributive(lattice), false);
  });
  r.results["laws"] = laws;
}

template <FiniteOrthoStructure L>
void describe_lattice(const L& lattice, AnalysisReport& r, std::ostream& out) {
  json elements = json::array();
  out << "lattice (" << lattice.size() << " elements):\n";
  for (LatticeIndex a = 0; a < lattice.size(); ++a) {
    elements.push_back({{"element", lattice.label(a)}, {"ortho", lattice.label(lattice.ortho(a))}});
    out << "  " << lattice.label(a) << "  ortho " << lattice.label(lattice.ortho(a)) << '\n';
  }
  r.results["size"] = lattice.size();
  r.results["elements"] = elements;
}

void cmd_lattice(const Input& in, bool laws, const std::string& dot_path, AnalysisReport& r, std::ostream& out) {
  if (in.lattice) {
    describe_lattice(*in.lattice, r, out);
    if (laws) check_laws(*in.lattice, false, r, out);
    if (!dot_path.empty()) write_file(dot_path, export_lattice_dot(*in.lattice));
    return;
  }
  auto lattice = timed(r, "enumerate", [&] { return OrthoLattice(ClosureContext(*in.poset)); });
  describe_lattice(lattice, r, out);
  if (laws) {
    // Orthomodularity is a theorem for N-dense posets, nets included.
    bool n_dense = in.net ? true : is_n_dense(*in.poset).holds;
    r.results["orthomodular_asserted"] = n_dense;
    check_laws(lattice, n_dense, r, out);
  }
  if (!dot_path.empty()) write_file(dot_path, export_lattice_dot(lattice));
}

void cmd_causal(const Input& in, bool enumerate, bool compare, AnalysisReport& r, std::ostream& out) {
  require_net(in, "causal");
  const auto& labels = in.labels();
  CausalContext ctx(*in.net);
  const auto density = timed(r, "k_density", [&] { return is_k_dense(ctx.poset()); });
  const bool k_dense = density.holds;
  r.results["k_dense"] = to_json(density, labels);
  out << "K-dense: " << yes_no(k_dense) << '\n';

  json cuts_json = json::array();
  out << "B-cuts:\n";
  for (const auto& c : b_cuts(*in.net, ctx.co())) {
    auto rep = check_b_cut_closure(ctx, c, k_dense);
    cuts_json.push_back({{"b_cut", labels_of(labels, c)},
                         {"phi", labels_of(labels, rep.phi)},
                         {"closure", labels_of(labels, rep.closure)},
                         {"phi_equals_closure", verdict(rep.equal, labels_of(labels, rep.closure - rep.phi))}});
    out << "  " << braces(labels, c) << "  phi " << braces(labels, rep.phi) << "  pp "
        << braces(labels, rep.closure) << (rep.equal ? "" : "  (phi != pp)") << '\n';
    if (!rep.assertion_holds()) r.fail("phi equals double orthocomplement on B-cuts of a K-dense net");
  }
  r.results["b_cut_closures"] = cuts_json;

  if (enumerate) {
    auto cc = timed(r, "enumerate_causally_closed", [&] { return enumerate_causally_closed(ctx); });
    sort_canonical(cc);
    r.results["causally_closed"] = family_json(labels, cc);
    print_family(out, "causally closed sets", labels, cc);
  }
  if (compare) {
    auto cmp = timed(r, "compare", [&] { return compare_families(ctx, k_dense); });
    r.results["comparison"] = to_json(cmp, labels);
    out << "closed sets: " << cmp.closed_sets.size() << ", causally closed sets: " << cmp.causally_closed.size()
        << '\n';
    out << (cmp.equal ? "CC(N) = L(N)\n" : "CC(N) != L(N)\n");
    for (const auto& s : cmp.cc_not_closed) out << "  causally closed, not closed: " << braces(labels, s) << '\n';
    for (const auto& s : cmp.closed_not_cc) out << "  closed, not causally closed: " << braces(labels, s) << '\n';
    if (!cmp.l_subset_of_cc) r.fail("closed sets are causally closed");
    if (cmp.k_dense && !cmp.equal) r.fail("causally closed sets are closed in a K-dense net");
  }
}

void cmd_dot(const Input& in, const std::string& path) {
  if (in.lattice) write_file(path, export_lattice_dot(*in.lattice));
  else if (in.net) write_file(path, export_dot(*in.net));
  else write_file(path, export_dot(*in.poset));
}

int finish(const AnalysisReport& r, const std::ostringstream& text, bool as_json) {
  if (as_json) {
    std::cout << r.to_json().dump(2) << '\n';
  } else {
    std::cout << text.str();
    for (const auto& f : r.failed_assertions) std::cout << "ASSERTION FAILED: " << f << '\n';
  }
  return r.assertions_hold() ? kExitOk : kExitAssertion;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"occurrence net and orthomodular lattice analyses"};
  app.require_subcommand(1);

  InputOptions opt;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("file", opt.path, "input .onet / poset / lattice file")->required();
    sub->add_flag("--poset", opt.poset, "read the input as a poset (elem/le lines)");
    sub->add_flag("--lattice", opt.lattice, "read the input as an explicit ortholattice");
    sub->add_flag("--json", opt.json, "print a JSON report");
    sub->add_option("--max-elements", opt.max_elements, "reject inputs with more elements")
        ->capture_default_str();
    return sub;
  };

  auto* validate = add_input(app.add_subcommand("validate", "check occurrence net axioms"));
  auto* props = add_input(app.add_subcommand("props", "density and finiteness properties"));
  auto* cuts_cmd = add_input(app.add_subcommand("cuts", "list cuts (and B-cuts for nets)"));
  auto* lines_cmd = add_input(app.add_subcommand("lines", "list lines"));

  auto* closure = add_input(app.add_subcommand("closure", "orthocomplement, closure and phi of a set"));
  std::string set_spec;
  closure->add_option("--set", set_spec, "comma-separated labels or a declared set name")->required();

  auto* lattice = add_input(app.add_subcommand("lattice", "lattice of closed sets"));
  bool check = false;
  std::string lattice_dot;
  lattice->add_flag("--check-laws", check, "check ortholattice, orthomodular and distributive laws");
  lattice->add_option("--dot", lattice_dot, "write the Hasse diagram as DOT");

  auto* causal = add_input(app.add_subcommand("causal", "causally closed sets"));
  bool enumerate = false;
  bool compare = false;
  causal->add_flag("--enumerate", enumerate, "list every causally closed set");
  causal->add_flag("--compare", compare, "compare causally closed sets with closed sets");

  auto* dot = add_input(app.add_subcommand("dot", "export a net, poset Hasse diagram or lattice as DOT"));
  std::string dot_out = "-";
  dot->add_option("-o,--output", dot_out, "output file ('-' for stdout)")->capture_default_str();

  auto* gen = app.add_subcommand("gen", "generate a random occurrence net or poset");
  GenParams gp;
  std::size_t poset_size = 0;
  double edge_probability = 0.3;
  std::string gen_out;
  gen->add_option("--seed", gp.seed, "generator seed")->required();
  gen->add_option("--conditions", gp.max_conditions, "condition budget")->capture_default_str();
  gen->add_option("--events", gp.max_events, "number of events")->capture_default_str();
  gen->add_option("--layers", gp.layers, "event layers")->capture_default_str();
  gen->add_option("--density", gp.arc_density, "extra arc probability")->capture_default_str();
  gen->add_option("--poset-size", poset_size, "generate a poset with this many elements instead of a net");
  gen->add_option("--edge-probability", edge_probability, "poset edge probability")->capture_default_str();
  gen->add_option("-o,--output", gen_out, "output file ('-' for stdout)")->required();

  auto* fixture_cmd = app.add_subcommand("fixture", "write a built-in fixture");
  std::string fixture_name;
  std::string fixture_out = "-";
  bool list = false;
  fixture_cmd->add_option("name", fixture_name, "fixture name");
  fixture_cmd->add_option("-o,--output", fixture_out, "output file ('-' for stdout)")->capture_default_str();
  fixture_cmd->add_flag("--list", list, "list fixture names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (gen->parsed()) {
      if (poset_size > 0) write_file(gen_out, serialize_poset(random_poset({gp.seed, poset_size, edge_probability})));
      else write_file(gen_out, serialize_net(random_net(gp)));
      return kExitOk;
    }
    if (fixture_cmd->parsed()) {
      if (list) {
        for (const auto& n : fixture_names())
          std::cout << n << (fixture_available(n) ? "" : "  (unavailable)") << '\n';
        return kExitOk;
      }
      if (fixture_name.empty()) throw UsageError("fixture needs a name (see --list)");
      try {
        write_file(fixture_out, fixture_text(fixture_name));
      } catch (const FixtureUnavailable& e) {
        std::cerr << "ocnet: " << e.what() << '\n';
        return kExitAssertion;
      }
      return kExitOk;
    }

    std::ostringstream text;
    if (validate->parsed()) {
      AnalysisReport r;
      r.command = "validate";
      try {
        cmd_validate(opt, r, text);
      } catch (const InvalidOrder& e) {
        r.fail(std::string("order axioms: ") + e.what());
      } catch (const InvalidLattice& e) {
        r.fail(std::string("lattice axioms: ") + e.what());
      }
      return finish(r, text, opt.json);
    }

    Input in = load(opt);
    if (dot->parsed()) {
      cmd_dot(in, dot_out);
      return kExitOk;
    }
    const std::string name = app.get_subcommands().front()->get_name();
    AnalysisReport r = start_report(name, in);
    if (props->parsed()) cmd_props(in, r, text);
    else if (cuts_cmd->parsed()) cmd_cuts(in, r, text);
    else if (lines_cmd->parsed()) cmd_lines(in, r, text);
    else if (closure->parsed()) cmd_closure(in, set_spec, r, text);
    else if (lattice->parsed()) cmd_lattice(in, check, lattice_dot, r, text);
    else if (causal->parsed()) cmd_causal(in, enumerate, compare, r, text);
    return finish(r, text, opt.json);
  } catch (const UsageError& e) {
    std::cerr << "ocnet: " << e.what() << '\n';
  } catch (const ParseError& e) {
    std::cerr << "ocnet: " << opt.path << ": " << e.what() << '\n';
  } catch (const InvalidNet& e) {
    std::cerr << "ocnet: " << opt.path << ": " << e.what() << '\n';
  } catch (const FamilyOverflow& e) {
    std::cerr << "ocnet: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "ocnet: " << e.what() << '\n';
  } catch (const std::runtime_error& e) {
    std::cerr << "ocnet: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    std::cerr << "ocnet: " << e.what() << '\n';
  }
  return kExitInput;
}
