#pragma once

// JSON rendering of analysis results (schema version 1, see
// schema/analysis_report.schema.json). Every boolean verdict is an object
// {"holds": bool} that carries a "witness" whenever holds is false.

#include <chrono>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "ocnet/causal.hpp"
#include "ocnet/lattice.hpp"
#include "ocnet/net.hpp"
#include "ocnet/poset.hpp"
#include "ocnet/relations.hpp"

namespace ocnet {

using json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

inline json labels_of(const std::vector<std::string>& labels, const ElementSet& s) {
  json out = json::array();
  s.for_each([&](ElementIndex x) { out.push_back(labels.at(x)); });
  return out;
}

inline json family_json(const std::vector<std::string>& labels, const std::vector<ElementSet>& family) {
  json out = json::array();
  for (const auto& s : family) out.push_back(labels_of(labels, s));
  return out;
}

inline json verdict(bool holds, json witness = nullptr) {
  json v = {{"holds", holds}};
  if (!holds) v["witness"] = std::move(witness);
  return v;
}

inline json to_json(const ValidationReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back({{"axiom", to_string(v.axiom)}, {"witness", v.witness}});
  return verdict(r.ok(), violations);
}

inline json to_json(const DensityReport& r, const std::vector<std::string>& labels) {
  json witness = nullptr;
  if (const auto* q = std::get_if<NQuadruple>(&r.witness))
    witness = {{"x", labels[q->x]}, {"y", labels[q->y]}, {"v", labels[q->v]}, {"w", labels[q->w]}};
  if (const auto* lc = std::get_if<LineCutWitness>(&r.witness))
    witness = {{"line", labels_of(labels, lc->line)}, {"cut", labels_of(labels, lc->cut)}};
  return verdict(r.holds, witness);
}

inline json to_json(const IntervalFiniteReport& r) {
  return {{"holds", r.holds}, {"max_interval", r.max_interval}};
}

inline json to_json(const DegreeFiniteReport& r) {
  return {{"holds", r.holds}, {"max_in_degree", r.max_in}, {"max_out_degree", r.max_out}};
}

template <FiniteOrthoStructure L>
json to_json(const LawReport& r, const L& lattice) {
  json witness = json::array();
  for (auto i : r.witness) witness.push_back(lattice.label(i));
  json v = verdict(r.holds, {{"elements", witness}, {"detail", r.detail}});
  if (r.law == Law::distributive) v["boolean"] = r.boolean;
  return v;
}

inline json to_json(const std::optional<RuleViolation>& v, const std::vector<std::string>& labels) {
  if (!v) return verdict(true);
  json w = {{"rule", to_string(v->rule)}};
  auto put = [&](const char* key, ElementIndex x) {
    if (x != kNoElement) w[key] = labels.at(x);
  };
  put("event", v->event);
  put("x", v->x);
  put("y", v->y);
  put("missing", v->missing);
  return verdict(false, w);
}

inline json to_json(const FamilyComparison& r, const std::vector<std::string>& labels) {
  json out;
  out["closed_sets"] = r.closed_sets.size();
  out["causally_closed_sets"] = r.causally_closed.size();
  out["k_dense"] = r.k_dense;
  out["closed_subset_of_causally_closed"] =
      verdict(r.l_subset_of_cc, {{"closed_not_causally_closed", family_json(labels, r.closed_not_cc)}});
  out["equal"] = verdict(r.equal, {{"causally_closed_not_closed", family_json(labels, r.cc_not_closed)},
                                   {"closed_not_causally_closed", family_json(labels, r.closed_not_cc)}});
  return out;
}

// Envelope shared by every CLI command.
struct AnalysisReport {
  std::string command;
  std::string input_kind;  // net | poset | lattice
  std::string input_hash;
  std::size_t elements = 0;
  json results = json::object();
  std::vector<std::string> failed_assertions;
  std::vector<std::pair<std::string, double>> timings_ms;

  void fail(std::string assertion) { failed_assertions.push_back(std::move(assertion)); }
  bool assertions_hold() const noexcept { return failed_assertions.empty(); }

  json to_json() const {
    json t = json::object();
    for (const auto& [k, v] : timings_ms) t[k] = v;
    return {{"schema", kReportSchema},
            {"command", command},
            {"input", {{"kind", input_kind}, {"hash", input_hash}, {"elements", elements}}},
            {"results", results},
            {"assertions", {{"holds", assertions_hold()}, {"failed", failed_assertions}}},
            {"timings_ms", t}};
  }
};

// Runs `f`, records its wall time under `name`, and returns its value.
template <class F>
auto timed(AnalysisReport& report, std::string name, F&& f) {
  auto start = std::chrono::steady_clock::now();
  auto finish = [&] {
    std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    report.timings_ms.emplace_back(std::move(name), ms.count());
  };
  if constexpr (std::is_void_v<decltype(f())>) {
    f();
    finish();
  } else {
    auto value = f();
    finish();
    return value;
  }
}

}  // namespace ocnet
