#pragma once

// Text formats.
//
//   .onet   version 1 | cond <labels..> | event <labels..> | arc <from> <to>
//           | set <name> <labels..>
//   .poset  version 1 | elem <labels..> | le <a> <b> | set <name> <labels..>
//   .olat   version 1 | elem <labels..> | le <a> <b> | ortho <a> <b>
//
// One directive per line, '#' starts a comment, labels match [A-Za-z0-9_]+.
// Elements must be declared before they are referenced.

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ocnet/lattice.hpp"
#include "ocnet/net.hpp"
#include "ocnet/poset.hpp"

namespace ocnet {

inline constexpr int kFormatVersion = 1;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                           message),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct NamedSet {
  std::string name;
  std::vector<std::string> labels;
  friend bool operator==(const NamedSet&, const NamedSet&) = default;
};

struct NetDocument {
  int version = kFormatVersion;
  NetCandidate candidate;
  std::vector<NamedSet> sets;
};

struct PosetDocument {
  int version = kFormatVersion;
  Poset poset;
  std::vector<NamedSet> sets;
};

enum class DocumentKind { net, poset, lattice };

namespace detail {

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      if (i > start) line.tokens.push_back({std::string(raw.substr(start, i - start)), start + 1});
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

inline bool valid_label(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

inline const Token& require_label(const Line& line, std::size_t i) {
  const Token& t = line.tokens[i];
  if (!valid_label(t.text)) throw ParseError(line.number, t.column, "invalid label '" + t.text + "'");
  return t;
}

inline void require_arity(const Line& line, std::size_t exact) {
  if (line.tokens.size() != exact) {
    const Token& t = line.tokens.size() > exact ? line.tokens[exact] : line.tokens.back();
    throw ParseError(line.number, t.column,
                     "'" + line.tokens[0].text + "' expects " + std::to_string(exact - 1) + " arguments");
  }
}

inline void require_some(const Line& line) {
  if (line.tokens.size() < 2)
    throw ParseError(line.number, line.tokens[0].column, "'" + line.tokens[0].text + "' expects labels");
}

inline int parse_version(const Line& line) {
  require_arity(line, 2);
  if (line.tokens[1].text != std::to_string(kFormatVersion))
    throw ParseError(line.number, line.tokens[1].column, "unsupported format version '" + line.tokens[1].text + "'");
  return kFormatVersion;
}

// Label table shared by the three formats.
class Declarations {
 public:
  std::size_t declare(const Line& line, std::size_t i) {
    const Token& t = require_label(line, i);
    if (index_.count(t.text)) throw ParseError(line.number, t.column, "duplicate label '" + t.text + "'");
    index_.emplace(t.text, labels_.size());
    labels_.push_back(t.text);
    return labels_.size() - 1;
  }
  std::size_t lookup(const Line& line, std::size_t i) const {
    const Token& t = require_label(line, i);
    auto it = index_.find(t.text);
    if (it == index_.end()) throw ParseError(line.number, t.column, "undeclared element '" + t.text + "'");
    return it->second;
  }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<std::string> labels_;
};

inline NamedSet parse_set(const Line& line, const Declarations& decls, std::map<std::string, bool>& seen) {
  if (line.tokens.size() < 2) throw ParseError(line.number, line.tokens[0].column, "'set' expects a name");
  const Token& name = require_label(line, 1);
  if (seen[name.text]) throw ParseError(line.number, name.column, "duplicate set name '" + name.text + "'");
  seen[name.text] = true;
  NamedSet s{name.text, {}};
  for (std::size_t i = 2; i < line.tokens.size(); ++i) s.labels.push_back(decls.labels()[decls.lookup(line, i)]);
  return s;
}

inline std::string join_labels(const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& l : labels) out += ' ' + l;
  return out;
}

}  // namespace detail

inline DocumentKind detect_kind(std::string_view text) {
  bool has_elem = false;
  for (const auto& line : detail::tokenize(text)) {
    const auto& k = line.tokens[0].text;
    if (k == "cond" || k == "event" || k == "arc") return DocumentKind::net;
    if (k == "ortho") return DocumentKind::lattice;
    if (k == "elem" || k == "le") has_elem = true;
  }
  return has_elem ? DocumentKind::poset : DocumentKind::net;
}

inline NetDocument parse_net_document(std::string_view text) {
  NetDocument doc;
  detail::Declarations decls;
  std::vector<ElementKind> kinds;
  std::map<std::string, bool> set_names;
  bool first = true;
  for (const auto& line : detail::tokenize(text)) {
    const auto& key = line.tokens[0].text;
    if (key == "version") {
      if (!first) throw ParseError(line.number, line.tokens[0].column, "'version' must come first");
      doc.version = detail::parse_version(line);
    } else if (key == "cond" || key == "event") {
      detail::require_some(line);
      auto kind = key == "cond" ? ElementKind::condition : ElementKind::event;
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        auto idx = decls.declare(line, i);
        kinds.push_back(kind);
        doc.candidate.elements.push_back({decls.labels()[idx], kind});
      }
    } else if (key == "arc") {
      detail::require_arity(line, 3);
      auto from = decls.lookup(line, 1);
      auto to = decls.lookup(line, 2);
      if (kinds[from] == kinds[to])
        throw ParseError(line.number, line.tokens[2].column,
                         std::string("arc connects two ") + to_string(kinds[from]) + "s");
      doc.candidate.arcs.emplace_back(decls.labels()[from], decls.labels()[to]);
    } else if (key == "set") {
      doc.sets.push_back(detail::parse_set(line, decls, set_names));
    } else {
      throw ParseError(line.number, line.tokens[0].column, "unknown directive '" + key + "'");
    }
    first = false;
  }
  return doc;
}

// Throws ParseError on malformed text and InvalidNet when axioms fail.
inline OccurrenceNet parse_net(std::string_view text) {
  return OccurrenceNet::build(parse_net_document(text).candidate);
}

// Canonical text: declarations in index order (consecutive elements of one
// kind share a line), then arcs sorted by index, then named sets.
inline std::string serialize_net(const OccurrenceNet& net, const std::vector<NamedSet>& sets = {}) {
  std::ostringstream os;
  os << "version " << kFormatVersion << '\n';
  for (std::size_t i = 0; i < net.size();) {
    ElementKind k = net.kind(i);
    os << (k == ElementKind::condition ? "cond" : "event");
    for (; i < net.size() && net.kind(i) == k; ++i) os << ' ' << net.label(i);
    os << '\n';
  }
  for (const auto& a : net.arcs()) os << "arc " << net.label(a.from) << ' ' << net.label(a.to) << '\n';
  for (const auto& s : sets) os << "set " << s.name << detail::join_labels(s.labels) << '\n';
  return os.str();
}

inline PosetDocument parse_poset_document(std::string_view text) {
  PosetDocument doc;
  detail::Declarations decls;
  std::vector<std::pair<ElementIndex, ElementIndex>> pairs;
  std::vector<std::size_t> pair_lines;
  std::map<std::string, bool> set_names;
  bool first = true;
  for (const auto& line : detail::tokenize(text)) {
    const auto& key = line.tokens[0].text;
    if (key == "version") {
      if (!first) throw ParseError(line.number, line.tokens[0].column, "'version' must come first");
      doc.version = detail::parse_version(line);
    } else if (key == "elem") {
      detail::require_some(line);
      for (std::size_t i = 1; i < line.tokens.size(); ++i) decls.declare(line, i);
    } else if (key == "le") {
      detail::require_arity(line, 3);
      pairs.emplace_back(decls.lookup(line, 1), decls.lookup(line, 2));
      pair_lines.push_back(line.number);
    } else if (key == "set") {
      doc.sets.push_back(detail::parse_set(line, decls, set_names));
    } else {
      throw ParseError(line.number, line.tokens[0].column, "unknown directive '" + key + "'");
    }
    first = false;
  }
  try {
    doc.poset = Poset::from_pairs(decls.labels(), pairs);
  } catch (const InvalidOrder& e) {
    throw ParseError(pair_lines.empty() ? 1 : pair_lines.back(), 1, e.what());
  }
  return doc;
}

inline Poset parse_poset(std::string_view text) { return parse_poset_document(text).poset; }

// Canonical text: elements in index order, then the covering pairs.
inline std::string serialize_poset(const Poset& p, const std::vector<NamedSet>& sets = {}) {
  std::ostringstream os;
  os << "version " << kFormatVersion << '\n';
  if (p.size() > 0) os << "elem" << detail::join_labels(p.labels()) << '\n';
  for (const auto& c : p.covers()) os << "le " << p.label(c.from) << ' ' << p.label(c.to) << '\n';
  for (const auto& s : sets) os << "set " << s.name << detail::join_labels(s.labels) << '\n';
  return os.str();
}

// `ortho a b` sets a' = b; every element needs exactly one.
inline AbstractLattice parse_lattice(std::string_view text) {
  detail::Declarations decls;
  std::vector<std::pair<LatticeIndex, LatticeIndex>> pairs;
  std::vector<std::pair<LatticeIndex, LatticeIndex>> orthos;
  std::vector<std::size_t> ortho_lines;
  bool first = true;
  std::size_t last_line = 1;
  for (const auto& line : detail::tokenize(text)) {
    const auto& key = line.tokens[0].text;
    last_line = line.number;
    if (key == "version") {
      if (!first) throw ParseError(line.number, line.tokens[0].column, "'version' must come first");
      detail::parse_version(line);
    } else if (key == "elem") {
      detail::require_some(line);
      for (std::size_t i = 1; i < line.tokens.size(); ++i) decls.declare(line, i);
    } else if (key == "le") {
      detail::require_arity(line, 3);
      pairs.emplace_back(decls.lookup(line, 1), decls.lookup(line, 2));
    } else if (key == "ortho") {
      detail::require_arity(line, 3);
      orthos.emplace_back(decls.lookup(line, 1), decls.lookup(line, 2));
      ortho_lines.push_back(line.number);
    } else {
      throw ParseError(line.number, line.tokens[0].column, "unknown directive '" + key + "'");
    }
    first = false;
  }
  const std::size_t n = decls.labels().size();
  std::vector<LatticeIndex> ortho(n, kNoElement);
  for (std::size_t i = 0; i < orthos.size(); ++i) {
    auto [a, b] = orthos[i];
    if (ortho[a] != kNoElement)
      throw ParseError(ortho_lines[i], 1, "second 'ortho' for '" + decls.labels()[a] + "'");
    ortho[a] = b;
  }
  for (std::size_t a = 0; a < n; ++a)
    if (ortho[a] == kNoElement) throw ParseError(last_line, 1, "no 'ortho' for '" + decls.labels()[a] + "'");
  try {
    return AbstractLattice::from_pairs(decls.labels(), pairs, std::move(ortho));
  } catch (const InvalidLattice& e) {
    throw ParseError(last_line, 1, e.what());
  }
}

inline std::string serialize_lattice(const AbstractLattice& l) {
  std::ostringstream os;
  os << "version " << kFormatVersion << '\n';
  os << "elem" << detail::join_labels(l.order().labels()) << '\n';
  for (const auto& c : l.order().covers()) os << "le " << l.label(c.from) << ' ' << l.label(c.to) << '\n';
  for (LatticeIndex a = 0; a < l.size(); ++a) os << "ortho " << l.label(a) << ' ' << l.label(l.ortho(a)) << '\n';
  return os.str();
}

// 64-bit FNV-1a of the canonical text, as 16 hex digits.
inline std::string content_hash(std::string_view canonical_text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace ocnet
