#pragma once

#include <sstream>
#include <string>

#include "ocnet/lattice.hpp"
#include "ocnet/net.hpp"
#include "ocnet/poset.hpp"

namespace ocnet {

struct DotOptions {
  std::string graph_name = "G";
  bool bottom_to_top = true;
};

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline void dot_header(std::ostringstream& os, const DotOptions& options, const char* rankdir) {
  os << "digraph " << dot_quote(options.graph_name) << " {\n";
  os << "  rankdir=" << rankdir << ";\n";
}

}  // namespace detail

// Conditions as circles, events as boxes; nodes in index order, arcs sorted.
inline std::string export_dot(const OccurrenceNet& net, const DotOptions& options = {}) {
  std::ostringstream os;
  detail::dot_header(os, options, "LR");
  for (ElementIndex x = 0; x < net.size(); ++x)
    os << "  n" << x << " [label=" << detail::dot_quote(net.label(x))
       << ", shape=" << (net.is_condition(x) ? "circle" : "box") << "];\n";
  for (const auto& a : net.arcs()) os << "  n" << a.from << " -> n" << a.to << ";\n";
  os << "}\n";
  return os.str();
}

// Hasse diagram of a poset.
inline std::string export_dot(const Poset& poset, const DotOptions& options = {}) {
  std::ostringstream os;
  detail::dot_header(os, options, options.bottom_to_top ? "BT" : "TB");
  for (ElementIndex x = 0; x < poset.size(); ++x)
    os << "  n" << x << " [label=" << detail::dot_quote(poset.label(x)) << "];\n";
  for (const auto& c : poset.covers()) os << "  n" << c.from << " -> n" << c.to << ";\n";
  os << "}\n";
  return os.str();
}

// Hasse diagram of a finite lattice, bottom element at the bottom.
template <FiniteOrthoStructure L>
std::string export_lattice_dot(const L& lattice, const DotOptions& options = {}) {
  std::ostringstream os;
  detail::dot_header(os, options, options.bottom_to_top ? "BT" : "TB");
  for (LatticeIndex a = 0; a < lattice.size(); ++a)
    os << "  l" << a << " [label=" << detail::dot_quote(lattice.label(a)) << "];\n";
  for (const auto& [a, b] : hasse(lattice)) os << "  l" << a << " -> l" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace ocnet
