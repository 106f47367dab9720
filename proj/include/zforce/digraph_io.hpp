#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>

#include "zforce/digraph.hpp"
#include "zforce/errors.hpp"

namespace zforce {

// Text format:
//   n <count>
//   loops            (optional; enables loop mode)
//   u v              (one arc per line, 0-indexed)
// '#' starts a comment; blank lines are ignored.

inline Digraph read_digraph(std::istream& in) {
  std::string line;
  int lineno = 0;
  std::optional<std::size_t> n;
  bool loops = false;
  std::vector<Arc> arcs;

  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;

    if (!n) {
      long long count = -1;
      if (head != "n" || !(ls >> count) || count < 0)
        throw ParseError(lineno, "expected header 'n <count>'");
      n = static_cast<std::size_t>(count);
    } else if (head == "loops") {
      if (!arcs.empty()) throw ParseError(lineno, "'loops' must precede the arc list");
      loops = true;
    } else {
      long long u = 0, v = 0;
      std::istringstream as(line);
      if (!(as >> u >> v)) throw ParseError(lineno, "expected arc 'u v'");
      if (std::string extra; as >> extra) throw ParseError(lineno, "trailing tokens after arc");
      if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= *n || static_cast<std::size_t>(v) >= *n)
        throw ParseError(lineno, "arc endpoint out of range");
      if (u == v && !loops) throw ParseError(lineno, "loop without 'loops' declaration");
      arcs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
  }
  if (!n) throw ParseError(lineno, "missing header 'n <count>'");
  DigraphBuilder b(*n, loops);
  for (auto [u, v] : arcs) b.add_arc(u, v);
  return b.build();
}

inline Digraph parse_digraph(const std::string& text) {
  std::istringstream in(text);
  return read_digraph(in);
}

inline void write_digraph(std::ostream& out, const Digraph& d) {
  out << "n " << d.order() << '\n';
  if (d.allows_loops()) out << "loops\n";
  for (auto [u, v] : d.arcs()) out << u << ' ' << v << '\n';
}

inline std::string format_digraph(const Digraph& d) {
  std::ostringstream out;
  write_digraph(out, d);
  return out.str();
}

/// Graphviz export; every vertex is listed so isolated vertices survive.
inline void write_dot(std::ostream& out, const Digraph& d, const std::string& name = "D") {
  out << "digraph " << name << " {\n";
  for (std::size_t v = 0; v < d.order(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : d.arcs()) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
}

inline std::string format_dot(const Digraph& d) {
  std::ostringstream out;
  write_dot(out, d);
  return out.str();
}

/// Reads the subset of DOT that write_dot emits: numeric node statements and
/// `a -> b` edge statements.  Loops switch the result to loop mode.
inline Digraph read_dot(std::istream& in) {
  static const std::regex node_re(R"(^\s*(\d+)\s*;?\s*$)");
  static const std::regex edge_re(R"(^\s*(\d+)\s*->\s*(\d+)\s*;?\s*$)");
  std::string line;
  int lineno = 0;
  std::size_t n = 0;
  std::vector<Arc> arcs;
  bool loops = false;
  bool opened = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::smatch m;
    if (!opened) {
      if (line.find("digraph") != std::string::npos && line.find('{') != std::string::npos) opened = true;
      continue;
    }
    if (line.find('}') != std::string::npos) break;
    if (std::regex_match(line, m, edge_re)) {
      int u = std::stoi(m[1]), v = std::stoi(m[2]);
      arcs.emplace_back(u, v);
      loops = loops || u == v;
      n = std::max<std::size_t>(n, static_cast<std::size_t>(std::max(u, v)) + 1);
    } else if (std::regex_match(line, m, node_re)) {
      n = std::max<std::size_t>(n, static_cast<std::size_t>(std::stoi(m[1])) + 1);
    } else if (line.find_first_not_of(" \t\r") != std::string::npos) {
      throw ParseError(lineno, "unsupported DOT statement");
    }
  }
  if (!opened) throw ParseError(lineno, "missing 'digraph {' header");
  return Digraph::from_arcs(n, arcs, loops);
}

}  // namespace zforce
