#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zforce/digraph.hpp"
#include "zforce/errors.hpp"

namespace zforce {

/// Families of digraphs with F(D) < Z(D).
enum class ClassKind {
  DirectedCycle,
  RegularTournament5,
  CompleteMinusSpanningCycles,    // K_n minus a cycle cover of V (cycles of length >= 3)
  CompleteMinusCyclesPlusVertex,  // K_n minus a cycle cover of V - v
  CompleteMinusCyclesPlusPendant, // K_n minus vu and a cycle cover of V - v
  SinkOutjoinComplement,          // K_{n-1} outjoined to a sink, minus a cycle cover of K_{n-1}
  CompleteOutjoinEmpty,           // K_j outjoined to an empty digraph, j >= 2
  EmptyGraph,
  TriangleOutjoinVertex,          // oriented family: directed 3-cycle outjoined to one vertex
  None,
};

inline const char* to_string(ClassKind k) {
  switch (k) {
    case ClassKind::DirectedCycle: return "DirectedCycle";
    case ClassKind::RegularTournament5: return "RegularTournament5";
    case ClassKind::CompleteMinusSpanningCycles: return "CompleteMinusSpanningCycles";
    case ClassKind::CompleteMinusCyclesPlusVertex: return "CompleteMinusCyclesPlusVertex";
    case ClassKind::CompleteMinusCyclesPlusPendant: return "CompleteMinusCyclesPlusPendant";
    case ClassKind::SinkOutjoinComplement: return "SinkOutjoinComplement";
    case ClassKind::CompleteOutjoinEmpty: return "CompleteOutjoinEmpty";
    case ClassKind::EmptyGraph: return "EmptyGraph";
    case ClassKind::TriangleOutjoinVertex: return "TriangleOutjoinVertex";
    case ClassKind::None: return "None";
  }
  return "?";
}

struct Classification {
  ClassKind kind = ClassKind::None;
  std::vector<std::vector<int>> removed_cycles;  // cycle cover removed from the complete digraph
  std::optional<int> distinguished;              // v of the "V - v" and sink variants
  std::optional<int> pendant_head;               // u of the removed arc vu
  std::vector<int> dominating;                   // the K_j side of an outjoin
};

namespace detail {

/// Cycles of `g` restricted to `within` when every vertex there has exactly one
/// in- and one out-neighbour inside `within` and no cycle is shorter than 3.
inline std::optional<std::vector<std::vector<int>>> cycle_cover(const Digraph& g, const VertexSet& within) {
  std::vector<int> succ(g.order(), -1);
  bool ok = true;
  within.for_each([&](int x) {
    auto s = (g.out(x) & within).single();
    auto p = (g.in(x) & within).single();
    if (!s || !p) ok = false;
    else succ[static_cast<std::size_t>(x)] = *s;
  });
  if (!ok) return std::nullopt;
  std::vector<std::vector<int>> cycles;
  VertexSet seen(g.order());
  for (int start : within.members()) {
    if (seen.contains(start)) continue;
    std::vector<int> cyc;
    for (int x = start; !seen.contains(x); x = succ[static_cast<std::size_t>(x)]) {
      seen.insert(x);
      cyc.push_back(x);
    }
    if (cyc.size() < 3) return std::nullopt;
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

inline bool is_regular_tournament5(const Digraph& d) {
  if (d.order() != 5 || !is_tournament(d)) return false;
  for (int v = 0; v < 5; ++v)
    if (d.out_degree(v) != 2) return false;
  return true;
}

}  // namespace detail

/**
 * Structural recognition of the digraphs with F(D) < Z(D).
 *
 * Overlapping families resolve by the fixed priority DirectedCycle, EmptyGraph,
 * CompleteOutjoinEmpty, the three cycle-cover complements, SinkOutjoinComplement,
 * RegularTournament5.
 */
inline Classification classify_f_less_than_z(const Digraph& d) {
  if (d.has_loops()) throw LoopModeError("classification is defined for loopless digraphs only");
  Classification c;
  const int n = static_cast<int>(d.order());
  if (n == 0) return c;

  if (is_directed_cycle(d)) {
    c.kind = ClassKind::DirectedCycle;
    return c;
  }
  if (d.arc_count() == 0) {
    c.kind = ClassKind::EmptyGraph;
    return c;
  }

  {
    std::vector<int> dominating;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (d.out_degree(v) == static_cast<std::size_t>(n - 1))
        dominating.push_back(v);
      else if (d.out_degree(v) != 0)
        ok = false;
    }
    if (ok && dominating.size() >= 2) {
      c.kind = ClassKind::CompleteOutjoinEmpty;
      c.dominating = std::move(dominating);
      return c;
    }
  }

  const Digraph comp = complement(d);
  const VertexSet all = d.all();

  if (n >= 3) {
    if (auto cyc = detail::cycle_cover(comp, all)) {
      c.kind = ClassKind::CompleteMinusSpanningCycles;
      c.removed_cycles = std::move(*cyc);
      return c;
    }
  }
  if (n >= 4) {
    for (int v = 0; v < n; ++v) {
      if (!comp.in(v).empty() || comp.out_degree(v) > 1) continue;
      VertexSet rest = all;
      rest.erase(v);
      auto cyc = detail::cycle_cover(comp, rest);
      if (!cyc) continue;
      c.removed_cycles = std::move(*cyc);
      c.distinguished = v;
      if (comp.out(v).empty()) {
        c.kind = ClassKind::CompleteMinusCyclesPlusVertex;
      } else {
        c.kind = ClassKind::CompleteMinusCyclesPlusPendant;
        c.pendant_head = comp.out(v).first();
      }
      return c;
    }
    for (int v = 0; v < n; ++v) {
      if (!d.out(v).empty() || d.in_degree(v) != static_cast<std::size_t>(n - 1)) continue;
      VertexSet rest = all;
      rest.erase(v);
      if (auto cyc = detail::cycle_cover(comp, rest)) {
        c.kind = ClassKind::SinkOutjoinComplement;
        c.removed_cycles = std::move(*cyc);
        c.distinguished = v;
        return c;
      }
    }
  }
  if (detail::is_regular_tournament5(d)) c.kind = ClassKind::RegularTournament5;
  return c;
}

/// k such that W is critical exactly when |W| >= k, for the families that have one.
inline std::optional<std::size_t> critical_threshold(const Digraph& d) {
  switch (classify_f_less_than_z(d).kind) {
    case ClassKind::EmptyGraph: return 1;
    case ClassKind::CompleteOutjoinEmpty: return 2;
    case ClassKind::CompleteMinusSpanningCycles:
    case ClassKind::CompleteMinusCyclesPlusVertex:
    case ClassKind::CompleteMinusCyclesPlusPendant:
    case ClassKind::SinkOutjoinComplement: return 3;
    case ClassKind::RegularTournament5: return 4;
    case ClassKind::DirectedCycle: return d.order();
    default: return std::nullopt;
  }
}

/// Oriented graphs with F < Z: empty, directed cycle, directed 3-cycle
/// outjoined to one vertex, regular tournament on 5 vertices.
inline ClassKind classify_oriented(const Digraph& d) {
  if (!is_oriented(d)) throw FamilyMismatch("classify_oriented needs an oriented graph (no 2-cycles, no loops)");
  if (d.order() == 0) return ClassKind::None;
  if (d.arc_count() == 0) return ClassKind::EmptyGraph;
  if (is_directed_cycle(d)) return ClassKind::DirectedCycle;
  if (d.order() == 4) {
    for (int v = 0; v < 4; ++v) {
      if (!d.out(v).empty() || d.in_degree(v) != 3) continue;
      VertexSet rest = d.all();
      rest.erase(v);
      if (is_directed_cycle(induced_subdigraph(d, rest).graph)) return ClassKind::TriangleOutjoinVertex;
    }
  }
  if (detail::is_regular_tournament5(d)) return ClassKind::RegularTournament5;
  return ClassKind::None;
}

}  // namespace zforce
