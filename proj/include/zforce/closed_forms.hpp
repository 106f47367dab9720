#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "zforce/digraph.hpp"
#include "zforce/errors.hpp"
#include "zforce/generators.hpp"
#include "zforce/solvers.hpp"

namespace zforce {

// ---------------------------------------------------------------------------
// Weak paths

/// Vertex order and direction classes of a weak path, positions 0-based.
/// Position p corresponds to the one-based label v_{p+1}.
struct PathPartition {
  std::vector<int> order;    // order[p] = vertex at position p
  std::vector<int> v_minus;  // p = 0 and every p whose only arc to p-1 goes backwards
  std::vector<int> v_plus;   // p = n-1 and every p whose only arc to p+1 goes forwards
  int ell = 0;
  int i_star = 0;  // position in v_plus attaining ell
  int j_star = 0;  // position in v_minus attaining ell
};

namespace detail {

inline void require_loopless(const Digraph& d, const char* what) {
  if (d.has_loops()) throw LoopModeError(std::string(what) + " needs a loopless digraph");
}

/// Walks the underlying graph from `start`, never stepping back.
inline std::vector<int> walk_underlying(const Digraph& d, int start) {
  std::vector<int> order{start};
  VertexSet seen(d.order());
  seen.insert(start);
  for (int cur = start;;) {
    std::optional<int> next;
    underlying_neighbors(d, cur).for_each([&](int w) {
      if (!next && !seen.contains(w)) next = w;
    });
    if (!next) break;
    seen.insert(*next);
    order.push_back(*next);
    cur = *next;
  }
  return order;
}

inline std::size_t max_underlying_degree(const Digraph& d) {
  std::size_t m = 0;
  for (int v = 0; v < static_cast<int>(d.order()); ++v) m = std::max(m, underlying_neighbors(d, v).size());
  return m;
}

}  // namespace detail

inline bool is_weak_path(const Digraph& d) {
  if (d.order() == 0 || d.has_loops()) return false;
  return is_weakly_connected(d) && underlying_edge_count(d) + 1 == d.order() && detail::max_underlying_degree(d) <= 2;
}

inline PathPartition weak_path_partition(const Digraph& d) {
  detail::require_loopless(d, "weak path formula");
  if (!is_weak_path(d)) throw FamilyMismatch("underlying graph is not a path");
  PathPartition p;
  const int n = static_cast<int>(d.order());
  int start = 0;
  while (n > 1 && underlying_neighbors(d, start).size() != 1) ++start;
  p.order = detail::walk_underlying(d, start);
  auto one_way = [&](int a, int b) { return d.has_arc(p.order[a], p.order[b]) && !d.has_arc(p.order[b], p.order[a]); };
  for (int k = 0; k < n; ++k) {
    if (k == 0 || one_way(k, k - 1)) p.v_minus.push_back(k);
    if (k == n - 1 || one_way(k, k + 1)) p.v_plus.push_back(k);
  }
  p.ell = n;
  for (int j : p.v_minus)
    for (int i : p.v_plus)
      if (i >= j && i - j < p.ell) {
        p.ell = i - j;
        p.i_star = i;
        p.j_star = j;
      }
  return p;
}

/// F = n - 1 - ceil(ell / 2).
inline std::size_t f_weak_path(const Digraph& d) {
  auto p = weak_path_partition(d);
  return d.order() - 1 - static_cast<std::size_t>((p.ell + 1) / 2);
}

// ---------------------------------------------------------------------------
// Weak cycles

/// Which formula governs a weak cycle.
enum class CycleCase {
  DirectedCycle,     // V_0 empty and one of V_-, V_+ empty
  OrientedNonCycle,  // V_0 empty, both directions present: a source exists
  OneDirection,      // V_0 nonempty, exactly one of V_-, V_+ empty: sum over runs
  BothDirections,    // all three classes nonempty: distance formula
  FullyBidirected,   // V_0 is every edge; no closed form, solved exactly
};

struct Run {
  int start;   // first edge index of the run
  int length;  // number of consecutive V_0 edges
};

/// Edge-index partition of a weak cycle.  Edge k joins positions k and k+1 (mod n).
struct CyclePartition {
  std::vector<int> order;  // order[k] = vertex at position k
  std::vector<int> v_minus, v_plus, v_zero;
  std::vector<Run> runs;  // maximal cyclic runs of V_0
  std::optional<int> ell;  // min (j - i) mod n, i in V_-, j in V_+ (BothDirections only)
  CycleCase kind = CycleCase::DirectedCycle;
};

inline bool is_weak_cycle(const Digraph& d) {
  if (d.order() < 3 || d.has_loops() || !is_weakly_connected(d)) return false;
  for (int v = 0; v < static_cast<int>(d.order()); ++v)
    if (underlying_neighbors(d, v).size() != 2) return false;
  return true;
}

inline CyclePartition weak_cycle_partition(const Digraph& d) {
  detail::require_loopless(d, "weak cycle formula");
  if (!is_weak_cycle(d)) throw FamilyMismatch("underlying graph is not a cycle on >= 3 vertices");
  CyclePartition c;
  const int n = static_cast<int>(d.order());
  c.order = detail::walk_underlying(d, 0);
  std::vector<char> zero(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    int a = c.order[static_cast<std::size_t>(k)], b = c.order[static_cast<std::size_t>((k + 1) % n)];
    bool fwd = d.has_arc(a, b), bwd = d.has_arc(b, a);
    if (fwd && bwd) {
      c.v_zero.push_back(k);
      zero[static_cast<std::size_t>(k)] = 1;
    } else if (fwd) {
      c.v_plus.push_back(k);
    } else {
      c.v_minus.push_back(k);
    }
  }

  if (static_cast<int>(c.v_zero.size()) == n) {
    c.runs.push_back({0, n});
    c.kind = CycleCase::FullyBidirected;
    return c;
  }
  int anchor = 0;
  while (zero[static_cast<std::size_t>(anchor)]) ++anchor;
  for (int step = 1; step <= n; ++step) {
    int k = (anchor + step) % n;
    if (!zero[static_cast<std::size_t>(k)]) continue;
    int prev = (k + n - 1) % n;
    if (zero[static_cast<std::size_t>(prev)])
      ++c.runs.back().length;
    else
      c.runs.push_back({k, 1});
  }

  bool has_minus = !c.v_minus.empty(), has_plus = !c.v_plus.empty();
  if (c.v_zero.empty()) {
    c.kind = has_minus && has_plus ? CycleCase::OrientedNonCycle : CycleCase::DirectedCycle;
  } else if (has_minus && has_plus) {
    c.kind = CycleCase::BothDirections;
    int best = n;
    for (int i : c.v_minus)
      for (int j : c.v_plus) best = std::min(best, ((j - i) % n + n) % n);
    c.ell = best;
  } else {
    c.kind = CycleCase::OneDirection;
  }
  return c;
}

/// F of a weak cycle.  The fully bidirected cycle has no closed form here and
/// is delegated to the exact solver (subject to opt's bound).
inline std::size_t f_weak_cycle(const Digraph& d, const SolverOptions& opt = {}) {
  auto c = weak_cycle_partition(d);
  const std::size_t n = d.order();
  switch (c.kind) {
    case CycleCase::DirectedCycle:
      return 0;
    case CycleCase::OrientedNonCycle:
      return n - 1;
    case CycleCase::OneDirection: {
      std::size_t sum = 0;
      for (const Run& r : c.runs) sum += static_cast<std::size_t>((r.length + 1) / 2);
      return sum;
    }
    case CycleCase::BothDirections:
      return n - 1 - static_cast<std::size_t>(*c.ell / 2);
    case CycleCase::FullyBidirected:
      return failed_zero_forcing_number(d, opt)->value;
  }
  throw std::logic_error("unreachable cycle case");
}

/// A weak cycle on n vertices with F = k.  For k <= n/2 the bidirected edges are
/// 0, 2, ..., 2k-2 and the rest point forwards; otherwise edge 0 points forwards,
/// edge 2k-n+1 backwards and all others are bidirected.
inline Digraph construct_weak_cycle(std::size_t n, std::size_t k) {
  if (n < 3 || k >= n) throw std::invalid_argument("construct_weak_cycle needs n >= 3 and 0 <= k <= n-1");
  OrientationSpec spec(n, Orientation::Forward);
  if (2 * k <= n) {
    for (std::size_t i = 0; i < k; ++i) spec[2 * i] = Orientation::Both;
  } else {
    std::fill(spec.begin(), spec.end(), Orientation::Both);
    spec[0] = Orientation::Forward;
    spec[2 * k - n + 1] = Orientation::Backward;
  }
  return weak_cycle(spec);
}

// ---------------------------------------------------------------------------
// Components, DAGs, trees, stars

struct ComponentValue {
  std::size_t f;
  std::size_t order;
};

/// max_j ( F_j + sum_{i != j} |V_i| ).
inline std::size_t f_components(std::span<const ComponentValue> parts) {
  if (parts.empty()) throw std::invalid_argument("f_components needs at least one component");
  std::size_t total = 0;
  for (const auto& p : parts) total += p.order;
  std::size_t best = 0;
  for (const auto& p : parts) best = std::max(best, p.f + total - p.order);
  return best;
}

inline std::size_t f_dag(const Digraph& d) {
  if (d.order() == 0 || !is_acyclic(d)) throw FamilyMismatch("not a nonempty directed acyclic graph");
  return d.order() - 1;
}

inline bool is_oriented_tree(const Digraph& d) {
  return d.order() > 0 && is_oriented(d) && is_weakly_connected(d) && underlying_edge_count(d) + 1 == d.order();
}

inline std::size_t f_oriented_tree(const Digraph& d) {
  if (!is_oriented_tree(d)) throw FamilyMismatch("not an oriented tree");
  return d.order() - 1;
}

/// Centre of K_{1,t}, t >= 1, if the underlying graph is one.
inline std::optional<int> star_center(const Digraph& d) {
  const int n = static_cast<int>(d.order());
  if (n < 2 || d.has_loops() || underlying_edge_count(d) + 1 != d.order()) return std::nullopt;
  for (int c = 0; c < n; ++c)
    if (static_cast<int>(underlying_neighbors(d, c).size()) == n - 1) return c;
  return std::nullopt;
}

/// t if oriented or some leaf has in-degree 0, otherwise t - 1.
inline std::size_t f_star(const Digraph& d) {
  auto centre = star_center(d);
  if (!centre) throw FamilyMismatch("underlying graph is not K_{1,t}");
  const std::size_t t = d.order() - 1;
  if (is_oriented(d)) return t;
  for (int v = 0; v < static_cast<int>(d.order()); ++v)
    if (v != *centre && d.in_degree(v) == 0) return t;
  return t - 1;
}

// ---------------------------------------------------------------------------
// Line digraphs

/// F(L(D)) from the base digraph D: 0 for a directed cycle, m-1 with a source,
/// m-2 otherwise (m = |A(D)|).  When D has loops, L(D) must have Z > 0; that is
/// checked with the exact solver.
inline std::size_t f_line_digraph(const Digraph& base, const SolverOptions& opt = {}) {
  if (base.order() < 2 || !is_weakly_connected(base))
    throw FamilyMismatch("line digraph formula needs a weakly connected base with >= 2 vertices");
  if (base.has_loops()) {
    auto line = line_digraph(base);
    if (zero_forcing_number(line.graph, opt).value == 0)
      throw UndefinedMetric("F(L(D)) is undefined: Z(L(D)) = 0 under the loop rule");
  }
  const std::size_t m = base.arc_count();
  if (is_directed_cycle(base)) return 0;
  if (has_source(base)) return m - 1;
  return m - 2;
}

// ---------------------------------------------------------------------------
// Dispatcher

enum class Method { ClosedForm, Exact };

inline const char* to_string(Method m) { return m == Method::ClosedForm ? "closed-form" : "exact"; }

struct FailedForcingResult {
  std::optional<std::size_t> value;  // empty when F is undefined
  std::optional<VertexSet> witness;  // only the exact solver produces one
  Method method = Method::Exact;
  std::string family;                // closed-form family that fired, if any
  SearchStats stats;
};

inline FailedForcingResult exact_failed_zero_forcing(const Digraph& d, const SolverOptions& opt = {}) {
  FailedForcingResult r;
  r.method = Method::Exact;
  if (auto f = failed_zero_forcing_number(d, opt)) {
    r.value = f->value;
    r.witness = f->witness;
    r.stats = f->stats;
  }
  return r;
}

/// Uses the first closed form whose family matcher fires; the exact solver otherwise.
inline FailedForcingResult auto_failed_zero_forcing(const Digraph& d, const SolverOptions& opt = {}) {
  if (d.order() == 0 || d.has_loops()) return exact_failed_zero_forcing(d, opt);
  auto closed = [](std::size_t value, std::string family) {
    FailedForcingResult r;
    r.value = value;
    r.method = Method::ClosedForm;
    r.family = std::move(family);
    return r;
  };
  const std::size_t n = d.order();
  if (is_directed_cycle(d)) return closed(0, "directed-cycle");
  if (has_source(d)) return closed(n - 1, "source");
  if (auto comps = weak_components(d); comps.size() > 1) {
    std::vector<ComponentValue> parts;
    for (const auto& c : comps) {
      auto sub = induced_subdigraph(d, c);
      auto r = auto_failed_zero_forcing(sub.graph, opt);
      if (!r.value) return exact_failed_zero_forcing(d, opt);
      parts.push_back({*r.value, sub.graph.order()});
    }
    return closed(f_components(parts), "components");
  }
  if (is_weak_path(d)) return closed(f_weak_path(d), "weak-path");
  if (is_weak_cycle(d) && weak_cycle_partition(d).kind != CycleCase::FullyBidirected)
    return closed(f_weak_cycle(d, opt), "weak-cycle");
  if (star_center(d)) return closed(f_star(d), "star");
  return exact_failed_zero_forcing(d, opt);
}

/// F of a digraph via its weak components; each component goes through the
/// dispatcher.  Loopless input only.
inline std::size_t f_of_disconnected(const Digraph& d, const SolverOptions& opt = {}) {
  detail::require_loopless(d, "component formula");
  std::vector<ComponentValue> parts;
  for (const auto& c : weak_components(d)) {
    auto sub = induced_subdigraph(d, c);
    parts.push_back({*auto_failed_zero_forcing(sub.graph, opt).value, sub.graph.order()});
  }
  return f_components(parts);
}

}  // namespace zforce
