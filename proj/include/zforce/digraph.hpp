#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zforce/errors.hpp"
#include "zforce/vertex_set.hpp"

namespace zforce {

using Arc = std::pair<int, int>;

class DigraphBuilder;

/**
 * Immutable simple digraph on vertices 0..n-1.
 *
 * Out- and in-neighbourhoods are stored as VertexSets; when n <= 64 an
 * additional single-word copy of every row backs the mask fast path used by
 * the exhaustive solvers.  Loops are only representable when the digraph was
 * built in loop mode (allows_loops()); whether the loop colour change rule
 * applies is decided by has_loops().
 */
class Digraph {
 public:
  Digraph() = default;

  static Digraph from_arcs(std::size_t n, std::span<const Arc> arcs, bool allow_loops = false);

  std::size_t order() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return arc_count_; }
  bool allows_loops() const noexcept { return allow_loops_; }
  bool has_loops() const noexcept { return loop_count_ > 0; }
  bool fits_mask() const noexcept { return n_ <= kMaskBits; }

  bool has_arc(int u, int v) const noexcept { return valid(u) && out_[idx(u)].contains(v); }

  const VertexSet& out(int v) const { return out_.at(idx(v)); }
  const VertexSet& in(int v) const { return in_.at(idx(v)); }

  /// Fast-path rows; only meaningful when fits_mask().
  Mask out_mask(int v) const noexcept { return out_mask_[idx(v)]; }
  Mask in_mask(int v) const noexcept { return in_mask_[idx(v)]; }
  std::span<const Mask> out_masks() const noexcept { return out_mask_; }

  std::size_t out_degree(int v) const { return out(v).size(); }
  std::size_t in_degree(int v) const { return in(v).size(); }

  /// Arcs sorted by (tail, head).
  std::vector<Arc> arcs() const {
    std::vector<Arc> result;
    result.reserve(arc_count_);
    for (std::size_t u = 0; u < n_; ++u)
      out_[u].for_each([&](int v) { result.emplace_back(static_cast<int>(u), v); });
    return result;
  }

  VertexSet all() const { return VertexSet::full(n_); }
  VertexSet none() const { return VertexSet(n_); }

  /// Same vertex count and arc set; the loop-mode flag is ignored.
  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  friend class DigraphBuilder;

  static std::size_t idx(int v) noexcept { return static_cast<std::size_t>(v); }
  bool valid(int v) const noexcept { return v >= 0 && static_cast<std::size_t>(v) < n_; }

  std::size_t n_ = 0;
  std::size_t arc_count_ = 0;
  std::size_t loop_count_ = 0;
  bool allow_loops_ = false;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
  std::vector<Mask> out_mask_;
  std::vector<Mask> in_mask_;
};

/// Accumulates arcs, then freezes them into a Digraph.  Repeated arcs collapse.
class DigraphBuilder {
 public:
  explicit DigraphBuilder(std::size_t n, bool allow_loops = false)
      : n_(n), allow_loops_(allow_loops), out_(n, VertexSet(n)) {}

  std::size_t order() const noexcept { return n_; }

  DigraphBuilder& add_arc(int u, int v) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n_ || static_cast<std::size_t>(v) >= n_)
      throw std::out_of_range("arc (" + std::to_string(u) + "," + std::to_string(v) +
                              ") outside vertex range [0," + std::to_string(n_) + ")");
    if (u == v && !allow_loops_)
      throw LoopModeError("loop at vertex " + std::to_string(u) + " in a loopless digraph");
    out_[static_cast<std::size_t>(u)].insert(v);
    return *this;
  }

  /// Adds both uv and vu.
  DigraphBuilder& add_edge(int u, int v) { return add_arc(u, v).add_arc(v, u); }

  bool has_arc(int u, int v) const { return out_.at(static_cast<std::size_t>(u)).contains(v); }

  Digraph build() const {
    Digraph d;
    d.n_ = n_;
    d.allow_loops_ = allow_loops_;
    d.out_ = out_;
    d.in_.assign(n_, VertexSet(n_));
    for (std::size_t u = 0; u < n_; ++u) {
      out_[u].for_each([&](int v) {
        d.in_[static_cast<std::size_t>(v)].insert(static_cast<int>(u));
        ++d.arc_count_;
        if (v == static_cast<int>(u)) ++d.loop_count_;
      });
    }
    if (d.fits_mask()) {
      d.out_mask_.resize(n_);
      d.in_mask_.resize(n_);
      for (std::size_t v = 0; v < n_; ++v) {
        d.out_mask_[v] = d.out_[v].mask();
        d.in_mask_[v] = d.in_[v].mask();
      }
    }
    return d;
  }

 private:
  std::size_t n_;
  bool allow_loops_;
  std::vector<VertexSet> out_;
};

inline Digraph Digraph::from_arcs(std::size_t n, std::span<const Arc> arcs, bool allow_loops) {
  DigraphBuilder b(n, allow_loops);
  for (auto [u, v] : arcs) b.add_arc(u, v);
  return b.build();
}

// ---------------------------------------------------------------------------
// Structural queries

inline bool is_source(const Digraph& d, int v) { return d.in(v).empty(); }
inline bool is_sink(const Digraph& d, int v) { return d.out(v).empty(); }

inline std::vector<int> sources(const Digraph& d) {
  std::vector<int> s;
  for (int v = 0; v < static_cast<int>(d.order()); ++v)
    if (is_source(d, v)) s.push_back(v);
  return s;
}

inline bool has_source(const Digraph& d) { return !sources(d).empty(); }

/// Neighbours in the underlying undirected graph (loops dropped).
inline VertexSet underlying_neighbors(const Digraph& d, int v) {
  VertexSet s = d.out(v) | d.in(v);
  s.erase(v);
  return s;
}

/// Number of edges of the underlying simple undirected graph.
inline std::size_t underlying_edge_count(const Digraph& d) {
  std::size_t twice = 0;
  for (int v = 0; v < static_cast<int>(d.order()); ++v) twice += underlying_neighbors(d, v).size();
  return twice / 2;
}

/// Weakly connected components, each as a vertex set, ordered by smallest member.
inline std::vector<VertexSet> weak_components(const Digraph& d) {
  const int n = static_cast<int>(d.order());
  std::vector<VertexSet> comps;
  VertexSet seen(d.order());
  for (int start = 0; start < n; ++start) {
    if (seen.contains(start)) continue;
    VertexSet comp(d.order());
    std::vector<int> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.insert(v);
      underlying_neighbors(d, v).for_each([&](int w) {
        if (!seen.contains(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
      });
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_weakly_connected(const Digraph& d) { return weak_components(d).size() <= 1; }

/// No 2-cycles and no loops.
inline bool is_oriented(const Digraph& d) {
  for (auto [u, v] : d.arcs())
    if (u == v || d.has_arc(v, u)) return false;
  return true;
}

/// Every vertex has in- and out-degree one and the digraph is weakly connected (n >= 2).
inline bool is_directed_cycle(const Digraph& d) {
  if (d.order() < 2 || d.has_loops()) return false;
  for (int v = 0; v < static_cast<int>(d.order()); ++v)
    if (d.out_degree(v) != 1 || d.in_degree(v) != 1) return false;
  return is_weakly_connected(d);
}

/// Acyclic in the directed sense (loops count as cycles).
inline bool is_acyclic(const Digraph& d) {
  const std::size_t n = d.order();
  std::vector<std::size_t> indeg(n);
  std::vector<int> ready;
  for (std::size_t v = 0; v < n; ++v) {
    indeg[v] = d.in_degree(static_cast<int>(v));
    if (indeg[v] == 0) ready.push_back(static_cast<int>(v));
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    ++removed;
    d.out(v).for_each([&](int w) {
      if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
    });
  }
  return removed == n;
}

/// Exactly one arc between every pair of distinct vertices, no loops.
inline bool is_tournament(const Digraph& d) {
  const int n = static_cast<int>(d.order());
  if (d.has_loops()) return false;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (d.has_arc(u, v) == d.has_arc(v, u)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Operators

/// Arcs (u,v), u != v, exactly when (u,v) is not an arc of d.
inline Digraph complement(const Digraph& d) {
  if (d.has_loops()) throw LoopModeError("complement is defined for loopless digraphs only");
  const int n = static_cast<int>(d.order());
  DigraphBuilder b(d.order());
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && !d.has_arc(u, v)) b.add_arc(u, v);
  return b.build();
}

/// Disjoint union of d and h plus every arc from a d-vertex to an h-vertex.
/// Vertices of d keep their labels; vertices of h are shifted by |V(d)|.
inline Digraph outjoin(const Digraph& d, const Digraph& h) {
  const int nd = static_cast<int>(d.order());
  const int nh = static_cast<int>(h.order());
  DigraphBuilder b(d.order() + h.order(), d.allows_loops() || h.allows_loops());
  for (auto [u, v] : d.arcs()) b.add_arc(u, v);
  for (auto [u, v] : h.arcs()) b.add_arc(u + nd, v + nd);
  for (int u = 0; u < nd; ++u)
    for (int v = 0; v < nh; ++v) b.add_arc(u, v + nd);
  return b.build();
}

/// Components placed one after another in list order.
inline Digraph disjoint_union(std::span<const Digraph> parts) {
  std::size_t total = 0;
  bool loops = false;
  for (const auto& p : parts) {
    total += p.order();
    loops = loops || p.allows_loops();
  }
  DigraphBuilder b(total, loops);
  int offset = 0;
  for (const auto& p : parts) {
    for (auto [u, v] : p.arcs()) b.add_arc(u + offset, v + offset);
    offset += static_cast<int>(p.order());
  }
  return b.build();
}

struct LineDigraph {
  Digraph graph;
  /// arc_of[x] is the arc of the base digraph represented by vertex x.
  std::vector<Arc> arc_of;
};

/// One vertex per arc of d (in d.arcs() order); arc ab whenever head(a) == tail(b).
inline LineDigraph line_digraph(const Digraph& d) {
  LineDigraph result;
  result.arc_of = d.arcs();
  const std::size_t m = result.arc_of.size();
  // arcs leaving each base vertex, as line-digraph vertex ids
  std::vector<std::vector<int>> leaving(d.order());
  for (std::size_t x = 0; x < m; ++x)
    leaving[static_cast<std::size_t>(result.arc_of[x].first)].push_back(static_cast<int>(x));
  bool loops = false;
  for (const auto& [u, v] : result.arc_of) loops = loops || u == v;
  DigraphBuilder b(m, loops || d.allows_loops());
  for (std::size_t x = 0; x < m; ++x)
    for (int y : leaving[static_cast<std::size_t>(result.arc_of[x].second)])
      b.add_arc(static_cast<int>(x), y);
  result.graph = b.build();
  return result;
}

struct Subdigraph {
  Digraph graph;
  /// original[i] is the vertex of the parent digraph that became vertex i.
  std::vector<int> original;
};

inline Subdigraph induced_subdigraph(const Digraph& d, const VertexSet& keep) {
  Subdigraph sub;
  sub.original = keep.members();
  std::vector<int> relabel(d.order(), -1);
  for (std::size_t i = 0; i < sub.original.size(); ++i)
    relabel[static_cast<std::size_t>(sub.original[i])] = static_cast<int>(i);
  DigraphBuilder b(sub.original.size(), d.allows_loops());
  for (auto [u, v] : d.arcs()) {
    int ru = relabel[static_cast<std::size_t>(u)], rv = relabel[static_cast<std::size_t>(v)];
    if (ru >= 0 && rv >= 0) b.add_arc(ru, rv);
  }
  sub.graph = b.build();
  return sub;
}

}  // namespace zforce
