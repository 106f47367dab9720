#pragma once

#include <cstddef>
#include <vector>

#include "zforce/digraph.hpp"
#include "zforce/vertex_set.hpp"

namespace zforce {

/// Standard: a filled vertex with exactly one empty out-neighbour forces it.
/// Loop: any vertex, filled or not, with exactly one empty out-neighbour forces it.
enum class ColorChangeRule { Standard, Loop };

/// The loop rule applies exactly when the digraph carries at least one loop.
inline ColorChangeRule rule_for(const Digraph& d) noexcept {
  return d.has_loops() ? ColorChangeRule::Loop : ColorChangeRule::Standard;
}

struct ColorChange {
  int round;  // 1-based: the change produces B^round(S)
  int forcer;
  int forced;

  friend bool operator==(const ColorChange&, const ColorChange&) = default;
};

struct ForcingTrace {
  std::vector<ColorChange> changes;
  VertexSet final;
  int rounds = 0;  // number of rounds that forced at least one vertex
};

namespace detail {

inline void require_capacity(const Digraph& d, const VertexSet& s) {
  if (s.capacity() != d.order())
    throw std::out_of_range("vertex set capacity " + std::to_string(s.capacity()) +
                            " does not match digraph order " + std::to_string(d.order()));
}

inline void require_mask(const Digraph& d) {
  if (!d.fits_mask()) throw std::invalid_argument("mask fast path needs n <= 64");
}

/// Rows accessor for the fast path and the dynamic path.
struct MaskRows {
  const Digraph* d;
  Mask operator()(int v) const noexcept { return d->out_mask(v); }
};
struct SetRows {
  const Digraph* d;
  const VertexSet& operator()(int v) const { return d->out(v); }
};

/// Calls emit(forcer, forced) for every colour change valid against `filled`.
template <class Set, class Rows, class Emit>
void for_each_force(std::size_t n, const Rows& row, const Set& filled, bool loop_rule, Emit&& emit) {
  for (int v = 0; v < static_cast<int>(n); ++v) {
    if (!loop_rule && !bits::has(filled, v)) continue;
    if (auto w = bits::single(bits::without(row(v), filled))) emit(v, *w);
  }
}

/// Fixed point of the rule, applying forces as soon as they are found.
template <class Set, class Rows>
Set propagate(std::size_t n, const Rows& row, Set filled, bool loop_rule) {
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < static_cast<int>(n); ++v) {
      if (!loop_rule && !bits::has(filled, v)) continue;
      if (auto w = bits::single(bits::without(row(v), filled))) {
        bits::add(filled, *w);
        changed = true;
      }
    }
  }
  return filled;
}

template <class Set, class Rows>
bool stalled(std::size_t n, const Rows& row, const Set& filled, bool loop_rule) {
  bool any = false;
  for_each_force(n, row, filled, loop_rule, [&](int, int) { any = true; });
  return !any;
}

/// |N+(v) ∩ W| != 1 for every v outside W (or every v at all when strong).
template <class Set, class Rows>
bool critical(std::size_t n, const Rows& row, const Set& w, bool strong) {
  if (bits::count(w) == 0) return false;
  for (int v = 0; v < static_cast<int>(n); ++v) {
    if (!strong && bits::has(w, v)) continue;
    if (bits::count_common(row(v), w) == 1) return false;
  }
  return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Closure

/// Synchronous closure with the full chronology of colour changes.  Within a
/// round every force is checked against the previous round's set; a vertex
/// reachable from several forcers is credited to the smallest one.
inline ForcingTrace closure(const Digraph& d, const VertexSet& s) {
  detail::require_capacity(d, s);
  const bool loop_rule = rule_for(d) == ColorChangeRule::Loop;
  ForcingTrace trace;
  VertexSet filled = s;
  for (int round = 1;; ++round) {
    VertexSet next = filled;
    std::size_t before = trace.changes.size();
    detail::for_each_force(d.order(), detail::SetRows{&d}, filled, loop_rule, [&](int v, int w) {
      if (next.contains(w)) return;
      next.insert(w);
      trace.changes.push_back({round, v, w});
    });
    if (trace.changes.size() == before) break;
    trace.rounds = round;
    filled = std::move(next);
  }
  trace.final = std::move(filled);
  return trace;
}

/// Closure without a trace; uses the mask kernel when n <= 64.
inline VertexSet closure_set(const Digraph& d, const VertexSet& s) {
  detail::require_capacity(d, s);
  const bool loop_rule = d.has_loops();
  if (d.fits_mask())
    return VertexSet::from_mask(d.order(), detail::propagate(d.order(), detail::MaskRows{&d}, s.mask(), loop_rule));
  return detail::propagate(d.order(), detail::SetRows{&d}, s, loop_rule);
}

inline Mask closure_mask(const Digraph& d, Mask s) {
  detail::require_mask(d);
  return detail::propagate(d.order(), detail::MaskRows{&d}, s & full_mask(d.order()), d.has_loops());
}

// ---------------------------------------------------------------------------
// Predicates

inline bool is_zfs(const Digraph& d, Mask s) { return closure_mask(d, s) == full_mask(d.order()); }
inline bool is_zfs(const Digraph& d, const VertexSet& s) {
  return closure_set(d, s).size() == d.order();
}

inline bool is_fzfs(const Digraph& d, Mask s) { return !is_zfs(d, s); }
inline bool is_fzfs(const Digraph& d, const VertexSet& s) { return !is_zfs(d, s); }

/// True iff one round of the applicable rule forces nothing.
inline bool is_stalled(const Digraph& d, Mask s) {
  detail::require_mask(d);
  return detail::stalled(d.order(), detail::MaskRows{&d}, s, d.has_loops());
}
inline bool is_stalled(const Digraph& d, const VertexSet& s) {
  detail::require_capacity(d, s);
  if (d.fits_mask()) return is_stalled(d, s.mask());
  return detail::stalled(d.order(), detail::SetRows{&d}, s, d.has_loops());
}

inline bool is_critical(const Digraph& d, Mask w) {
  detail::require_mask(d);
  return detail::critical(d.order(), detail::MaskRows{&d}, w, false);
}
inline bool is_critical(const Digraph& d, const VertexSet& w) {
  detail::require_capacity(d, w);
  if (d.fits_mask()) return is_critical(d, w.mask());
  return detail::critical(d.order(), detail::SetRows{&d}, w, false);
}

inline bool is_strongly_critical(const Digraph& d, Mask w) {
  detail::require_mask(d);
  return detail::critical(d.order(), detail::MaskRows{&d}, w, true);
}
inline bool is_strongly_critical(const Digraph& d, const VertexSet& w) {
  detail::require_capacity(d, w);
  if (d.fits_mask()) return is_strongly_critical(d, w.mask());
  return detail::critical(d.order(), detail::SetRows{&d}, w, true);
}

}  // namespace zforce
