#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "zforce/digraph.hpp"
#include "zforce/errors.hpp"
#include "zforce/forcing.hpp"

namespace zforce {

struct SolverOptions {
  std::size_t max_vertices = 20;  // exhaustive searches refuse larger digraphs
  unsigned threads = 1;
};

struct SearchStats {
  std::uint64_t sets_examined = 0;  // closures or critical checks evaluated
  std::uint64_t nodes = 0;          // branch nodes visited by the critical-set search
};

/// A forcing parameter together with a set attaining it.
struct ForcingNumber {
  std::size_t value = 0;
  VertexSet witness;
  SearchStats stats;
};

namespace detail {

inline void require_bound(const Digraph& d, const SolverOptions& opt) {
  std::size_t bound = std::min<std::size_t>(opt.max_vertices, kMaskBits);
  if (d.order() > bound) throw BoundExceeded(d.order(), bound);
}

/// Calls fn(begin, end) on contiguous slices of [0, count), one per worker.
template <class Fn>
void parallel_slices(std::size_t count, unsigned threads, Fn&& fn) {
  threads = std::max(1u, threads);
  if (threads == 1 || count < 2 * threads) {
    fn(std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (count + threads - 1) / threads;
  for (std::size_t begin = 0; begin < count; begin += chunk)
    pool.emplace_back([&fn, begin, end = std::min(count, begin + chunk)] { fn(begin, end); });
  for (auto& t : pool) t.join();
}

/// All k-subsets of [0, n) as masks, in lexicographic order of their member lists.
inline std::vector<Mask> combinations(std::size_t n, std::size_t k) {
  std::vector<Mask> out;
  if (k > n) return out;
  std::vector<int> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<int>(i);
  while (true) {
    Mask m = 0;
    for (int v : idx) m |= Mask{1} << v;
    out.push_back(m);
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == static_cast<int>(n - k) + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

/// Index of the first candidate satisfying pred, scanning slices concurrently;
/// the result is the smallest such index regardless of scheduling.
template <class Pred>
std::optional<std::size_t> first_match(const std::vector<Mask>& candidates, unsigned threads,
                                       Pred&& pred, std::uint64_t& examined) {
  std::atomic<std::size_t> best{candidates.size()};
  std::atomic<std::uint64_t> count{0};
  parallel_slices(candidates.size(), threads, [&](std::size_t begin, std::size_t end) {
    std::uint64_t local = 0;
    for (std::size_t i = begin; i < end && i < best.load(std::memory_order_relaxed); ++i) {
      ++local;
      if (pred(candidates[i])) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        break;
      }
    }
    count += local;
  });
  examined += count.load();
  if (best.load() == candidates.size()) return std::nullopt;
  return best.load();
}

/**
 * Depth-first search for a (strongly) critical set of exactly k vertices.
 *
 * Vertices are decided in index order, "in" before "out", so the first hit is
 * the lexicographically smallest k-set.  A branch dies as soon as a vertex
 * whose own membership and whole out-neighbourhood are decided sees exactly
 * one out-neighbour inside W (for the weak notion only vertices outside W
 * are checked).
 */
class CriticalSearch {
 public:
  CriticalSearch(const Digraph& d, bool strong) : n_(static_cast<int>(d.order())), strong_(strong) {
    out_.assign(d.out_masks().begin(), d.out_masks().end());
    ready_.resize(d.order());
    for (int v = 0; v < n_; ++v) {
      Mask row = out_[static_cast<std::size_t>(v)];
      if (!row) continue;
      int last = 63 - std::countl_zero(row);
      int at = strong_ ? last : std::max(v, last);
      ready_[static_cast<std::size_t>(at)].push_back(v);
    }
  }

  std::optional<Mask> find(int k, SearchStats& stats) {
    k_ = k;
    stats_ = &stats;
    Mask result = 0;
    if (dfs(0, 0, 0, result)) return result;
    return std::nullopt;
  }

 private:
  bool violates(int decided, Mask w) const {
    for (int v : ready_[static_cast<std::size_t>(decided)]) {
      if (!strong_ && ((w >> v) & 1u)) continue;
      if (std::popcount(out_[static_cast<std::size_t>(v)] & w) == 1) return true;
    }
    return false;
  }

  bool dfs(int i, Mask w, int size, Mask& result) {
    ++stats_->nodes;
    if (size == k_) {
      ++stats_->sets_examined;
      if (detail::critical(static_cast<std::size_t>(n_), [&](int v) { return out_[static_cast<std::size_t>(v)]; }, w,
                           strong_)) {
        result = w;
        return true;
      }
      return false;
    }
    if (n_ - i < k_ - size) return false;
    Mask with = w | (Mask{1} << i);
    if (!violates(i, with) && dfs(i + 1, with, size + 1, result)) return true;
    if (!violates(i, w) && dfs(i + 1, w, size, result)) return true;
    return false;
  }

  int n_;
  bool strong_;
  int k_ = 0;
  SearchStats* stats_ = nullptr;
  std::vector<Mask> out_;
  std::vector<std::vector<int>> ready_;
};

}  // namespace detail

// ---------------------------------------------------------------------------

/// Minimum-cardinality (strongly) critical set, lexicographically smallest
/// among ties.  Empty optional when no such set exists (strong case only; V
/// itself is always weakly critical when n >= 1).
inline std::optional<VertexSet> min_critical_set(const Digraph& d, bool strong, const SolverOptions& opt = {},
                                                 SearchStats* stats = nullptr) {
  detail::require_bound(d, opt);
  SearchStats local;
  SearchStats& st = stats ? *stats : local;
  detail::CriticalSearch search(d, strong);
  for (int k = 1; k <= static_cast<int>(d.order()); ++k)
    if (auto w = search.find(k, st)) return VertexSet::from_mask(d.order(), *w);
  return std::nullopt;
}

/// Z(D): ascending-cardinality scan of subsets in canonical order.  Under the
/// loop rule the value may be 0.
inline ForcingNumber zero_forcing_number(const Digraph& d, const SolverOptions& opt = {}) {
  detail::require_bound(d, opt);
  ForcingNumber result;
  const std::size_t n = d.order();
  const Mask full = full_mask(n);
  for (std::size_t k = 0; k <= n; ++k) {
    auto candidates = detail::combinations(n, k);
    auto hit = detail::first_match(
        candidates, opt.threads, [&](Mask s) { return closure_mask(d, s) == full; }, result.stats.sets_examined);
    if (hit) {
      result.value = k;
      result.witness = VertexSet::from_mask(n, candidates[*hit]);
      return result;
    }
  }
  throw std::logic_error("zero_forcing_number: V is always a zero forcing set");
}

/// F(D) = n - (minimum critical set size); the loop rule uses strongly critical
/// sets.  Absent exactly when the loop rule applies and Z(D) = 0 (and for the
/// empty digraph).  The witness is a maximum failed zero forcing set.
inline std::optional<ForcingNumber> failed_zero_forcing_number(const Digraph& d, const SolverOptions& opt = {}) {
  ForcingNumber result;
  auto w = min_critical_set(d, d.has_loops(), opt, &result.stats);
  if (!w) return std::nullopt;
  result.value = d.order() - w->size();
  result.witness = w->complement();
  return result;
}

namespace detail {
/// zfs[mask] for every subset; shared by both enumerations.
inline std::vector<bool> zfs_table(const Digraph& d, const SolverOptions& opt) {
  require_bound(d, opt);
  const std::size_t count = std::size_t{1} << d.order();
  const Mask full = full_mask(d.order());
  std::vector<char> table(count);
  parallel_slices(count, opt.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t s = begin; s < end; ++s) table[s] = closure_mask(d, s) == full;
  });
  return {table.begin(), table.end()};
}

inline std::vector<VertexSet> sorted_sets(std::size_t n, std::vector<Mask> masks) {
  std::sort(masks.begin(), masks.end(), [](Mask a, Mask b) { return bits::canonical_less(a, b); });
  std::vector<VertexSet> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.push_back(VertexSet::from_mask(n, m));
  return out;
}
}  // namespace detail

/// Zero forcing sets from which no vertex can be dropped, sorted by (size, lexicographic).
inline std::vector<VertexSet> enumerate_minimal_zfs(const Digraph& d, const SolverOptions& opt = {}) {
  auto zfs = detail::zfs_table(d, opt);
  std::vector<Mask> found;
  for (Mask s = 0; s < zfs.size(); ++s) {
    if (!zfs[s]) continue;
    bool minimal = true;
    for (Mask r = s; r && minimal; r &= r - 1) minimal = !zfs[s & ~(r & -r)];
    if (minimal) found.push_back(s);
  }
  return detail::sorted_sets(d.order(), std::move(found));
}

/// Failed zero forcing sets to which no vertex can be added, sorted by (size, lexicographic).
inline std::vector<VertexSet> enumerate_maximal_fzfs(const Digraph& d, const SolverOptions& opt = {}) {
  auto zfs = detail::zfs_table(d, opt);
  const Mask full = full_mask(d.order());
  std::vector<Mask> found;
  for (Mask s = 0; s < zfs.size(); ++s) {
    if (zfs[s]) continue;
    bool maximal = true;
    for (Mask r = full & ~s; r && maximal; r &= r - 1) maximal = zfs[s | (r & -r)];
    if (maximal) found.push_back(s);
  }
  return detail::sorted_sets(d.order(), std::move(found));
}

// ---------------------------------------------------------------------------
// Extremal values of F decided from in-neighbourhoods alone (no search).

struct ExtremalFlags {
  bool f_is_n_minus_1 = false;
  bool f_is_n_minus_2 = false;
  bool f_is_n_minus_3 = false;

  friend bool operator==(const ExtremalFlags&, const ExtremalFlags&) = default;
};

inline ExtremalFlags extremal_predicates(const Digraph& d) {
  if (d.has_loops()) throw LoopModeError("extremal predicates are defined for loopless digraphs only");
  ExtremalFlags flags;
  const int n = static_cast<int>(d.order());
  if (n == 0) return flags;
  if (has_source(d)) {
    flags.f_is_n_minus_1 = true;
    return flags;
  }
  auto in_without = [&](int u, std::initializer_list<int> drop) {
    VertexSet s = d.in(u);
    for (int x : drop) s.erase(x);
    return s;
  };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (in_without(u, {v}) == in_without(v, {u})) {
        flags.f_is_n_minus_2 = true;
        return flags;
      }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      for (int w = v + 1; w < n; ++w) {
        if (in_without(u, {v, w}).is_subset_of(d.in(v) | d.in(w)) &&
            in_without(v, {u, w}).is_subset_of(d.in(u) | d.in(w)) &&
            in_without(w, {u, v}).is_subset_of(d.in(u) | d.in(v))) {
          flags.f_is_n_minus_3 = true;
          return flags;
        }
      }
  return flags;
}

}  // namespace zforce
