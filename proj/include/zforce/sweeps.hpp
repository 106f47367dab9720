#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "zforce/classifier.hpp"
#include "zforce/closed_forms.hpp"
#include "zforce/digraph.hpp"
#include "zforce/forcing.hpp"
#include "zforce/generators.hpp"
#include "zforce/minrank.hpp"
#include "zforce/solvers.hpp"

namespace zforce {

// ---------------------------------------------------------------------------
// Exhaustive generators over small labelled digraphs

/// Ordered pairs (u, v), u != v, in lexicographic order.
inline std::vector<Arc> ordered_pairs(std::size_t n) {
  std::vector<Arc> pairs;
  for (int u = 0; u < static_cast<int>(n); ++u)
    for (int v = 0; v < static_cast<int>(n); ++v)
      if (u != v) pairs.emplace_back(u, v);
  return pairs;
}

/// Digraph whose arc set is the subset `code` of ordered_pairs(n).
inline Digraph digraph_from_code(std::size_t n, std::uint64_t code) {
  DigraphBuilder b(n);
  auto pairs = ordered_pairs(n);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if ((code >> i) & 1u) b.add_arc(pairs[i].first, pairs[i].second);
  return b.build();
}

/// All 2^(n(n-1)) labelled loopless digraphs on n vertices (n <= 6).
inline void for_each_digraph(std::size_t n, const std::function<void(const Digraph&)>& fn) {
  const std::size_t bits = n * (n ? n - 1 : 0);
  if (bits > 30) throw std::invalid_argument("for_each_digraph: n too large");
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) fn(digraph_from_code(n, code));
}

/// All 3^(n(n-1)/2) labelled oriented graphs on n vertices.
inline void for_each_oriented_graph(std::size_t n, const std::function<void(const Digraph&)>& fn) {
  std::vector<Arc> pairs;
  for (int u = 0; u < static_cast<int>(n); ++u)
    for (int v = u + 1; v < static_cast<int>(n); ++v) pairs.emplace_back(u, v);
  std::vector<int> digit(pairs.size(), 0);
  while (true) {
    DigraphBuilder b(n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (digit[i] == 1) b.add_arc(pairs[i].first, pairs[i].second);
      if (digit[i] == 2) b.add_arc(pairs[i].second, pairs[i].first);
    }
    fn(b.build());
    std::size_t i = 0;
    while (i < digit.size() && digit[i] == 2) digit[i++] = 0;
    if (i == digit.size()) break;
    ++digit[i];
  }
}

/// All 3^len orientation specs.
inline void for_each_orientation(std::size_t len, const std::function<void(const OrientationSpec&)>& fn) {
  OrientationSpec spec(len, Orientation::Forward);
  while (true) {
    fn(spec);
    std::size_t i = 0;
    while (i < len && spec[i] == Orientation::Both) spec[i++] = Orientation::Forward;
    if (i == len) break;
    spec[i] = static_cast<Orientation>(static_cast<int>(spec[i]) + 1);
  }
}

/// Uniform random loopless digraph with arc probability p.
inline Digraph random_digraph(std::size_t n, double p, std::mt19937_64& rng, bool allow_loops = false) {
  std::bernoulli_distribution coin(p);
  DigraphBuilder b(n, allow_loops);
  for (int u = 0; u < static_cast<int>(n); ++u)
    for (int v = 0; v < static_cast<int>(n); ++v)
      if ((u != v || allow_loops) && coin(rng)) b.add_arc(u, v);
  return b.build();
}

// ---------------------------------------------------------------------------
// Verification suites

struct SweepReport {
  std::string suite;
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  std::optional<Digraph> counterexample;  // first failure in enumeration order
  std::string unit = "digraphs";  // what `checked` counts

  bool ok() const noexcept { return mismatches == 0; }

  void fail(const Digraph& d) {
    ++mismatches;
    if (!counterexample) counterexample = d;
  }
};

namespace detail {
inline std::optional<std::size_t> exact_f(const Digraph& d) {
  auto f = failed_zero_forcing_number(d, SolverOptions{.max_vertices = 64});
  return f ? std::optional<std::size_t>(f->value) : std::nullopt;
}
}  // namespace detail

/// Digraph whose arc set is the subset `code` of all n^2 ordered pairs, loops included.
inline Digraph looped_digraph_from_code(std::size_t n, std::uint64_t code) {
  DigraphBuilder b(n, true);
  for (std::size_t i = 0; i < n * n; ++i)
    if ((code >> i) & 1u) b.add_arc(static_cast<int>(i / n), static_cast<int>(i % n));
  return b.build();
}

namespace detail {
/// One digraph of the duality sweep; true when every check holds.
inline bool duality_holds(const Digraph& d) {
  const std::size_t n = d.order();
  const Mask full = full_mask(n);
  const bool strong = d.has_loops();
  std::optional<std::size_t> direct_f;
  for (Mask s = 0; s <= full; ++s) {
    Mask w = full & ~s;
    bool crit = strong ? is_strongly_critical(d, w) : is_critical(d, w);
    if (crit != (w != 0 && is_stalled(d, s))) return false;
    if (!is_zfs(d, s)) direct_f = std::max<std::size_t>(direct_f.value_or(0), static_cast<std::size_t>(std::popcount(s)));
  }
  auto f = failed_zero_forcing_number(d);
  if (f.has_value() != direct_f.has_value()) return false;
  if (!f) return true;
  if (f->value != *direct_f || !is_fzfs(d, f->witness)) return false;
  // every set larger than F forces
  for (Mask s = 0; s <= full; ++s)
    if (static_cast<std::size_t>(std::popcount(s)) == f->value + 1 && !is_zfs(d, s)) return false;
  return true;
}
}  // namespace detail

/**
 * Critical/stalled duality on every loopless digraph with 1..max_n vertices
 * and every digraph with loops on 1..min(max_n, 3) vertices.  Also checks F
 * against a direct maximum-FZFS scan and that every (F+1)-set is a ZFS.
 */
inline SweepReport sweep_duality(std::size_t max_n = 4) {
  SweepReport r;
  r.suite = "duality";
  for (std::size_t n = 1; n <= max_n; ++n)
    for_each_digraph(n, [&](const Digraph& d) {
      ++r.checked;
      if (!detail::duality_holds(d)) r.fail(d);
    });
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_n, 3); ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
      Digraph d = looped_digraph_from_code(n, code);
      if (!d.has_loops()) continue;
      ++r.checked;
      if (!detail::duality_holds(d)) r.fail(d);
    }
  return r;
}

/// Closed forms against the exact solver: weak paths (n <= 7), weak cycles
/// (n <= 6, at least one one-way arc), the weak-cycle construction (n = 3..10)
/// and the line-digraph formula (weakly connected bases, n <= 4).
inline SweepReport sweep_formulas() {
  SweepReport r;
  r.suite = "formulas";
  r.unit = "instances";
  for (std::size_t n = 1; n <= 7; ++n)
    for_each_orientation(n - 1, [&](const OrientationSpec& spec) {
      Digraph d = weak_path(spec);
      ++r.checked;
      if (f_weak_path(d) != detail::exact_f(d)) r.fail(d);
    });
  for (std::size_t n = 3; n <= 6; ++n)
    for_each_orientation(n, [&](const OrientationSpec& spec) {
      Digraph d = weak_cycle(spec);
      if (weak_cycle_partition(d).kind == CycleCase::FullyBidirected) return;
      ++r.checked;
      if (f_weak_cycle(d) != detail::exact_f(d)) r.fail(d);
    });
  for (std::size_t n = 3; n <= 10; ++n)
    for (std::size_t k = 0; k < n; ++k) {
      Digraph d = construct_weak_cycle(n, k);
      ++r.checked;
      if (detail::exact_f(d) != k) r.fail(d);
    }
  for (std::size_t n = 2; n <= 4; ++n)
    for_each_digraph(n, [&](const Digraph& d) {
      if (!is_weakly_connected(d)) return;
      ++r.checked;
      if (f_line_digraph(d) != detail::exact_f(line_digraph(d).graph)) r.fail(d);
    });
  return r;
}

/// classify_f_less_than_z(d) != None exactly when F(d) < Z(d), over all digraphs on n vertices.
inline SweepReport sweep_census(std::size_t n) {
  SweepReport r;
  r.suite = "census" + std::to_string(n);
  for_each_digraph(n, [&](const Digraph& d) {
    ++r.checked;
    bool less = *detail::exact_f(d) < zero_forcing_number(d).value;
    if ((classify_f_less_than_z(d).kind != ClassKind::None) != less) r.fail(d);
  });
  return r;
}

/// Same property for classify_oriented over all oriented graphs on n vertices.
inline SweepReport sweep_oriented(std::size_t n) {
  SweepReport r;
  r.suite = "oriented" + std::to_string(n);
  for_each_oriented_graph(n, [&](const Digraph& d) {
    ++r.checked;
    bool less = *detail::exact_f(d) < zero_forcing_number(d).value;
    if ((classify_oriented(d) != ClassKind::None) != less) r.fail(d);
  });
  return r;
}

/// Every zero forcing set of random digraphs (n <= 6) passes the kernel-support
/// test for `seeds` sampled pattern matrices.
inline SweepReport sweep_kernel(std::size_t digraphs = 50, std::size_t seeds = 20, std::uint64_t seed = 2024) {
  SweepReport r;
  r.suite = "kernel";
  r.unit = "checks";
  std::mt19937_64 rng(seed);
  for (std::size_t g = 0; g < digraphs; ++g) {
    std::size_t n = 2 + g % 5;
    Digraph d = random_digraph(n, 0.4, rng);
    std::vector<PatternMatrix> matrices;
    for (std::size_t s = 0; s < seeds; ++s) matrices.push_back(sample_pattern_matrix(d, seed * 1000 + g * seeds + s));
    bool ok = true;
    for (Mask s = 0; s <= full_mask(n); ++s) {
      if (!is_zfs(d, s)) continue;
      for (const auto& m : matrices) {
        ++r.checked;
        ok = ok && verify_kernel_support(d, VertexSet::from_mask(n, s), m);
      }
    }
    if (!ok) r.fail(d);
  }
  return r;
}

}  // namespace zforce
