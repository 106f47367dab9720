#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zforce/digraph.hpp"

namespace zforce {

/// Direction of one edge of an underlying path or cycle, read in vertex order:
/// Forward is v_i -> v_{i+1}, Backward is v_{i+1} -> v_i, Both is a 2-cycle.
enum class Orientation : std::uint8_t { Forward, Backward, Both };

using OrientationSpec = std::vector<Orientation>;

/// Accepts either a compact string over {f, r, b} (forward, reverse, both) or a
/// comma-separated list of the words forward/backward/both.
inline OrientationSpec parse_orientation(std::string_view text) {
  OrientationSpec spec;
  auto word = [&](std::string_view w) {
    if (w == "forward" || w == "f") return Orientation::Forward;
    if (w == "backward" || w == "r") return Orientation::Backward;
    if (w == "both" || w == "b") return Orientation::Both;
    throw std::invalid_argument("unknown orientation symbol '" + std::string(w) + "'");
  };
  if (text.find(',') != std::string_view::npos || text == "forward" || text == "backward" ||
      text == "both") {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      if (next > pos) spec.push_back(word(text.substr(pos, next - pos)));
      pos = next + 1;
    }
  } else {
    for (char c : text) spec.push_back(word(std::string_view(&c, 1)));
  }
  return spec;
}

inline std::string to_string(const OrientationSpec& spec) {
  std::string s;
  for (Orientation o : spec)
    s += o == Orientation::Forward ? 'f' : o == Orientation::Backward ? 'r' : 'b';
  return s;
}

namespace detail {
inline void add_oriented(DigraphBuilder& b, int u, int v, Orientation o) {
  if (o != Orientation::Backward) b.add_arc(u, v);
  if (o != Orientation::Forward) b.add_arc(v, u);
}
}  // namespace detail

inline Digraph empty_digraph(std::size_t n) { return DigraphBuilder(n).build(); }

inline Digraph complete_digraph(std::size_t n) {
  DigraphBuilder b(n);
  for (int u = 0; u < static_cast<int>(n); ++u)
    for (int v = 0; v < static_cast<int>(n); ++v)
      if (u != v) b.add_arc(u, v);
  return b.build();
}

/// v_0 -> v_1 -> ... -> v_{n-1} -> v_0; n = 2 gives the 2-cycle.
inline Digraph directed_cycle(std::size_t n) {
  if (n < 2) throw std::invalid_argument("directed_cycle needs n >= 2");
  DigraphBuilder b(n);
  for (int v = 0; v < static_cast<int>(n); ++v) b.add_arc(v, (v + 1) % static_cast<int>(n));
  return b.build();
}

inline Digraph directed_path(std::size_t n) {
  DigraphBuilder b(n);
  for (int v = 0; v + 1 < static_cast<int>(n); ++v) b.add_arc(v, v + 1);
  return b.build();
}

/// Weak path on spec.size() + 1 vertices.
inline Digraph weak_path(const OrientationSpec& spec) {
  DigraphBuilder b(spec.size() + 1);
  for (std::size_t i = 0; i < spec.size(); ++i)
    detail::add_oriented(b, static_cast<int>(i), static_cast<int>(i + 1), spec[i]);
  return b.build();
}

inline Digraph bidirected_path(std::size_t n) {
  if (n == 0) return empty_digraph(0);
  return weak_path(OrientationSpec(n - 1, Orientation::Both));
}

/// Weak cycle on spec.size() vertices; edge i joins v_i and v_{(i+1) mod n}.
inline Digraph weak_cycle(const OrientationSpec& spec) {
  if (spec.size() < 3) throw std::invalid_argument("weak_cycle needs at least 3 edges");
  const int n = static_cast<int>(spec.size());
  DigraphBuilder b(spec.size());
  for (int i = 0; i < n; ++i) detail::add_oriented(b, i, (i + 1) % n, spec[static_cast<std::size_t>(i)]);
  return b.build();
}

inline Digraph bidirected_cycle(std::size_t n) {
  return weak_cycle(OrientationSpec(n, Orientation::Both));
}

/// Underlying graph K_{1,t}: vertex 0 is the centre, leaves 1..t.  Forward means centre -> leaf.
inline Digraph star(std::size_t t, const OrientationSpec& spec) {
  if (t < 1) throw std::invalid_argument("star needs t >= 1");
  if (spec.size() != t) throw std::invalid_argument("star orientation needs exactly t symbols");
  DigraphBuilder b(t + 1);
  for (std::size_t i = 0; i < t; ++i) detail::add_oriented(b, 0, static_cast<int>(i + 1), spec[i]);
  return b.build();
}

/// Bit k (pairs (i,j), i < j, in lexicographic order) set means i -> j, clear means j -> i.
inline Digraph tournament_from_bits(std::size_t n, std::uint64_t bits) {
  if (n * (n - (n > 0 ? 1 : 0)) / 2 > 64) throw std::invalid_argument("tournament_from_bits: n too large");
  DigraphBuilder b(n);
  int k = 0;
  for (int i = 0; i < static_cast<int>(n); ++i)
    for (int j = i + 1; j < static_cast<int>(n); ++j, ++k) {
      if ((bits >> k) & 1u)
        b.add_arc(i, j);
      else
        b.add_arc(j, i);
    }
  return b.build();
}

// ---------------------------------------------------------------------------
// de Bruijn and Kautz digraphs.  Vertices are digit strings in lexicographic
// order; the word of each vertex is available for relabelling checks.

using Word = std::vector<int>;

inline std::vector<Word> de_bruijn_words(int d, int M) {
  if (d < 2 || M < 1) throw std::invalid_argument("de Bruijn needs d >= 2 and M >= 1");
  std::vector<Word> words;
  Word w(static_cast<std::size_t>(M), 0);
  while (true) {
    words.push_back(w);
    int i = M - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == d - 1) w[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++w[static_cast<std::size_t>(i)];
  }
  return words;
}

inline std::vector<Word> kautz_words(int d, int M) {
  if (d < 2 || M < 1) throw std::invalid_argument("Kautz needs d >= 2 and M >= 1");
  std::vector<Word> words;
  for (auto& w : de_bruijn_words(d + 1, M)) {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) ok = ok && w[i] != w[i + 1];
    if (ok) words.push_back(std::move(w));
  }
  return words;
}

namespace detail {
/// Shift digraph on a word list: x_0..x_{M-1} -> x_1..x_M for every listed target.
inline Digraph shift_digraph(const std::vector<Word>& words, bool allow_loops) {
  DigraphBuilder b(words.size(), allow_loops);
  for (std::size_t a = 0; a < words.size(); ++a)
    for (std::size_t c = 0; c < words.size(); ++c)
      if (std::equal(words[a].begin() + 1, words[a].end(), words[c].begin())) {
        b.add_arc(static_cast<int>(a), static_cast<int>(c));
      }
  return b.build();
}
}  // namespace detail

/// B(d, M): d^M vertices, out-degree d, loops at the constant words.
inline Digraph de_bruijn(int d, int M) { return detail::shift_digraph(de_bruijn_words(d, M), true); }

/// K(d, M): (d+1) d^(M-1) vertices, out-degree d, loopless.
inline Digraph kautz(int d, int M) { return detail::shift_digraph(kautz_words(d, M), false); }

}  // namespace zforce
