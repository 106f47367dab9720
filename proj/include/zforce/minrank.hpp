#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zforce/digraph.hpp"
#include "zforce/errors.hpp"

namespace zforce {

using Rational = boost::multiprecision::cpp_rational;

/// Square matrix in the pattern class of a digraph: off-diagonal (i, j) is
/// nonzero exactly when ij is an arc; the diagonal is free.
class PatternMatrix {
 public:
  explicit PatternMatrix(const Digraph& pattern)
      : pattern_(pattern), n_(pattern.order()), entries_(n_ * n_) {}

  std::size_t order() const noexcept { return n_; }
  const Digraph& pattern() const noexcept { return pattern_; }

  const Rational& at(std::size_t i, std::size_t j) const { return entries_.at(i * n_ + j); }
  Rational& at(std::size_t i, std::size_t j) { return entries_.at(i * n_ + j); }

  bool matches_pattern() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (i != j && (at(i, j) != 0) != pattern_.has_arc(static_cast<int>(i), static_cast<int>(j))) return false;
    return true;
  }

 private:
  Digraph pattern_;
  std::size_t n_;
  std::vector<Rational> entries_;
};

/// Deterministic sample for a given seed: arc entries from {±1, ±2, ±3, ±1/2},
/// diagonal from {0, ±1}.
inline PatternMatrix sample_pattern_matrix(const Digraph& d, std::uint64_t seed) {
  if (d.has_loops()) throw LoopModeError("pattern matrices are sampled for loopless digraphs only");
  static const std::array<Rational, 8> offdiag{Rational(1), Rational(-1), Rational(2),    Rational(-2),
                                               Rational(3), Rational(-3), Rational(1, 2), Rational(-1, 2)};
  static const std::array<Rational, 3> diag{Rational(0), Rational(1), Rational(-1)};
  std::mt19937_64 rng(seed);
  PatternMatrix m(d);
  const std::size_t n = d.order();
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = diag[std::uniform_int_distribution<std::size_t>(0, diag.size() - 1)(rng)];
    d.out(static_cast<int>(i)).for_each([&](int j) {
      m.at(i, static_cast<std::size_t>(j)) = offdiag[std::uniform_int_distribution<std::size_t>(0, offdiag.size() - 1)(rng)];
    });
  }
  return m;
}

/// Exact rank of the submatrix formed by the listed columns.
inline std::size_t column_rank(const PatternMatrix& m, const std::vector<int>& columns) {
  const std::size_t rows = m.order(), cols = columns.size();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m.at(i, static_cast<std::size_t>(columns[j]));

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][col] == 0) continue;
      Rational factor = a[r][col] / a[rank][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= factor * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

/**
 * True iff the only kernel vector of m vanishing on s is zero, i.e. the columns
 * of m indexed by V - s are linearly independent.  Decided with exact rational
 * elimination.
 */
inline bool verify_kernel_support(const Digraph& d, const VertexSet& s, const PatternMatrix& m) {
  if (m.order() != d.order() || !(m.pattern() == d) || !m.matches_pattern())
    throw std::invalid_argument("matrix does not belong to the pattern class of the digraph");
  if (s.capacity() != d.order()) throw std::out_of_range("vertex set capacity does not match digraph order");
  std::vector<int> free_columns = s.complement().members();
  return column_rank(m, free_columns) == free_columns.size();
}

}  // namespace zforce
