#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace zforce {

/// Single-word vertex set used on the n <= 64 fast path.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaskBits = 64;

inline constexpr Mask full_mask(std::size_t n) noexcept {
  return n >= kMaskBits ? ~Mask{0} : (Mask{1} << n) - 1;
}

/// Subset of [0, capacity) with bitset semantics.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t capacity) : capacity_(capacity), words_(word_count(capacity), 0) {}

  VertexSet(std::size_t capacity, std::initializer_list<int> members) : VertexSet(capacity) {
    for (int v : members) insert(v);
  }

  static VertexSet full(std::size_t capacity) {
    VertexSet s(capacity);
    for (auto& w : s.words_) w = ~Mask{0};
    s.trim();
    return s;
  }

  static VertexSet from_members(std::size_t capacity, std::span<const int> members) {
    VertexSet s(capacity);
    for (int v : members) s.insert(v);
    return s;
  }

  static VertexSet from_mask(std::size_t capacity, Mask mask) {
    if (capacity > kMaskBits) throw std::invalid_argument("from_mask: capacity exceeds 64");
    VertexSet s(capacity);
    if (!s.words_.empty()) s.words_[0] = mask & full_mask(capacity);
    return s;
  }

  std::size_t capacity() const noexcept { return capacity_; }

  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (Mask w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const noexcept {
    for (Mask w : words_)
      if (w) return false;
    return true;
  }

  bool contains(int v) const noexcept {
    if (v < 0 || static_cast<std::size_t>(v) >= capacity_) return false;
    return (words_[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1u;
  }

  void insert(int v) {
    check(v);
    words_[static_cast<std::size_t>(v) / 64] |= Mask{1} << (v % 64);
  }

  void erase(int v) {
    check(v);
    words_[static_cast<std::size_t>(v) / 64] &= ~(Mask{1} << (v % 64));
  }

  /// Smallest member, if any.
  std::optional<int> first() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
    return std::nullopt;
  }

  /// The unique member when size() == 1.
  std::optional<int> single() const noexcept {
    std::optional<int> found;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Mask w = words_[i];
      if (!w) continue;
      if (found || (w & (w - 1))) return std::nullopt;
      found = static_cast<int>(i * 64 + std::countr_zero(w));
    }
    return found;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (Mask w = words_[i]; w; w &= w - 1) fn(static_cast<int>(i * 64 + std::countr_zero(w)));
    }
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(size());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  Mask mask() const {
    if (capacity_ > kMaskBits) throw std::logic_error("VertexSet::mask: capacity exceeds 64");
    return words_.empty() ? 0 : words_[0];
  }

  VertexSet complement() const {
    VertexSet s(*this);
    for (auto& w : s.words_) w = ~w;
    s.trim();
    return s;
  }

  bool is_subset_of(const VertexSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.word(i)) return false;
    return true;
  }

  bool intersects(const VertexSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.word(i)) return true;
    return false;
  }

  VertexSet& operator|=(const VertexSet& o) {
    same_capacity(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    same_capacity(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    same_capacity(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Canonical order: by size, then lexicographically on the sorted member list.
  friend bool canonical_less(const VertexSet& a, const VertexSet& b) {
    std::size_t sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    for (std::size_t i = 0; i < std::max(a.words_.size(), b.words_.size()); ++i) {
      Mask diff = a.word(i) ^ b.word(i);
      if (diff) return (a.word(i) & (diff & -diff)) != 0;
    }
    return false;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first_member = true;
    for_each([&](int v) {
      if (!first_member) s += ",";
      s += std::to_string(v);
      first_member = false;
    });
    return s + "}";
  }

 private:
  static std::size_t word_count(std::size_t capacity) { return (capacity + 63) / 64; }

  Mask word(std::size_t i) const noexcept { return i < words_.size() ? words_[i] : 0; }

  void trim() noexcept {
    if (capacity_ % 64 && !words_.empty()) words_.back() &= full_mask(capacity_ % 64);
  }

  void check(int v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= capacity_)
      throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, " +
                              std::to_string(capacity_) + ")");
  }

  void same_capacity(const VertexSet& o) const {
    if (o.capacity_ != capacity_) throw std::invalid_argument("VertexSet capacity mismatch");
  }

  std::size_t capacity_ = 0;
  std::vector<Mask> words_;
};

/// Bit helpers shared by the mask fast path and the dynamic VertexSet so the
/// propagation kernels can be written once.
namespace bits {

inline Mask without(Mask a, Mask b) noexcept { return a & ~b; }
inline VertexSet without(const VertexSet& a, const VertexSet& b) { return a - b; }

inline std::optional<int> single(Mask a) noexcept {
  if (a == 0 || (a & (a - 1))) return std::nullopt;
  return std::countr_zero(a);
}
inline std::optional<int> single(const VertexSet& a) noexcept { return a.single(); }

inline bool has(Mask a, int v) noexcept { return (a >> v) & 1u; }
inline bool has(const VertexSet& a, int v) noexcept { return a.contains(v); }

inline void add(Mask& a, int v) noexcept { a |= Mask{1} << v; }
inline void add(VertexSet& a, int v) { a.insert(v); }

inline std::size_t count(Mask a) noexcept { return static_cast<std::size_t>(std::popcount(a)); }
inline std::size_t count(const VertexSet& a) noexcept { return a.size(); }

inline std::size_t count_common(Mask a, Mask b) noexcept { return count(a & b); }
inline std::size_t count_common(const VertexSet& a, const VertexSet& b) { return (a & b).size(); }

/// Mask with canonical (size, lexicographic) order, matching canonical_less.
inline bool canonical_less(Mask a, Mask b) noexcept {
  int sa = std::popcount(a), sb = std::popcount(b);
  if (sa != sb) return sa < sb;
  Mask diff = a ^ b;
  return diff && (a & (diff & -diff));
}

}  // namespace bits

}  // namespace zforce
