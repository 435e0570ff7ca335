#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sqfree {

/// A subset of the ground set; bit v stands for vertex v.
using Mask = std::uint64_t;

inline int popcount(Mask m) noexcept { return std::popcount(m); }

inline Mask low_bits(int count) noexcept {
  return count >= 64 ? ~Mask{0} : (Mask{1} << count) - 1;
}

inline bool is_subset(Mask sub, Mask super) noexcept { return (sub & ~super) == 0; }

/// Canonical order on subsets: cardinality first, then numeric value.
inline bool canonical_less(Mask a, Mask b) noexcept {
  const int pa = popcount(a), pb = popcount(b);
  return pa != pb ? pa < pb : a < b;
}

template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

/// Visits every subset of `set` (including the empty set and `set` itself).
template <class F>
void for_each_subset(Mask set, F&& f) {
  Mask sub = set;
  while (true) {
    f(sub);
    if (sub == 0) break;
    sub = (sub - 1) & set;
  }
}

/// Visits every k-element subset of the block of `width` bits starting at
/// bit `offset`, in increasing numeric order (Gosper's hack).
template <class F>
void for_each_k_subset(int width, int k, int offset, F&& f) {
  if (k < 0 || k > width) return;
  if (k == 0) {
    f(Mask{0});
    return;
  }
  const Mask limit_bit = width >= 64 ? 0 : Mask{1} << width;
  Mask c = low_bits(k);
  while (true) {
    f(c << offset);
    const Mask lowest = c & (~c + 1);
    const Mask ripple = c + lowest;
    if (ripple == 0) break;  // wrapped past bit 63
    c = (((ripple ^ c) >> 2) / lowest) | ripple;
    if (limit_bit != 0 && c >= limit_bit) break;
  }
}

namespace detail {

/// Dense bit table indexed by subsets of a ground set of `vertices` elements.
/// The closure routines are word-parallel sum-over-subsets passes.
class SubsetTable {
 public:
  explicit SubsetTable(int vertices)
      : vertices_(vertices),
        words_(vertices >= 6 ? std::size_t{1} << (vertices - 6) : 1, 0) {}

  int vertices() const noexcept { return vertices_; }

  void set(Mask s) noexcept { words_[s >> 6] |= Mask{1} << (s & 63); }
  bool test(Mask s) const noexcept { return (words_[s >> 6] >> (s & 63)) & 1; }

  /// T[S] |= T[S \ {b}] for all b: marks every superset of a marked set.
  void superset_closure() noexcept {
    for (int b = 0; b < vertices_; ++b) {
      if (b < 6) {
        const int shift = 1 << b;
        const Mask clear = kBitClear[b];
        for (auto& w : words_) w |= (w & clear) << shift;
      } else {
        const std::size_t stride = std::size_t{1} << (b - 6);
        for (std::size_t k = 0; k < words_.size(); ++k)
          if (k & stride) words_[k] |= words_[k ^ stride];
      }
    }
    trim();
  }

  /// T[S] |= T[S ∪ {b}] for all b: marks every subset of a marked set.
  void subset_closure() noexcept {
    for (int b = 0; b < vertices_; ++b) {
      if (b < 6) {
        const int shift = 1 << b;
        const Mask clear = kBitClear[b];
        for (auto& w : words_) w |= (w >> shift) & clear;
      } else {
        const std::size_t stride = std::size_t{1} << (b - 6);
        for (std::size_t k = 0; k < words_.size(); ++k)
          if (!(k & stride)) words_[k] |= words_[k | stride];
      }
    }
  }

  /// Marked sets S such that every one-element extension S ∪ {b} is marked
  /// in `up` (for b ∉ S).
  SubsetTable all_extensions_in(const SubsetTable& up) const {
    SubsetTable out = *this;
    for (int b = 0; b < vertices_; ++b) {
      if (b < 6) {
        const int shift = 1 << b;
        const Mask clear = kBitClear[b];
        for (std::size_t k = 0; k < out.words_.size(); ++k)
          out.words_[k] &= ((up.words_[k] >> shift) & clear) | ~clear;
      } else {
        const std::size_t stride = std::size_t{1} << (b - 6);
        for (std::size_t k = 0; k < out.words_.size(); ++k)
          if (!(k & stride)) out.words_[k] &= up.words_[k | stride];
      }
    }
    return out;
  }

  /// Marked sets S such that every one-element deletion S \ {b} is marked
  /// in `down` (for b ∈ S).
  SubsetTable all_deletions_in(const SubsetTable& down) const {
    SubsetTable out = *this;
    for (int b = 0; b < vertices_; ++b) {
      if (b < 6) {
        const int shift = 1 << b;
        const Mask clear = kBitClear[b];
        for (std::size_t k = 0; k < out.words_.size(); ++k)
          out.words_[k] &= ((down.words_[k] & clear) << shift) | clear;
      } else {
        const std::size_t stride = std::size_t{1} << (b - 6);
        for (std::size_t k = 0; k < out.words_.size(); ++k)
          if (k & stride) out.words_[k] &= down.words_[k ^ stride];
      }
    }
    return out;
  }

  SubsetTable complemented() const {
    SubsetTable out = *this;
    for (auto& w : out.words_) w = ~w;
    out.trim();
    return out;
  }

  std::vector<Mask> members() const {
    std::vector<Mask> out;
    for (std::size_t k = 0; k < words_.size(); ++k)
      for_each_bit(words_[k], [&](int bit) { out.push_back((Mask{k} << 6) | Mask(bit)); });
    return out;
  }

 private:
  // kBitClear[b] has a one at every position whose index has bit b clear.
  static constexpr Mask kBitClear[6] = {
      0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
      0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
  };

  void trim() noexcept {
    if (vertices_ < 6) words_[0] &= low_bits(1 << vertices_);
  }

  int vertices_;
  std::vector<Mask> words_;
};

}  // namespace detail
}  // namespace sqfree
