#pragma once

// Brute-force reference implementations used only by the tests. They share
// nothing with the library beyond the Mask type, so agreement is meaningful.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "sqfree/bits.hpp"

namespace oracle {

using sqfree::Mask;

inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

/// Inclusion-minimal members of a family.
inline std::vector<Mask> minimal(std::vector<Mask> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<Mask> out;
  for (Mask a : family) {
    bool keep = true;
    for (Mask b : family)
      if (b != a && subset(b, a)) keep = false;
    if (keep) out.push_back(a);
  }
  return out;
}

/// The dual as an intersection of monomial primes: its generators are the
/// minimal vertex sets meeting every generator.
inline std::vector<Mask> prime_intersection_dual(const std::vector<Mask>& gens, int vertices) {
  std::vector<Mask> hitting;
  for (Mask s = 0; s < (Mask{1} << vertices); ++s)
    if (std::all_of(gens.begin(), gens.end(), [&](Mask g) { return (g & s) != 0; })) hitting.push_back(s);
  return minimal(hitting);
}

/// Every square-free monomial of bidegree (q, r).
inline std::vector<Mask> bidegree_monomials(int n, int m, int q, int r) {
  std::vector<Mask> out;
  const Mask xs = (Mask{1} << n) - 1;
  for (Mask s = 0; s < (Mask{1} << (n + m)); ++s)
    if (std::popcount(s & xs) == q && std::popcount(s >> n) == r) out.push_back(s);
  return out;
}

/// Minimal generators of a sum of products I_q J_r, listed by (q, r).
inline std::vector<Mask> mixed(int n, int m, const std::vector<std::pair<int, int>>& terms) {
  std::vector<Mask> all;
  for (auto [q, r] : terms) {
    if (q > n || r > m) continue;
    auto part = bidegree_monomials(n, m, q, r);
    all.insert(all.end(), part.begin(), part.end());
  }
  return minimal(all);
}

/// Dense rank over Q by plain Gaussian elimination on rationals.
inline std::size_t rank_q(std::vector<std::vector<mpq_class>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Reduced homology over Q of the complex whose faces are given explicitly.
/// Index 0 holds H~_{-1}.
inline std::vector<std::size_t> reduced_homology(const std::vector<Mask>& faces) {
  int top = -1;
  for (Mask f : faces) top = std::max(top, std::popcount(f) - 1);
  std::vector<std::vector<Mask>> by_dim(static_cast<std::size_t>(top + 2));
  for (Mask f : faces) by_dim[static_cast<std::size_t>(std::popcount(f))].push_back(f);
  for (auto& level : by_dim) std::sort(level.begin(), level.end());
  // rank of the boundary from faces of size k to size k-1
  auto boundary_rank = [&](std::size_t k) -> std::size_t {
    if (k == 0 || k >= by_dim.size()) return 0;
    const auto& src = by_dim[k];
    const auto& dst = by_dim[k - 1];
    std::vector<std::vector<mpq_class>> mat(dst.size(), std::vector<mpq_class>(src.size()));
    for (std::size_t c = 0; c < src.size(); ++c) {
      int sign = 1;
      for (int v = 0; v < 64; ++v) {
        if (!(src[c] >> v & 1)) continue;
        const auto it = std::lower_bound(dst.begin(), dst.end(), src[c] & ~(Mask{1} << v));
        mat[static_cast<std::size_t>(it - dst.begin())][c] = sign;
        sign = -sign;
      }
    }
    return rank_q(std::move(mat));
  };
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < by_dim.size(); ++k)
    out.push_back(by_dim[k].size() - boundary_rank(k) - boundary_rank(k + 1));
  return out;
}

/// Graded Betti numbers of the ideal (not the quotient) from the induced
/// subcomplexes of the Stanley-Reisner complex: beta_{i,W} = H~_{|W|-i-2}(D_W).
inline std::map<std::pair<int, int>, std::uint64_t> betti_of_ideal(const std::vector<Mask>& gens, int vertices) {
  std::map<std::pair<int, int>, std::uint64_t> out;
  const Mask full = (Mask{1} << vertices) - 1;
  for (Mask w = 1; w <= full; ++w) {
    std::vector<Mask> faces;
    for (Mask f = w;; f = (f - 1) & w) {
      if (std::none_of(gens.begin(), gens.end(), [&](Mask g) { return subset(g, f); })) faces.push_back(f);
      if (f == 0) break;
    }
    const auto h = reduced_homology(faces);
    const int size = std::popcount(w);
    for (std::size_t k = 0; k < h.size(); ++k) {
      if (h[k] == 0) continue;
      const int i = size - static_cast<int>(k) - 1;  // H~_{k-1} sits at |W| - i - 2 = k - 1
      if (i >= 0) out[{i, size}] += h[k];
    }
  }
  return out;
}

inline std::uint64_t choose(int a, int b) {
  if (b < 0 || a < 0 || b > a) return 0;
  std::uint64_t out = 1;
  for (int k = 1; k <= b; ++k) out = out * static_cast<std::uint64_t>(a - b + k) / static_cast<std::uint64_t>(k);
  return out;
}

/// A random square-free ideal: a handful of random supports, minimalized.
inline std::vector<Mask> random_gens(std::mt19937_64& rng, int vertices) {
  std::uniform_int_distribution<int> count(1, 6);
  std::uniform_int_distribution<Mask> pick(1, (Mask{1} << vertices) - 1);
  std::vector<Mask> gens;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) gens.push_back(pick(rng));
  return minimal(gens);
}

}  // namespace oracle
