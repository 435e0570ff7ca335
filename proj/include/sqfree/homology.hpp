#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "sqfree/ideal_core.hpp"

namespace sqfree {

/// Coefficient field for homology: the rationals or GF(p), p < 2^31.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(0); }

  static FieldSpec prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
      throw Error(Errc::InvalidField, std::to_string(p) + " is not a prime below 2^31");
    return FieldSpec(static_cast<std::uint32_t>(p));
  }

  /// Accepts `rat`, `gf2` and `gfp:<p>`.
  static FieldSpec parse(std::string_view text) {
    if (text == "rat") return rationals();
    if (text == "gf2") return prime(2);
    if (text.starts_with("gfp:")) {
      const auto digits = text.substr(4);
      if (digits.empty() || digits.size() > 10 ||
          !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw Error(Errc::InvalidField, "bad prime in '" + std::string(text) + "'");
      return prime(std::stoull(std::string(digits)));
    }
    throw Error(Errc::InvalidField, "unknown field '" + std::string(text) + "' (expected rat, gf2 or gfp:<p>)");
  }

  bool is_rationals() const noexcept { return p_ == 0; }
  std::uint32_t characteristic() const noexcept { return p_; }

  std::string to_string() const {
    if (p_ == 0) return "rat";
    if (p_ == 2) return "gf2";
    return "gfp:" + std::to_string(p_);
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(std::uint32_t p) : p_(p) {}

  static bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

  std::uint32_t p_;
};

/// Coordinate-list integer matrix. Duplicate coordinates add up.
struct SparseMatrix {
  struct Entry {
    std::size_t row;
    std::size_t col;
    long value;
  };

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Entry> entries;

  static SparseMatrix identity(std::size_t n) {
    SparseMatrix out{n, n, {}};
    for (std::size_t i = 0; i < n; ++i) out.entries.push_back({i, i, 1});
    return out;
  }

  std::vector<std::vector<long>> dense() const {
    std::vector<std::vector<long>> out(rows, std::vector<long>(cols, 0));
    for (const auto& e : entries) out[e.row][e.col] += e.value;
    return out;
  }
};

/// Dense product a * b; used to check that consecutive boundaries compose to zero.
inline std::vector<std::vector<long>> multiply(const SparseMatrix& a, const SparseMatrix& b) {
  std::vector<std::vector<long>> out(a.rows, std::vector<long>(b.cols, 0));
  const auto bd = b.dense();
  for (const auto& e : a.entries)
    for (std::size_t c = 0; c < b.cols; ++c) out[e.row][c] += e.value * bd[e.col][c];
  return out;
}

namespace detail {

inline bool mul_sub_div(long a, long b, long c, long d, long prev, long& out) {
  long ab, cd, diff;
  if (__builtin_mul_overflow(a, b, &ab) || __builtin_mul_overflow(c, d, &cd) ||
      __builtin_sub_overflow(ab, cd, &diff))
    return false;
  out = diff / prev;
  return true;
}

inline bool mul_sub_div(const mpz_class& a, const mpz_class& b, const mpz_class& c, const mpz_class& d,
                        const mpz_class& prev, mpz_class& out) {
  mpz_class t = a * b - c * d;
  mpz_divexact(out.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
  return true;
}

/// Fraction-free (Bareiss) row echelon reduction. Every intermediate entry is
/// a minor of the input, so each division is exact. Returns nullopt if the
/// integer type overflows.
template <class Int>
std::optional<std::size_t> bareiss_rank(std::vector<std::vector<Int>> a, std::size_t cols) {
  const std::size_t rows = a.size();
  std::size_t rank = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const Int& p = a[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        if (!mul_sub_div(p, a[i][j], a[i][c], a[rank][j], prev, a[i][j])) return std::nullopt;
      a[i][c] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

inline std::size_t rank_rationals(const SparseMatrix& m) {
  auto dense = m.dense();
  if (auto r = bareiss_rank<long>(dense, m.cols)) return *r;
  std::vector<std::vector<mpz_class>> big(m.rows, std::vector<mpz_class>(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) big[i][j] = dense[i][j];
  return *bareiss_rank<mpz_class>(std::move(big), m.cols);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

inline std::size_t rank_mod_p(const SparseMatrix& m, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> a(m.rows, std::vector<std::uint64_t>(m.cols, 0));
  const long sp = static_cast<long>(p);
  for (const auto& e : m.entries) a[e.row][e.col] = (a[e.row][e.col] + std::uint64_t(((e.value % sp) + sp) % sp)) % p;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows && a[pivot][c] == 0) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(a[pivot], a[rank]);
    const std::uint64_t inv = pow_mod(a[rank][c], p - 2, p);
    for (std::size_t i = rank + 1; i < m.rows; ++i) {
      if (a[i][c] == 0) continue;
      const std::uint64_t factor = a[i][c] * inv % p;
      for (std::size_t j = c; j < m.cols; ++j) a[i][j] = (a[i][j] + (p - factor) * a[rank][j]) % p;
    }
    ++rank;
  }
  return rank;
}

/// GF(2) elimination on bit-packed rows.
inline std::size_t rank_gf2(const SparseMatrix& m) {
  const std::size_t words = (m.cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> a(m.rows, std::vector<std::uint64_t>(words, 0));
  for (const auto& e : m.entries)
    if (e.value & 1) a[e.row][e.col / 64] ^= std::uint64_t{1} << (e.col % 64);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < m.rows && !(a[pivot][w] & bit)) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < m.rows; ++i)
      if (a[i][w] & bit)
        for (std::size_t k = w; k < words; ++k) a[i][k] ^= a[rank][k];
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Exact rank over the given field.
inline std::size_t matrix_rank(const SparseMatrix& m, const FieldSpec& field) {
  if (m.rows == 0 || m.cols == 0 || m.entries.empty()) return 0;
  if (field.is_rationals()) return detail::rank_rationals(m);
  if (field.characteristic() == 2) return detail::rank_gf2(m);
  return detail::rank_mod_p(m, field.characteristic());
}

/// Augmented simplicial chain complex of a non-void complex. Basis of C_j is
/// the j-faces sorted by bitset value; C_{-1} is spanned by the empty face.
class ChainComplex {
 public:
  explicit ChainComplex(const Complex& d) {
    if (d.kind() == Complex::Kind::Void) throw Error(Errc::VoidComplex, "chain complex of the void complex");
    top_ = d.dim();
    bases_.resize(static_cast<std::size_t>(top_ + 2));
    for (Mask f : d.faces()) bases_[static_cast<std::size_t>(popcount(f))].push_back(f);
  }

  /// dim of the complex; chain groups exist for j = -1..top_dim().
  int top_dim() const noexcept { return top_; }

  std::span<const Mask> basis(int j) const noexcept {
    if (j < -1 || j > top_) return {};
    return bases_[static_cast<std::size_t>(j + 1)];
  }

  std::size_t rank_at(int j) const noexcept { return basis(j).size(); }

  /// ∂_j : C_j -> C_{j-1}; the vertex at position k of a face is removed
  /// with sign (-1)^k.
  SparseMatrix boundary(int j) const {
    const auto cols = basis(j);
    const auto rows = basis(j - 1);
    SparseMatrix out{rows.size(), cols.size(), {}};
    for (std::size_t c = 0; c < cols.size(); ++c) {
      int position = 0;
      for_each_bit(cols[c], [&](int v) {
        const Mask facet = cols[c] & ~(Mask{1} << v);
        const auto it = std::lower_bound(rows.begin(), rows.end(), facet);
        out.entries.push_back({static_cast<std::size_t>(it - rows.begin()), c, position % 2 == 0 ? 1L : -1L});
        ++position;
      });
    }
    return out;
  }

 private:
  int top_ = -1;
  std::vector<std::vector<Mask>> bases_;
};

/// link_D(f) = { g : g ∩ f = ∅, g ∪ f ∈ D }.
inline Complex link(const Complex& d, Mask face) {
  if (!d.contains(face)) throw Error(Errc::NotAFace, format_monomial(d.ground(), face) + " is not a face");
  std::vector<Mask> pieces;
  for (Mask f : d.facets())
    if (is_subset(face, f)) pieces.push_back(f & ~face);
  return Complex::from_faces(d.ground(), std::move(pieces));
}

/// [dim H̃_{-1}, dim H̃_0, ..., dim H̃_{dim D}] over the field.
inline std::vector<std::size_t> reduced_homology_dims(const Complex& d, const FieldSpec& field) {
  const ChainComplex chain(d);
  const int top = chain.top_dim();
  // ranks[j + 1] = rank ∂_j for j = -1..top+1; ∂_{-1} and ∂_{top+1} vanish.
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 3), 0);
  for (int j = 0; j <= top; ++j) ranks[static_cast<std::size_t>(j + 1)] = matrix_rank(chain.boundary(j), field);
  std::vector<std::size_t> out;
  for (int j = -1; j <= top; ++j) {
    const auto idx = static_cast<std::size_t>(j + 1);
    out.push_back(chain.rank_at(j) - ranks[idx] - ranks[idx + 1]);
  }
  return out;
}

}  // namespace sqfree
