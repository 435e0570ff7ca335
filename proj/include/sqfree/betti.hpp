#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sqfree/alexander.hpp"
#include "sqfree/homology.hpp"
#include "sqfree/ideal_core.hpp"

namespace sqfree {

/// Largest ground set the brute-force Betti oracles accept.
inline constexpr int kOracleLimit = 22;

/// Graded Betti numbers β_{i,j}(S/I), stored sparsely. β_{0,0} = 1 always.
///
/// The same numbers are also exposed in the ideal's indexing, where
/// β_i(I)_j = β_{i+1,j}(S/I). Both views are used throughout the library, so
/// every accessor names its convention.
class BettiTable {
 public:
  using Key = std::pair<int, int>;  // (homological index, internal degree)

  BettiTable(GroundSet ground, FieldSpec field) : ground_(ground), field_(field) { entries_[{0, 0}] = 1; }

  const GroundSet& ground() const noexcept { return ground_; }
  const FieldSpec& field() const noexcept { return field_; }
  const std::map<Key, std::uint64_t>& entries() const noexcept { return entries_; }

  void add(int i, int j, std::uint64_t value) {
    if (value == 0) return;
    if (i < 0 || j < 0) throw Error(Errc::OutOfRange, "negative Betti index");
    auto& slot = entries_[{i, j}];
    if (slot + value < slot) throw Error(Errc::Overflow, "Betti number overflow");
    slot += value;
  }
  void add_ideal(int i, int j, std::uint64_t value) { add(i + 1, j, value); }

  std::uint64_t at(int i, int j) const {
    const auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
  }
  std::uint64_t ideal_at(int i, int j) const { return at(i + 1, j); }

  std::uint64_t total(int i) const {
    std::uint64_t sum = 0;
    for (const auto& [key, value] : entries_)
      if (key.first == i) sum += value;
    return sum;
  }
  std::uint64_t ideal_total(int i) const { return total(i + 1); }

  /// Largest homological index with a nonzero entry (S/I convention).
  int max_index() const noexcept { return entries_.rbegin()->first.first; }

  /// Entrywise comparison; the field tag is deliberately ignored.
  bool same_entries(const BettiTable& other) const { return entries_ == other.entries_; }

 private:
  GroundSet ground_;
  FieldSpec field_;
  std::map<Key, std::uint64_t> entries_;
};

/// Integer polynomial in t; coeffs[k] is the coefficient of t^k.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<long> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// (1 - t)^k
  static Polynomial one_minus_t_pow(int k) {
    std::vector<long> c(static_cast<std::size_t>(k) + 1, 0);
    c[0] = 1;
    for (int e = 1; e <= k; ++e)
      for (int d = e; d >= 1; --d) c[d] -= c[d - 1];
    return Polynomial(std::move(c));
  }

  const std::vector<long>& coeffs() const noexcept { return coeffs_; }
  long coeff(std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : 0; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
    std::vector<long> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
  }

  /// Shift by t^k and scale.
  Polynomial scaled_shifted(long scale, int shift) const {
    std::vector<long> c(coeffs_.size() + static_cast<std::size_t>(shift), 0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k + static_cast<std::size_t>(shift)] = scale * coeffs_[k];
    return Polynomial(std::move(c));
  }

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const long c = coeffs_[k];
      if (c == 0) continue;
      const long mag = c < 0 ? -c : c;
      if (out.empty()) out += c < 0 ? "-" : "";
      else out += c < 0 ? " - " : " + ";
      if (mag != 1 || k == 0) out += std::to_string(mag);
      if (k >= 1) out += "t";
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<long> coeffs_;
};

namespace detail {

inline void require_oracle_size(const Ideal& ideal) {
  if (!ideal.is_proper()) throw Error(Errc::NotProper, "Betti oracle needs a proper nonzero ideal");
  if (ideal.ground().size() > kOracleLimit)
    throw Error(Errc::GroundTooLargeForOracle, "oracle is limited to " + std::to_string(kOracleLimit) + " vertices");
}

}  // namespace detail

/// Hochster's formula in its dual-link form:
///   β_{i,σ}(I) = dim H̃_{i-1}(link_{Δ*}(σ̄); K),
/// summed over σ of each size. Only complements σ̄ that are faces of Δ*
/// contribute, so the loop runs over the faces of Δ*.
inline BettiTable hochster_betti(const Ideal& ideal, const FieldSpec& field) {
  detail::require_oracle_size(ideal);
  const GroundSet& g = ideal.ground();
  const Complex dstar = dual_complex(ideal);
  BettiTable table(g, field);
  for (Mask cosigma : dstar.faces()) {
    const int degree = g.size() - popcount(cosigma);
    const auto h = reduced_homology_dims(link(dstar, cosigma), field);
    // h[k] = dim H̃_{k-1}, which is β_k(I) in degree |σ|.
    for (std::size_t k = 0; k < h.size(); ++k) table.add_ideal(static_cast<int>(k), degree, h[k]);
  }
  return table;
}

/// Second oracle, via restrictions: β_{i,σ}(I) = dim H̃_{|σ|-i-2}(Δ|_σ).
inline BettiTable induced_subcomplex_betti(const Ideal& ideal, const FieldSpec& field) {
  detail::require_oracle_size(ideal);
  const GroundSet& g = ideal.ground();
  const Complex delta = ideal_to_complex(ideal);
  BettiTable table(g, field);
  for_each_subset(g.full(), [&](Mask sigma) {
    if (sigma == 0) return;
    std::vector<Mask> restricted;
    for (Mask f : delta.facets()) restricted.push_back(f & sigma);
    const auto h = reduced_homology_dims(Complex::from_faces(g, std::move(restricted)), field);
    // h[k] = dim H̃_{k-1}(Δ|_σ) contributes to β_{|σ|-k, |σ|}(S/I).
    const int size = popcount(sigma);
    for (std::size_t k = 0; k < h.size(); ++k) {
      const int index = size - static_cast<int>(k);
      if (index >= 1) table.add(index, size, h[k]);
    }
  });
  return table;
}

namespace detail {

inline constexpr int kPascalRows = 68;

inline const std::array<std::array<std::uint64_t, kPascalRows>, kPascalRows>& pascal() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, kPascalRows>, kPascalRows> t{};
    for (int a = 0; a < kPascalRows; ++a) {
      t[a][0] = 1;
      for (int b = 1; b <= a; ++b) t[a][b] = t[a - 1][b - 1] + (b < a ? t[a - 1][b] : 0);
    }
    return t;
  }();
  return table;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(Errc::Overflow, "Betti number exceeds 64 bits");
  return out;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(Errc::Overflow, "Betti number exceeds 64 bits");
  return out;
}

}  // namespace detail

/// C(a, b), zero outside 0 <= b <= a.
inline std::uint64_t binomial(int a, int b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (a >= detail::kPascalRows) throw Error(Errc::Overflow, "binomial row " + std::to_string(a) + " out of table");
  return detail::pascal()[a][b];
}

/// β_i(I_q) in K[x_1..x_n] = C(n, q+i) C(q+i-1, i), sitting in degree q+i.
/// Negative i gives 0.
inline std::uint64_t closed_betti_Iq(int n, int q, int i) {
  if (q < 1 || q > n) throw Error(Errc::OutOfRange, "I_q needs 1 <= q <= n");
  if (i < 0) return 0;
  return detail::checked_mul(binomial(n, q + i), binomial(q + i - 1, i));
}

/// β_i(I_q J_r) = Σ_{j+k=i} C(n,q+j) C(m,r+k) C(q+j-1,j) C(r+k-1,k), in
/// degree q+r+i. A zero degree on one side drops that block (I_0 = J_0 = S).
inline std::uint64_t closed_betti_IqJr(int n, int m, int q, int r, int i) {
  if (q < 0 || r < 0 || (q == 0 && r == 0)) throw Error(Errc::OutOfRange, "I_qJ_r needs (q, r) != (0, 0)");
  if (q == 0) return closed_betti_Iq(m, r, i);
  if (r == 0) return closed_betti_Iq(n, q, i);
  if (q > n || r > m) throw Error(Errc::OutOfRange, "I_qJ_r needs 1 <= q <= n, 1 <= r <= m");
  if (i < 0) return 0;
  std::uint64_t sum = 0;
  for (int j = 0; j <= i; ++j) {
    const int k = i - j;
    std::uint64_t term = detail::checked_mul(binomial(n, q + j), binomial(m, r + k));
    term = detail::checked_mul(term, binomial(q + j - 1, j));
    term = detail::checked_mul(term, binomial(r + k - 1, k));
    sum = detail::checked_add(sum, term);
  }
  return sum;
}

namespace detail {

inline void require_two_product_bounds(int n, int m, int q, int r, int s, int t, int q_min) {
  if (!(q_min <= q && q < s && s <= n && q_min <= t && t < r && r <= m))
    throw Error(Errc::OutOfRange, "need " + std::to_string(q_min) + " <= q < s <= n and " + std::to_string(q_min) +
                                      " <= t < r <= m");
}

}  // namespace detail

/// β_i(I_qJ_r + I_sJ_t) = β_i(I_qJ_r) + β_i(I_sJ_t) + β_{i-1}(I_sJ_r) for
/// 0 <= q < s <= n, 0 <= t < r <= m. At i = 0 the last term vanishes and the
/// value is the generator count.
inline std::uint64_t closed_betti_mixed(int n, int m, int q, int r, int s, int t, int i) {
  detail::require_two_product_bounds(n, m, q, r, s, t, 0);
  if (i < 0) return 0;
  std::uint64_t sum = detail::checked_add(closed_betti_IqJr(n, m, q, r, i), closed_betti_IqJr(n, m, s, t, i));
  return detail::checked_add(sum, closed_betti_IqJr(n, m, s, r, i - 1));
}

/// β_i(I_s + I_qJ_t + J_r) for 1 <= q < s <= n, 1 <= t < r <= m:
///   β_i(I_s) + β_i(I_qJ_t) + β_i(J_r) + β_{i-1}(I_qJ_r) + β_{i-1}(I_sJ_t).
inline std::uint64_t closed_betti_dual_mixed(int n, int m, int q, int r, int s, int t, int i) {
  detail::require_two_product_bounds(n, m, q, r, s, t, 1);
  if (i < 0) return 0;
  std::uint64_t sum = closed_betti_Iq(n, s, i);
  sum = detail::checked_add(sum, closed_betti_IqJr(n, m, q, t, i));
  sum = detail::checked_add(sum, closed_betti_Iq(m, r, i));
  sum = detail::checked_add(sum, closed_betti_IqJr(n, m, q, r, i - 1));
  return detail::checked_add(sum, closed_betti_IqJr(n, m, s, t, i - 1));
}

/// Which closed Betti formula family a normalized spec belongs to.
enum class BettiShape {
  Product,         // I_qJ_r, (q, r) != (0, 0)
  TwoProducts,     // I_qJ_r + I_sJ_t, 0 <= q < s, 0 <= t < r
  DualTwoProducts  // I_s + I_qJ_t + J_r, 1 <= q < s, 1 <= t < r
};

struct BettiParams {
  BettiShape shape;
  int q = 0, r = 0, s = 0, t = 0;
};

/// Matches a spec against the closed Betti families; throws
/// UnsupportedShape or OutOfRange.
inline BettiParams betti_shape(const MixedSpec& spec) {
  const MixedSpec norm = spec.normalized();
  const int n = norm.ground().n(), m = norm.ground().m();
  const auto terms = norm.terms();
  for (const auto& term : terms)
    if (term.q > n || term.r > m) throw Error(Errc::OutOfRange, "term degree exceeds its block size");
  if (terms.size() == 1 && !(terms[0].q == 0 && terms[0].r == 0))
    return {BettiShape::Product, terms[0].q, terms[0].r};
  if (terms.size() == 2) {
    // The term with the smaller x-degree plays the role of I_qJ_r.
    const Term a = terms[0].q < terms[1].q ? terms[0] : terms[1];
    const Term b = terms[0].q < terms[1].q ? terms[1] : terms[0];
    return {BettiShape::TwoProducts, a.q, a.r, b.q, b.r};
  }
  if (terms.size() == 3) {
    const Term mid = terms[0], xs = terms[1], ys = terms[2];
    if (xs.r == 0 && ys.q == 0 && mid.q >= 1 && mid.r >= 1 && mid.q < xs.q && mid.r < ys.r)
      return {BettiShape::DualTwoProducts, mid.q, ys.r, xs.q, mid.r};
  }
  throw Error(Errc::UnsupportedShape, "no closed Betti formula for this mixed ideal");
}

/// Full graded table of S/I from the closed formulas, each summand placed in
/// its own degree.
inline BettiTable closed_betti_table(const MixedSpec& spec, const FieldSpec& field = FieldSpec::rationals()) {
  const BettiParams p = betti_shape(spec);
  const GroundSet& g = spec.ground();
  const int n = g.n(), m = g.m(), top = g.size();
  BettiTable table(g, field);
  // β_i(I_aJ_b) lands at ideal index i+lag, degree a+b+i.
  auto place = [&](int a, int b, int lag) {
    for (int i = 0; i + lag <= top; ++i) table.add_ideal(i + lag, a + b + i, closed_betti_IqJr(n, m, a, b, i));
  };
  switch (p.shape) {
    case BettiShape::Product:
      place(p.q, p.r, 0);
      break;
    case BettiShape::TwoProducts:
      place(p.q, p.r, 0);
      place(p.s, p.t, 0);
      place(p.s, p.r, 1);
      break;
    case BettiShape::DualTwoProducts:
      place(p.s, 0, 0);
      place(p.q, p.t, 0);
      place(0, p.r, 0);
      place(p.q, p.r, 1);
      place(p.s, p.t, 1);
      break;
  }
  return table;
}

inline int projective_dimension(const BettiTable& table) { return table.max_index(); }

/// True iff β_i(I) lives only in degree d+i for every i (ideal convention).
inline bool is_linear_resolution(const BettiTable& table, int d) {
  for (const auto& [key, value] : table.entries())
    if (key.first >= 1 && key.second != d + key.first - 1) return false;
  return true;
}

/// Σ (-1)^i β_{i,j} t^j.
inline Polynomial k_polynomial(const BettiTable& table) {
  std::vector<long> c;
  for (const auto& [key, value] : table.entries()) {
    const auto j = static_cast<std::size_t>(key.second);
    if (c.size() <= j) c.resize(j + 1, 0);
    c[j] += (key.first % 2 == 0 ? 1L : -1L) * static_cast<long>(value);
  }
  return Polynomial(std::move(c));
}

/// (1-t)^{n+m} Hilb(S/I), from the face numbers of Δ:
///   Σ_F t^{|F|} (1-t)^{n+m-|F|}.
inline Polynomial hilbert_numerator(const Ideal& ideal) {
  if (!ideal.is_proper()) throw Error(Errc::NotProper, "hilbert_numerator needs a proper nonzero ideal");
  const GroundSet& g = ideal.ground();
  const auto faces = detail::nonface_table(g, ideal.supports()).complemented().members();
  std::vector<long> f(static_cast<std::size_t>(g.size()) + 1, 0);
  for (Mask face : faces) ++f[static_cast<std::size_t>(popcount(face))];
  Polynomial out;
  for (int k = 0; k <= g.size(); ++k)
    if (f[k] != 0) out += Polynomial::one_minus_t_pow(g.size() - k).scaled_shifted(f[k], k);
  return out;
}

}  // namespace sqfree
