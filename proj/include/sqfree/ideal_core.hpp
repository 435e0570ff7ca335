#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sqfree/bits.hpp"
#include "sqfree/error.hpp"

namespace sqfree {

/// Largest ground set the exhaustive subset-table routines will allocate for.
inline constexpr int kEnumerationLimit = 26;

/// Two blocks of variables: indices 0..n-1 are x_1..x_n, n..n+m-1 are y_1..y_m.
class GroundSet {
 public:
  GroundSet(int n, int m) : n_(n), m_(m) {
    if (n < 0 || m < 0) throw Error(Errc::OutOfRange, "negative block size");
    if (n + m > 64) throw Error(Errc::GroundTooLarge, "n+m = " + std::to_string(n + m) + " exceeds 64");
    if (n + m == 0) throw Error(Errc::EmptyGround, "ground set needs at least one variable");
  }

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  int size() const noexcept { return n_ + m_; }

  Mask x_mask() const noexcept { return low_bits(n_); }
  Mask y_mask() const noexcept { return low_bits(n_ + m_) & ~low_bits(n_); }
  Mask full() const noexcept { return low_bits(n_ + m_); }
  Mask complement(Mask s) const noexcept { return full() & ~s; }

  std::string variable_name(int v) const {
    return v < n_ ? "x" + std::to_string(v + 1) : "y" + std::to_string(v - n_ + 1);
  }

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  int n_;
  int m_;
};

struct Bidegree {
  int x = 0;
  int y = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

inline Bidegree bidegree(const GroundSet& g, Mask support) {
  return {popcount(support & g.x_mask()), popcount(support & g.y_mask())};
}

/// Renders a support as `x1*x2*y1`; the empty support is `1`.
inline std::string format_monomial(const GroundSet& g, Mask support) {
  if (support == 0) return "1";
  std::string out;
  for_each_bit(support, [&](int v) {
    if (!out.empty()) out += '*';
    out += g.variable_name(v);
  });
  return out;
}

/// A square-free monomial, stored as its support.
class Monomial {
 public:
  Monomial(GroundSet ground, Mask support) : ground_(ground), support_(support) {
    if (!is_subset(support, ground.full()))
      throw Error(Errc::OutOfRange, "support has variables outside the ground set");
  }

  static Monomial unit(GroundSet ground) { return {ground, 0}; }

  const GroundSet& ground() const noexcept { return ground_; }
  Mask support() const noexcept { return support_; }
  int degree() const noexcept { return popcount(support_); }
  Bidegree bidegree() const noexcept { return sqfree::bidegree(ground_, support_); }
  bool is_unit() const noexcept { return support_ == 0; }
  bool divides(const Monomial& other) const noexcept { return is_subset(support_, other.support_); }

  std::string to_string() const { return format_monomial(ground_, support_); }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  GroundSet ground_;
  Mask support_;
};

namespace detail {

inline void skip_spaces(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

/// Reads an unsigned decimal at `pos`; throws SyntaxError if none.
inline long read_uint(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  long value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + (text[pos] - '0');
    if (value > 1'000'000) throw SyntaxError(start, "number too large");
    ++pos;
  }
  if (pos == start) throw SyntaxError(start, "expected a number");
  return value;
}

inline Mask parse_monomial_at(std::string_view text, std::size_t base, const GroundSet& g) {
  std::size_t pos = 0;
  skip_spaces(text, pos);
  if (pos < text.size() && text[pos] == '1') {
    ++pos;
    skip_spaces(text, pos);
    if (pos != text.size()) throw SyntaxError(base + pos, "unexpected character after unit monomial");
    return 0;
  }
  Mask support = 0;
  while (true) {
    skip_spaces(text, pos);
    if (pos >= text.size()) throw SyntaxError(base + pos, "expected a variable");
    const char block = text[pos];
    if (block != 'x' && block != 'y') throw SyntaxError(base + pos, "expected 'x' or 'y'");
    const std::size_t var_pos = pos;
    ++pos;
    const long index = read_uint(text, pos);
    const int bound = block == 'x' ? g.n() : g.m();
    if (index < 1 || index > bound)
      throw Error(Errc::OutOfRange, std::string(1, block) + std::to_string(index) + " is not a variable of the ground set");
    const int v = block == 'x' ? int(index) - 1 : g.n() + int(index) - 1;
    const Mask bit = Mask{1} << v;
    if (support & bit) throw SyntaxError(base + var_pos, "repeated variable (not square-free)");
    support |= bit;
    skip_spaces(text, pos);
    if (pos == text.size()) break;
    if (text[pos] != '*') throw SyntaxError(base + pos, "expected '*'");
    ++pos;
  }
  return support;
}

}  // namespace detail

/// Parses the `x1*x2*y1` form produced by Monomial::to_string.
inline Monomial parse_monomial(std::string_view text, const GroundSet& g) {
  return {g, detail::parse_monomial_at(text, 0, g)};
}

/// Parses a comma-separated generator list such as `x1*x2, y1*y2`.
inline std::vector<Monomial> parse_monomial_list(std::string_view text, const GroundSet& g) {
  std::vector<Monomial> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    out.emplace_back(g, detail::parse_monomial_at(text.substr(start, end - start), start, g));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

class Ideal;
Ideal minimalize(const GroundSet& g, std::span<const Mask> supports);

/// A square-free monomial ideal held as its minimal generating set, sorted
/// canonically (degree, then bitset value).
class Ideal {
 public:
  enum class Kind { Zero, Unit, Proper };

  static Ideal zero(GroundSet g) { return {g, {}, Kind::Zero}; }
  static Ideal unit(GroundSet g) { return {g, {Mask{0}}, Kind::Unit}; }

  const GroundSet& ground() const noexcept { return ground_; }
  Kind kind() const noexcept { return kind_; }
  bool is_proper() const noexcept { return kind_ == Kind::Proper; }
  bool is_zero() const noexcept { return kind_ == Kind::Zero; }
  bool is_unit() const noexcept { return kind_ == Kind::Unit; }

  std::span<const Mask> supports() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }

  std::vector<Monomial> gens() const {
    std::vector<Monomial> out;
    out.reserve(gens_.size());
    for (Mask s : gens_) out.emplace_back(ground_, s);
    return out;
  }

  std::vector<std::string> gen_strings() const {
    std::vector<std::string> out;
    for (Mask s : gens_) out.push_back(format_monomial(ground_, s));
    return out;
  }

  /// True iff x^support lies in the ideal.
  bool contains(Mask support) const noexcept {
    return std::any_of(gens_.begin(), gens_.end(), [&](Mask g) { return is_subset(g, support); });
  }

  friend bool operator==(const Ideal&, const Ideal&) = default;

 private:
  friend Ideal minimalize(const GroundSet&, std::span<const Mask>);
  friend Ideal detail_from_minimal(const GroundSet&, std::vector<Mask>);

  Ideal(GroundSet g, std::vector<Mask> gens, Kind kind)
      : ground_(g), gens_(std::move(gens)), kind_(kind) {}

  GroundSet ground_;
  std::vector<Mask> gens_;
  Kind kind_;
};

/// Trusted constructor: `gens` must already be an antichain.
inline Ideal detail_from_minimal(const GroundSet& g, std::vector<Mask> gens) {
  std::sort(gens.begin(), gens.end(), canonical_less);
  if (gens.empty()) return Ideal::zero(g);
  if (gens.front() == 0) return Ideal::unit(g);
  return {g, std::move(gens), Ideal::Kind::Proper};
}

/// Drops every generator divisible by another one.
inline Ideal minimalize(const GroundSet& g, std::span<const Mask> supports) {
  std::vector<Mask> sorted(supports.begin(), supports.end());
  for (Mask s : sorted)
    if (!is_subset(s, g.full())) throw Error(Errc::OutOfRange, "generator outside the ground set");
  std::sort(sorted.begin(), sorted.end(), canonical_less);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Mask> kept;
  for (Mask s : sorted) {
    const bool redundant = std::any_of(kept.begin(), kept.end(), [&](Mask k) { return is_subset(k, s); });
    if (!redundant) kept.push_back(s);
  }
  if (kept.empty()) return Ideal::zero(g);
  if (kept.front() == 0) return Ideal::unit(g);
  return {g, std::move(kept), Ideal::Kind::Proper};
}

inline Ideal minimalize(const GroundSet& g, std::span<const Monomial> gens) {
  std::vector<Mask> supports;
  supports.reserve(gens.size());
  for (const auto& mono : gens) {
    if (!(mono.ground() == g)) throw Error(Errc::MixedGroundSets, "generators live on different ground sets");
    supports.push_back(mono.support());
  }
  return minimalize(g, supports);
}

/// A simplicial complex on the ground set, stored by its facets.
class Complex {
 public:
  enum class Kind { Void, Irrelevant, Nonempty };

  /// Keeps the inclusion-maximal members of `faces`; an empty list gives the
  /// void complex and {∅} gives the irrelevant complex.
  static Complex from_faces(GroundSet g, std::vector<Mask> faces) {
    for (Mask f : faces)
      if (!is_subset(f, g.full())) throw Error(Errc::OutOfRange, "face outside the ground set");
    // Largest first so that each candidate only needs checking against kept facets.
    std::sort(faces.begin(), faces.end(), [](Mask a, Mask b) { return canonical_less(b, a); });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Mask> kept;
    for (Mask f : faces)
      if (std::none_of(kept.begin(), kept.end(), [&](Mask k) { return is_subset(f, k); })) kept.push_back(f);
    std::sort(kept.begin(), kept.end(), canonical_less);
    return Complex(g, std::move(kept));
  }

  static Complex void_complex(GroundSet g) { return Complex(g, {}); }
  static Complex irrelevant(GroundSet g) { return Complex(g, {Mask{0}}); }
  static Complex simplex(GroundSet g, Mask vertices) { return from_faces(g, {vertices}); }
  static Complex simplex(GroundSet g) { return simplex(g, g.full()); }

  const GroundSet& ground() const noexcept { return ground_; }
  std::span<const Mask> facets() const noexcept { return facets_; }

  Kind kind() const noexcept {
    if (facets_.empty()) return Kind::Void;
    if (facets_.size() == 1 && facets_.front() == 0) return Kind::Irrelevant;
    return Kind::Nonempty;
  }

  /// Maximum facet size minus one; -1 for the irrelevant complex and (by
  /// convention here) -2 for the void complex.
  int dim() const noexcept {
    if (facets_.empty()) return -2;
    return popcount(facets_.back()) - 1;
  }

  Mask vertices() const noexcept {
    Mask all = 0;
    for (Mask f : facets_) all |= f;
    return all;
  }

  bool contains(Mask face) const noexcept {
    return std::any_of(facets_.begin(), facets_.end(), [&](Mask f) { return is_subset(face, f); });
  }

  /// Every face, canonically sorted.
  std::vector<Mask> faces() const {
    std::vector<Mask> out;
    for (Mask f : facets_) for_each_subset(f, [&](Mask s) { out.push_back(s); });
    std::sort(out.begin(), out.end(), canonical_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  friend bool operator==(const Complex&, const Complex&) = default;

 private:
  Complex(GroundSet g, std::vector<Mask> facets) : ground_(g), facets_(std::move(facets)) {}

  GroundSet ground_;
  std::vector<Mask> facets_;
};

namespace detail {

inline void require_enumerable(const GroundSet& g) {
  if (g.size() > kEnumerationLimit)
    throw Error(Errc::GroundTooLargeForOracle,
                "subset enumeration over " + std::to_string(g.size()) + " vertices exceeds the limit of " +
                    std::to_string(kEnumerationLimit));
}

/// Table of non-faces of the Stanley-Reisner complex of `supports`.
inline SubsetTable nonface_table(const GroundSet& g, std::span<const Mask> supports) {
  require_enumerable(g);
  SubsetTable table(g.size());
  for (Mask s : supports) table.set(s);
  table.superset_closure();
  return table;
}

inline SubsetTable face_table(const Complex& d) {
  require_enumerable(d.ground());
  SubsetTable table(d.ground().size());
  for (Mask f : d.facets()) table.set(f);
  table.subset_closure();
  return table;
}

}  // namespace detail

/// Stanley-Reisner complex: faces are the sets containing no generator.
/// The zero ideal gives the full simplex; the unit ideal has no complex.
inline Complex ideal_to_complex(const Ideal& ideal) {
  const GroundSet& g = ideal.ground();
  if (ideal.is_unit()) throw Error(Errc::NotProper, "the unit ideal is not a Stanley-Reisner ideal");
  if (ideal.is_zero()) return Complex::simplex(g);
  const auto nonfaces = detail::nonface_table(g, ideal.supports());
  const auto faces = nonfaces.complemented();
  auto facets = faces.all_extensions_in(nonfaces).members();
  return Complex::from_faces(g, std::move(facets));
}

/// Stanley-Reisner ideal: generated by the minimal non-faces. The void
/// complex maps to the unit ideal.
inline Ideal complex_to_ideal(const Complex& d) {
  const GroundSet& g = d.ground();
  if (d.kind() == Complex::Kind::Void) return Ideal::unit(g);
  const auto faces = detail::face_table(d);
  const auto nonfaces = faces.complemented();
  return detail_from_minimal(g, nonfaces.all_deletions_in(faces).members());
}

/// Krull dimension of S/I: the largest facet size of the complex.
inline int krull_dim(const Ideal& ideal) {
  if (ideal.is_unit()) throw Error(Errc::NotProper, "krull_dim of the unit ideal");
  if (ideal.is_zero()) return ideal.ground().size();
  return ideal_to_complex(ideal).dim() + 1;
}

/// One summand I_q * J_r of a mixed product ideal.
struct Term {
  int q = 0;
  int r = 0;
  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;
};

/// Canonical term order: terms with an x-part first (by q, then r), pure
/// y-terms last.
inline bool term_less(const Term& a, const Term& b) noexcept {
  const bool ay = a.q == 0, by = b.q == 0;
  if (ay != by) return by;
  if (a.q != b.q) return a.q < b.q;
  return a.r < b.r;
}

/// (q, r) dominates (q', r') when q <= q' and r <= r': I_{q'}J_{r'} ⊆ I_qJ_r.
inline bool dominates(const Term& a, const Term& b) noexcept { return a.q <= b.q && a.r <= b.r; }

/// Symbolic sum of products I_q J_r over a two-block ground set.
class MixedSpec {
 public:
  MixedSpec(GroundSet g, std::vector<Term> terms) : ground_(g), terms_(std::move(terms)) {
    for (const auto& t : terms_)
      if (t.q < 0 || t.r < 0) throw Error(Errc::InvalidTerm, "negative degree in term");
    auto sorted = terms_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(Errc::InvalidTerm, "duplicate term");
  }

  const GroundSet& ground() const noexcept { return ground_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Drops dominated terms and sorts the rest canonically.
  MixedSpec normalized() const {
    std::vector<Term> kept;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < terms_.size() && !redundant; ++j)
        redundant = j != i && dominates(terms_[j], terms_[i]);
      if (!redundant) kept.push_back(terms_[i]);
    }
    std::sort(kept.begin(), kept.end(), term_less);
    return MixedSpec(ground_, std::move(kept));
  }

  bool is_normalized() const { return *this == normalized(); }

  friend bool operator==(const MixedSpec&, const MixedSpec&) = default;

 private:
  GroundSet ground_;
  std::vector<Term> terms_;
};

/// Upper bound on generators make_mixed will materialize.
inline constexpr std::size_t kMaxGenerators = std::size_t{1} << 24;

/// Expands a mixed spec into its minimal generators.
inline Ideal make_mixed(const MixedSpec& spec) {
  const MixedSpec norm = spec.normalized();
  const GroundSet& g = norm.ground();
  std::vector<Mask> gens;
  for (const auto& t : norm.terms()) {
    if (t.q > g.n() || t.r > g.m()) continue;  // zero ideal
    std::vector<Mask> xs, ys;
    for_each_k_subset(g.n(), t.q, 0, [&](Mask s) {
      xs.push_back(s);
      if (xs.size() > kMaxGenerators) throw Error(Errc::Overflow, "too many generators");
    });
    for_each_k_subset(g.m(), t.r, g.n(), [&](Mask s) {
      ys.push_back(s);
      if (ys.size() > kMaxGenerators) throw Error(Errc::Overflow, "too many generators");
    });
    if (gens.size() + xs.size() * ys.size() > kMaxGenerators)
      throw Error(Errc::Overflow, "too many generators");
    for (Mask x : xs)
      for (Mask y : ys) gens.push_back(x | y);
  }
  // Non-dominated terms never produce comparable generators, so the
  // expansion is already minimal.
  return detail_from_minimal(g, std::move(gens));
}

}  // namespace sqfree

namespace sqfree {

/// Krull dimension of S/I for a mixed spec without expanding it: the largest
/// a + b such that a x-variables and b y-variables contain no generator, i.e.
/// a < q or b < r for every term.
inline int krull_dim(const MixedSpec& spec) {
  const MixedSpec norm = spec.normalized();
  const int n = norm.ground().n(), m = norm.ground().m();
  const auto terms = norm.terms();
  if (terms.size() == 1 && terms[0].q == 0 && terms[0].r == 0)
    throw Error(Errc::NotProper, "krull_dim of the unit ideal");
  int best = -1;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= m; ++b) {
      const bool face = std::all_of(terms.begin(), terms.end(), [&](const Term& t) { return a < t.q || b < t.r; });
      if (face) best = std::max(best, a + b);
    }
  return best;
}

}  // namespace sqfree
