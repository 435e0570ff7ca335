#pragma once

#include <cstdint>

#include "sqfree/betti.hpp"
#include "sqfree/ideal_core.hpp"

namespace sqfree {

/// depth S/I = (n+m) - pd S/I (Auslander-Buchsbaum), from a table of S/I.
inline int depth_of_quotient(const BettiTable& table) {
  return table.ground().size() - projective_dimension(table);
}

inline int depth_of_quotient(const Ideal& ideal, const FieldSpec& field) {
  return depth_of_quotient(hochster_betti(ideal, field));
}

inline bool is_cm(const Ideal& ideal, const BettiTable& table) {
  return depth_of_quotient(table) == krull_dim(ideal);
}

inline bool is_cm(const Ideal& ideal, const FieldSpec& field) { return is_cm(ideal, hochster_betti(ideal, field)); }

/// Cohen-Macaulay type: the last total Betti number of S/I.
inline std::uint64_t cm_type(const Ideal& ideal, const BettiTable& table) {
  if (!is_cm(ideal, table)) throw Error(Errc::NotCM, "type is only defined for Cohen-Macaulay quotients");
  return table.total(projective_dimension(table));
}

inline std::uint64_t cm_type(const Ideal& ideal, const FieldSpec& field) {
  return cm_type(ideal, hochster_betti(ideal, field));
}

inline bool is_gorenstein(const Ideal& ideal, const BettiTable& table) {
  return is_cm(ideal, table) && table.total(projective_dimension(table)) == 1;
}

inline bool is_gorenstein(const Ideal& ideal, const FieldSpec& field) {
  return is_gorenstein(ideal, hochster_betti(ideal, field));
}

/// The mixed shapes with a known Cohen-Macaulay classification.
enum class CmShape {
  PowerX,            // I_q, 1 <= q <= n
  Product,           // I_qJ_r, q, r >= 1
  ProductPlusPower,  // I_qJ_r + I_s, 0 < q < s <= n, 0 < r <= m
  TwoProducts,       // I_qJ_r + I_sJ_t, 0 < q < s <= n, 0 < t < r <= m
};

struct CmParams {
  CmShape shape;
  int q = 0, r = 0, s = 0, t = 0;
};

inline CmParams cm_shape(const MixedSpec& spec) {
  const MixedSpec norm = spec.normalized();
  const int n = norm.ground().n(), m = norm.ground().m();
  const auto terms = norm.terms();
  for (const auto& term : terms)
    if (term.q > n || term.r > m) throw Error(Errc::OutOfRange, "term degree exceeds its block size");
  if (terms.size() == 1 && terms[0].q >= 1) {
    if (terms[0].r == 0) return {CmShape::PowerX, terms[0].q};
    return {CmShape::Product, terms[0].q, terms[0].r};
  }
  if (terms.size() == 2 && terms[0].q >= 1 && terms[1].q >= 1 && terms[0].r >= 1) {
    // Sorted and non-dominated, so terms[0].q < terms[1].q and terms[0].r > terms[1].r.
    if (terms[1].r == 0) return {CmShape::ProductPlusPower, terms[0].q, terms[0].r, terms[1].q, 0};
    return {CmShape::TwoProducts, terms[0].q, terms[0].r, terms[1].q, terms[1].r};
  }
  throw Error(Errc::UnsupportedShape, "no Cohen-Macaulay classification for this mixed ideal");
}

/// Cohen-Macaulayness by parameter arithmetic alone:
///   I_q: always;  I_qJ_r: q = n and r = m;
///   I_qJ_r + I_s: s = q+1 and r = m;
///   I_qJ_r + I_sJ_t: q = n-1, r = m, s = n, t = m-1.
inline bool classify_cm(const MixedSpec& spec) {
  const CmParams p = cm_shape(spec);
  const int n = spec.ground().n(), m = spec.ground().m();
  switch (p.shape) {
    case CmShape::PowerX: return true;
    case CmShape::Product: return p.q == n && p.r == m;
    case CmShape::ProductPlusPower: return p.s == p.q + 1 && p.r == m;
    case CmShape::TwoProducts: return p.r == m && p.s == n && p.t == m - 1 && p.q == n - 1;
  }
  return false;
}

/// Type of a Cohen-Macaulay mixed quotient from its parameters.
inline std::uint64_t closed_type(const MixedSpec& spec) {
  if (!classify_cm(spec)) throw Error(Errc::NotCM, "type is only defined for Cohen-Macaulay quotients");
  const CmParams p = cm_shape(spec);
  const int n = spec.ground().n(), m = spec.ground().m();
  switch (p.shape) {
    case CmShape::PowerX: return binomial(n - 1, n - p.q);
    case CmShape::Product: return 1;
    case CmShape::ProductPlusPower: return binomial(n - 1, n - p.q) + binomial(n - 1, n - p.q - 1);
    case CmShape::TwoProducts: return static_cast<std::uint64_t>(m + n - 1);
  }
  return 0;
}

/// Krull dimension of a Cohen-Macaulay mixed quotient from its parameters.
inline int closed_dim(const MixedSpec& spec) {
  if (!classify_cm(spec)) throw Error(Errc::NotCM, "closed dimension is only tabulated for Cohen-Macaulay shapes");
  const CmParams p = cm_shape(spec);
  const int n = spec.ground().n(), m = spec.ground().m();
  switch (p.shape) {
    case CmShape::PowerX: return m + p.q - 1;
    case CmShape::Product: return m + n - 1;
    case CmShape::ProductPlusPower: return m + p.q - 1;
    case CmShape::TwoProducts: return m + n - 2;
  }
  return 0;
}

}  // namespace sqfree
