#pragma once

#include <string>
#include <vector>

#include "sqfree/ideal_core.hpp"

namespace sqfree {

/// Δ* = { complement(τ) : τ ∉ Δ }. Its facets are the complements of the
/// minimal non-faces of Δ.
inline Complex alexander_dual(const Complex& d) {
  const GroundSet& g = d.ground();
  const Ideal nonfaces = complex_to_ideal(d);
  std::vector<Mask> facets;
  for (Mask s : nonfaces.supports()) facets.push_back(g.complement(s));
  return Complex::from_faces(g, std::move(facets));
}

/// Δ* for the Stanley-Reisner complex Δ of `ideal`, read straight off the
/// generators (they are the minimal non-faces of Δ).
inline Complex dual_complex(const Ideal& ideal) {
  if (!ideal.is_proper()) throw Error(Errc::NotProper, "Alexander dual needs a proper nonzero ideal");
  const GroundSet& g = ideal.ground();
  std::vector<Mask> facets;
  for (Mask s : ideal.supports()) facets.push_back(g.complement(s));
  return Complex::from_faces(g, std::move(facets));
}

/// Alexander dual I* = I_{Δ*}.
inline Ideal dual(const Ideal& ideal) { return complex_to_ideal(dual_complex(ideal)); }

namespace detail {

inline void require_range(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::OutOfRange, what);
}

}  // namespace detail

/// Symbolic dual of the mixed shapes with known closed forms:
///   I_q                 -> I_{n-q+1}
///   I_q + J_r           -> I_{n-q+1} J_{m-r+1}
///   I_q J_r             -> I_{n-q+1} + J_{m-r+1}
///   I_q J_r + I_s J_t   -> I_{n-q+1} + I_{n-s+1} J_{m-r+1} + J_{m-t+1}   (q < s, t < r)
/// Anything else is UnsupportedShape.
inline MixedSpec closed_dual(const MixedSpec& spec) {
  const MixedSpec norm = spec.normalized();
  const GroundSet& g = norm.ground();
  const int n = g.n(), m = g.m();
  const auto t = norm.terms();
  std::vector<Term> out;
  if (t.size() == 1 && t[0].q >= 1 && t[0].r == 0) {
    detail::require_range(t[0].q <= n, "I_q needs 1 <= q <= n");
    out = {{n - t[0].q + 1, 0}};
  } else if (t.size() == 1 && t[0].q >= 1 && t[0].r >= 1) {
    detail::require_range(t[0].q <= n && t[0].r <= m, "I_qJ_r needs 1 <= q <= n, 1 <= r <= m");
    out = {{n - t[0].q + 1, 0}, {0, m - t[0].r + 1}};
  } else if (t.size() == 2 && t[0].q >= 1 && t[0].r == 0 && t[1].q == 0 && t[1].r >= 1) {
    detail::require_range(t[0].q <= n && t[1].r <= m, "I_q+J_r needs 1 <= q <= n, 1 <= r <= m");
    out = {{n - t[0].q + 1, m - t[1].r + 1}};
  } else if (t.size() == 2 && t[0].q >= 1 && t[1].q >= 1 && t[1].r >= 1) {
    // Normalization guarantees q < s and t < r here.
    const int q = t[0].q, r = t[0].r, s = t[1].q, tt = t[1].r;
    detail::require_range(s <= n && r <= m, "I_qJ_r+I_sJ_t needs 1 <= q < s <= n, 1 <= t < r <= m");
    out = {{n - q + 1, 0}, {n - s + 1, m - r + 1}, {0, m - tt + 1}};
  } else {
    throw Error(Errc::UnsupportedShape, "no closed-form dual for this mixed ideal");
  }
  return MixedSpec(g, std::move(out)).normalized();
}

}  // namespace sqfree
