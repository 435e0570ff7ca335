#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sqfree/betti.hpp"

using namespace sqfree;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

Ideal mixed(int n, int m, std::vector<Term> terms) { return make_mixed(MixedSpec(GroundSet(n, m), std::move(terms))); }

/// Ideal-convention Betti numbers as (i, j) -> value, from the brute-force oracle.
std::map<std::pair<int, int>, std::uint64_t> as_ideal_map(const BettiTable& t) {
  std::map<std::pair<int, int>, std::uint64_t> out;
  for (const auto& [key, value] : t.entries())
    if (key.first >= 1) out[{key.first - 1, key.second}] = value;
  return out;
}

Errc code_of(const auto& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return Errc::SyntaxError;
}

}  // namespace

TEST(ClosedBetti, PowerOfX) {
  EXPECT_EQ(closed_betti_Iq(4, 2, 0), 6u);
  EXPECT_EQ(closed_betti_Iq(4, 2, 1), 8u);
  EXPECT_EQ(closed_betti_Iq(4, 2, 2), 3u);
  EXPECT_EQ(closed_betti_Iq(4, 2, 3), 0u);
  EXPECT_EQ(closed_betti_Iq(3, 3, 0), 1u);
  EXPECT_EQ(closed_betti_Iq(3, 3, 1), 0u);
  EXPECT_EQ(closed_betti_Iq(3, 2, 1), 2u);
}

TEST(ClosedBetti, Product) {
  EXPECT_EQ(closed_betti_IqJr(2, 2, 1, 1, 0), 4u);
  EXPECT_EQ(closed_betti_IqJr(2, 2, 1, 1, 1), 4u);
  EXPECT_EQ(closed_betti_IqJr(2, 2, 1, 1, 2), 1u);
  EXPECT_EQ(closed_betti_IqJr(2, 2, 1, 2, 0), 2u);
  EXPECT_EQ(closed_betti_IqJr(2, 2, 1, 2, 1), 1u);
  EXPECT_EQ(closed_betti_IqJr(2, 2, 1, 2, 2), 0u);
  EXPECT_EQ(closed_betti_IqJr(1, 1, 1, 1, 0), 1u);
  EXPECT_EQ(closed_betti_IqJr(1, 1, 1, 1, 1), 0u);
}

TEST(ClosedBetti, TwoProducts) {
  EXPECT_EQ(closed_betti_mixed(2, 2, 1, 2, 2, 1, 0), 4u);
  EXPECT_EQ(closed_betti_mixed(2, 2, 1, 2, 2, 1, 1), 3u);
  EXPECT_EQ(closed_betti_mixed(2, 2, 1, 2, 2, 1, 2), 0u);
  EXPECT_EQ(closed_betti_mixed(3, 2, 2, 2, 3, 1, 1),
            closed_betti_IqJr(3, 2, 2, 2, 1) + closed_betti_IqJr(3, 2, 3, 1, 1) + closed_betti_IqJr(3, 2, 3, 2, 0));
  // q = 0 edge: J_1 + I_1 on two plus two variables, checked against brute force
  const auto brute = oracle::betti_of_ideal(oracle::mixed(2, 2, {{0, 1}, {1, 0}}), 4);
  for (int i = 0; i <= 4; ++i) {
    std::uint64_t total = 0;
    for (const auto& [key, v] : brute)
      if (key.first == i) total += v;
    EXPECT_EQ(closed_betti_mixed(2, 2, 0, 1, 1, 0, i), total) << i;
  }
  EXPECT_EQ(code_of([] { closed_betti_mixed(2, 2, 1, 2, 1, 1, 0); }), Errc::OutOfRange);
}

TEST(ClosedBetti, DualShape) {
  EXPECT_EQ(closed_betti_dual_mixed(3, 3, 2, 3, 3, 1, 1),
            closed_betti_Iq(3, 3, 1) + closed_betti_IqJr(3, 3, 2, 1, 1) + closed_betti_Iq(3, 3, 1) +
                closed_betti_IqJr(3, 3, 2, 3, 0) + closed_betti_IqJr(3, 3, 3, 1, 0));
  const auto table = hochster_betti(mixed(3, 3, {{3, 0}, {2, 1}, {0, 3}}), kQ);
  for (int i = 0; i <= 6; ++i) EXPECT_EQ(closed_betti_dual_mixed(3, 3, 2, 3, 3, 1, i), table.ideal_total(i)) << i;
  EXPECT_EQ(code_of([] { closed_betti_dual_mixed(3, 3, 2, 3, 2, 1, 1); }), Errc::OutOfRange);
}

TEST(Hochster, SpecificTables) {
  const BettiTable a = hochster_betti(mixed(4, 0, {{2, 0}}), kQ);
  EXPECT_EQ(a.ideal_at(0, 2), 6u);
  EXPECT_EQ(a.ideal_at(1, 3), 8u);
  EXPECT_EQ(a.ideal_at(2, 4), 3u);
  EXPECT_EQ(a.entries().size(), 4u);
  const BettiTable b = hochster_betti(mixed(2, 2, {{1, 1}}), kQ);
  EXPECT_EQ(b.ideal_at(0, 2), 4u);
  EXPECT_EQ(b.ideal_at(1, 3), 4u);
  EXPECT_EQ(b.ideal_at(2, 4), 1u);
  EXPECT_EQ(b.entries().size(), 4u);
  EXPECT_EQ(b.at(0, 0), 1u);
}

TEST(Hochster, MatchesBruteForceOnRandomIdeals) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 120; ++trial) {
    const int vertices = 1 + static_cast<int>(rng() % 6);
    const auto gens = oracle::random_gens(rng, vertices);
    const Ideal ideal = minimalize(GroundSet(vertices, 0), std::span<const Mask>(gens));
    const BettiTable link_form = hochster_betti(ideal, kQ);
    EXPECT_EQ(as_ideal_map(link_form), oracle::betti_of_ideal(gens, vertices));
    EXPECT_TRUE(link_form.same_entries(induced_subcomplex_betti(ideal, kQ)));
  }
}

TEST(Hochster, RejectsTrivialAndOversizedIdeals) {
  EXPECT_EQ(code_of([] { hochster_betti(Ideal::zero(GroundSet(2, 0)), kQ); }), Errc::NotProper);
  EXPECT_EQ(code_of([] { hochster_betti(Ideal::unit(GroundSet(2, 0)), kQ); }), Errc::NotProper);
  EXPECT_EQ(code_of([] { hochster_betti(mixed(20, 10, {{20, 10}}), kQ); }), Errc::GroundTooLargeForOracle);
}

TEST(ClosedTable, MatchesOracleAndAcrossFields) {
  const MixedSpec spec(GroundSet(3, 3), {{2, 3}, {3, 1}});
  const BettiTable closed = closed_betti_table(spec);
  EXPECT_TRUE(closed.same_entries(hochster_betti(make_mixed(spec), kQ)));
  for (const char* f : {"gf2", "gfp:32003"})
    EXPECT_TRUE(closed.same_entries(hochster_betti(make_mixed(spec), FieldSpec::parse(f))));
  EXPECT_EQ(code_of([] { closed_betti_table(MixedSpec(GroundSet(3, 3), {{1, 2}, {2, 1}, {3, 0}, {0, 3}})); }),
            Errc::UnsupportedShape);
}

TEST(ClosedTable, ScalesBeyondTheOracle) {
  const BettiTable t = closed_betti_table(MixedSpec(GroundSet(20, 20), {{10, 10}}));
  EXPECT_EQ(t.ideal_total(0), binomial(20, 10) * binomial(20, 10));
  EXPECT_TRUE(is_linear_resolution(t, 20));
  EXPECT_EQ(projective_dimension(t), 21);  // n + m - q - r + 1
  EXPECT_THROW(closed_betti_table(MixedSpec(GroundSet(32, 32), {{16, 16}})), Error);
}

TEST(Invariants, ProjectiveDimension) {
  EXPECT_EQ(projective_dimension(hochster_betti(mixed(3, 0, {{2, 0}}), kQ)), 2);
  EXPECT_EQ(projective_dimension(hochster_betti(mixed(3, 2, {{3, 2}}), kQ)), 1);
  EXPECT_EQ(projective_dimension(hochster_betti(mixed(2, 2, {{1, 2}, {2, 1}}), kQ)), 2);
}

TEST(Invariants, Linearity) {
  EXPECT_TRUE(is_linear_resolution(hochster_betti(mixed(4, 0, {{2, 0}}), kQ), 2));
  EXPECT_TRUE(is_linear_resolution(hochster_betti(mixed(2, 2, {{1, 2}, {2, 1}}), kQ), 3));
  const GroundSet g(5, 0);
  const auto gens = parse_monomial_list("x1*x2, x3*x4*x5", g);
  const BettiTable mixed_degrees = hochster_betti(minimalize(g, std::span<const Monomial>(gens)), kQ);
  EXPECT_FALSE(is_linear_resolution(mixed_degrees, 2));
  EXPECT_FALSE(is_linear_resolution(mixed_degrees, 3));
}

TEST(Invariants, KPolynomialEqualsHilbertNumerator) {
  EXPECT_EQ(k_polynomial(hochster_betti(mixed(1, 0, {{1, 0}}), kQ)).to_string(), "1 - t");
  EXPECT_EQ(hilbert_numerator(mixed(1, 0, {{1, 0}})).to_string(), "1 - t");
  EXPECT_EQ(hilbert_numerator(mixed(3, 0, {{2, 0}})), Polynomial({1, 0, -3, 2}));
  EXPECT_EQ(k_polynomial(hochster_betti(mixed(3, 0, {{2, 0}}), kQ)).to_string(), "1 - 3t^2 + 2t^3");
  EXPECT_EQ(k_polynomial(hochster_betti(mixed(2, 2, {{1, 1}}), kQ)), Polynomial({1, 0, -4, 4, -1}));
  EXPECT_EQ(hilbert_numerator(mixed(2, 2, {{1, 1}})), Polynomial({1, 0, -4, 4, -1}));
}

TEST(Binomial, PascalTable) {
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(5, 6), 0u);
  EXPECT_EQ(binomial(5, -1), 0u);
  EXPECT_EQ(binomial(64, 32), 1832624140942590534ull);
  for (int a = 0; a <= 30; ++a)
    for (int b = 0; b <= a; ++b) EXPECT_EQ(binomial(a, b), oracle::choose(a, b));
}
