// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "sqfree/verify.hpp"

using namespace sqfree;

namespace {

struct Verdict {
  bool ok = true;
  std::ostringstream notes;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) notes << what;
    ok = false;
  }
  void absorb(const std::vector<CheckResult>& results) {
    for (const auto& r : results) {
      std::string what = r.name + " failed " + std::to_string(r.failures) + "/" + std::to_string(r.cases);
      if (!r.samples.empty()) what += ": " + r.samples.front();
      expect(r.passed(), what);
    }
  }
};

std::vector<Mask> sorted(std::span<const Mask> s) {
  std::vector<Mask> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

VerifyOptions options(int max_vertices, const FieldSpec& field) {
  VerifyOptions o;
  o.max_vertices = max_vertices;
  o.field = field;
  o.jobs = std::max(1u, std::thread::hardware_concurrency());
  return o;
}

void duality(Verdict& v) {
  v.absorb(verify_duals(options(7, FieldSpec::rationals())));
  // the general dual itself against the prime-intersection description
  detail::for_each_dual_shape(7, [&](int, MixedSpec spec) {
    const Ideal ideal = make_mixed(spec);
    const auto expected = oracle::prime_intersection_dual(sorted(ideal.supports()), spec.ground().size());
    v.expect(sorted(dual(ideal).supports()) == expected, detail::describe(spec) + ": dual differs from primes");
  });
}

void betti_sweep(Verdict& v, const FieldSpec& field) {
  v.absorb(verify_betti(options(7, field)));
  // spot checks at n+m = 8
  const std::vector<MixedSpec> spots = {
      MixedSpec(GroundSet(8, 0), {{3, 0}}),         MixedSpec(GroundSet(4, 4), {{2, 3}}),
      MixedSpec(GroundSet(5, 3), {{2, 3}, {4, 1}}), MixedSpec(GroundSet(4, 4), {{1, 3}, {3, 0}, {0, 4}}),
      MixedSpec(GroundSet(3, 5), {{1, 4}, {3, 2}}), MixedSpec(GroundSet(4, 4), {{3, 0}, {0, 2}}),
  };
  for (const auto& spec : spots)
    v.expect(closed_betti_table(spec, field).same_entries(hochster_betti(make_mixed(spec), field)),
             detail::describe(spec) + ": spot check at n+m=8");
  if (!field.is_rationals()) return;
  // brute-force induced-subcomplex homology as an outside referee on small grounds
  detail::for_each_dual_shape(5, [&](int, MixedSpec spec) {
    const int vertices = spec.ground().size();
    const auto brute = oracle::betti_of_ideal(sorted(make_mixed(spec).supports()), vertices);
    const BettiTable closed = closed_betti_table(spec);
    std::map<std::pair<int, int>, std::uint64_t> got;
    for (const auto& [key, value] : closed.entries())
      if (key.first >= 1) got[{key.first - 1, key.second}] = value;
    v.expect(got == brute, detail::describe(spec) + ": closed table differs from brute force");
  });
}

void specific_tables(Verdict& v) {
  const FieldSpec q = FieldSpec::rationals();
  const MixedSpec a(GroundSet(4, 0), {{2, 0}});
  const MixedSpec b(GroundSet(2, 2), {{1, 1}});
  for (const BettiTable& t : {closed_betti_table(a), hochster_betti(make_mixed(a), q)}) {
    v.expect(t.ideal_at(0, 2) == 6 && t.ideal_at(1, 3) == 8 && t.ideal_at(2, 4) == 3 && t.entries().size() == 4,
             "I_2 in four variables is not (6, 8, 3)");
  }
  for (const BettiTable& t : {closed_betti_table(b), hochster_betti(make_mixed(b), q)}) {
    v.expect(t.ideal_at(0, 2) == 4 && t.ideal_at(1, 3) == 4 && t.ideal_at(2, 4) == 1 && t.entries().size() == 4,
             "I_1J_1 in 2+2 variables is not (4, 4, 1)");
  }
}

void cm_and_type(Verdict& v, const FieldSpec& field) {
  const auto opt = options(7, field);
  v.absorb({verify_cm_classification(opt)});
  v.absorb(verify_types(opt));
  for (auto [n, m, expected] : {std::tuple{2, 2, 3u}, {2, 3, 4u}, {3, 3, 5u}}) {
    const MixedSpec s(GroundSet(n, m), {{n - 1, m}, {n, m - 1}});
    v.expect(cm_type(make_mixed(s), field) == expected && closed_type(s) == expected,
             "type of " + detail::describe(s));
  }
  for (int n = 1; n <= 7; ++n)
    for (int q = 1; q <= n; ++q)
      v.expect(cm_type(make_mixed(MixedSpec(GroundSet(n, 0), {{q, 0}})), field) == oracle::choose(n - 1, n - q),
               "type of I_" + std::to_string(q) + " with n=" + std::to_string(n));
}

void random_cross_checks(Verdict& v) {
  std::mt19937_64 rng(1234567);
  const FieldSpec q = FieldSpec::rationals();
  for (int trial = 0; trial < 500; ++trial) {
    const int vertices = 1 + static_cast<int>(rng() % 8);
    const int n = static_cast<int>(rng() % static_cast<unsigned>(vertices + 1));
    const GroundSet g(n, vertices - n);
    const auto gens = oracle::random_gens(rng, vertices);
    const Ideal ideal = minimalize(g, std::span<const Mask>(gens));
    const BettiTable table = hochster_betti(ideal, q);
    const std::string tag = "random ideal #" + std::to_string(trial);
    v.expect(k_polynomial(table) == hilbert_numerator(ideal), tag + ": K-polynomial != Hilbert numerator");
    v.expect(dual(dual(ideal)) == ideal, tag + ": dual is not an involution");
    if (vertices <= 6) v.expect(table.same_entries(induced_subcomplex_betti(ideal, q)), tag + ": oracles disagree");
  }
}

void kernel_law(Verdict& v) {
  for (int q = 1; q <= 9; ++q)
    for (int i = 0; q + i <= 9; ++i) {
      if (q + i < 2) continue;
      // a link in the dual complex of I_q: all i-subsets of q+i vertices
      const int vertices = q + i;
      std::vector<Mask> facets;
      for_each_k_subset(vertices, i, 0, [&](Mask s) { facets.push_back(s); });
      const auto h = reduced_homology_dims(Complex::from_faces(GroundSet(vertices, 0), facets), FieldSpec::rationals());
      bool ok = h.size() == static_cast<std::size_t>(i + 1) && h.back() == oracle::choose(q + i - 1, i);
      for (std::size_t k = 0; k + 1 < h.size(); ++k) ok = ok && h[k] == 0;
      v.expect(ok, "truncated simplex q=" + std::to_string(q) + " i=" + std::to_string(i));
    }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria = {
      {"1 duality sweep, n+m <= 7", duality},
      {"2 Betti sweep over the rationals, n+m <= 7 plus n+m = 8 spot checks",
       [](Verdict& v) { betti_sweep(v, FieldSpec::rationals()); }},
      {"3 I_2 in 4 variables gives (6,8,3); I_1J_1 in 2+2 gives (4,4,1)", specific_tables},
      {"4 products I_qJ_r have linear resolutions",
       [](Verdict& v) { v.absorb({verify_linearity(options(7, FieldSpec::rationals()))}); }},
      {"5 CM classification and type, n+m <= 7", [](Verdict& v) { cm_and_type(v, FieldSpec::rationals()); }},
      {"6 Gorenstein census, n+m <= 7",
       [](Verdict& v) { v.absorb({verify_gorenstein(options(7, FieldSpec::rationals()))}); }},
      {"7 random cross-checks: K-polynomial, double dual, two Hochster forms", random_cross_checks},
      {"8 truncated simplex homology, 2 <= q+i <= 9", kernel_law},
      {"9 criteria 2-5 over GF(2) and GF(32003)",
       [](Verdict& v) {
         for (const auto& field : {FieldSpec::prime(2), FieldSpec::prime(32003)}) {
           betti_sweep(v, field);
           v.absorb({verify_linearity(options(7, field))});
           cm_and_type(v, field);
         }
       }},
  };
  bool all = true;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      check(v);
    } catch (const std::exception& e) {
      v.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (v.ok ? "PASS " : "FAIL ") << name;
    std::cout << " [" << std::fixed << std::setprecision(2) << secs << "s]";
    if (!v.ok) std::cout << " -- " << v.notes.str();
    std::cout << '\n';
    all = all && v.ok;
  }
  return all ? 0 : 1;
}
