#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "sqfree/alexander.hpp"
#include "sqfree/betti.hpp"
#include "sqfree/cm.hpp"
#include "sqfree/expr.hpp"

namespace sqfree {

/// Outcome of one family of closed-form checks.
struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> samples;  // first few failure descriptions

  bool passed() const noexcept { return failures == 0; }
};

struct VerifyOptions {
  int max_vertices = 7;
  FieldSpec field = FieldSpec::rationals();
  unsigned jobs = 1;
};

namespace detail {

using Case = std::function<std::optional<std::string>()>;

/// Runs cases on `jobs` threads; results are collected by case index so the
/// report does not depend on scheduling.
inline CheckResult run_cases(std::string name, const std::vector<Case>& cases, unsigned jobs) {
  std::vector<std::optional<std::string>> results(cases.size());
  auto worker = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t k = begin; k < cases.size(); k += stride) {
      try {
        results[k] = cases[k]();
      } catch (const std::exception& e) {
        results[k] = std::string("exception: ") + e.what();
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(cases.size(), 1))));
  if (jobs == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker, w, jobs);
    for (auto& t : pool) t.join();
  }
  CheckResult out{std::move(name), cases.size(), 0, {}};
  for (const auto& r : results) {
    if (!r) continue;
    ++out.failures;
    if (out.samples.size() < 5) out.samples.push_back(*r);
  }
  return out;
}

inline std::string describe(const MixedSpec& spec) {
  return format_expr(spec) + " (n=" + std::to_string(spec.ground().n()) + ", m=" + std::to_string(spec.ground().m()) +
         ")";
}

/// Calls f(n, m) for every ground set with n+m <= max and the given minimum block sizes.
template <class F>
void for_each_ground(int max_vertices, int min_n, int min_m, F&& f) {
  for (int n = min_n; n <= max_vertices; ++n)
    for (int m = min_m; n + m <= max_vertices; ++m)
      if (n + m >= 1) f(n, m);
}

/// Every spec in the four families with closed duals, as (family, spec).
template <class F>
void for_each_dual_shape(int max_vertices, F&& f) {
  for_each_ground(max_vertices, 1, 0, [&](int n, int m) {
    const GroundSet g(n, m);
    for (int q = 1; q <= n; ++q) f(0, MixedSpec(g, {{q, 0}}));
    for (int q = 1; q <= n; ++q)
      for (int r = 1; r <= m; ++r) {
        f(1, MixedSpec(g, {{q, 0}, {0, r}}));
        f(2, MixedSpec(g, {{q, r}}));
      }
    for (int q = 1; q <= n; ++q)
      for (int s = q + 1; s <= n; ++s)
        for (int t = 1; t <= m; ++t)
          for (int r = t + 1; r <= m; ++r) f(3, MixedSpec(g, {{q, r}, {s, t}}));
  });
}

inline std::optional<std::string> compare_tables(const MixedSpec& spec, const BettiTable& closed,
                                                 const BettiTable& oracle) {
  if (closed.same_entries(oracle)) return std::nullopt;
  return describe(spec) + ": closed table differs from the oracle";
}

}  // namespace detail

/// make_mixed(closed_dual(spec)) == dual(make_mixed(spec)) for all four dual families.
inline std::vector<CheckResult> verify_duals(const VerifyOptions& opt) {
  std::vector<detail::Case> buckets[4];
  detail::for_each_dual_shape(opt.max_vertices, [&](int family, MixedSpec spec) {
    buckets[family].push_back([spec]() -> std::optional<std::string> {
      if (make_mixed(closed_dual(spec)) == dual(make_mixed(spec))) return std::nullopt;
      return detail::describe(spec) + ": closed dual " + format_expr(closed_dual(spec)) + " is wrong";
    });
  });
  return {
      detail::run_cases("dual of I_q", buckets[0], opt.jobs),
      detail::run_cases("dual of I_q + J_r", buckets[1], opt.jobs),
      detail::run_cases("dual of I_qJ_r", buckets[2], opt.jobs),
      detail::run_cases("dual of I_qJ_r + I_sJ_t", buckets[3], opt.jobs),
  };
}

/// Closed Betti formulas against the Hochster oracle, entrywise and through
/// the total-count operations.
inline std::vector<CheckResult> verify_betti(const VerifyOptions& opt) {
  const FieldSpec field = opt.field;
  std::vector<detail::Case> power, product, two, dual_two;

  detail::for_each_ground(opt.max_vertices, 1, 0, [&](int n, int m) {
    const GroundSet g(n, m);
    for (int q = 1; q <= n; ++q) {
      const MixedSpec spec(g, {{q, 0}});
      power.push_back([spec, n, q, field]() -> std::optional<std::string> {
        const BettiTable oracle = hochster_betti(make_mixed(spec), field);
        for (int i = 0; i <= spec.ground().size(); ++i)
          if (closed_betti_Iq(n, q, i) != oracle.ideal_at(i, q + i) || oracle.ideal_total(i) != oracle.ideal_at(i, q + i))
            return detail::describe(spec) + ": beta_" + std::to_string(i) + " mismatch";
        return detail::compare_tables(spec, closed_betti_table(spec, field), oracle);
      });
    }
  });

  detail::for_each_ground(opt.max_vertices, 0, 0, [&](int n, int m) {
    const GroundSet g(n, m);
    for (int q = 0; q <= n; ++q)
      for (int r = 0; r <= m; ++r) {
        if (q == 0 && r == 0) continue;
        if (r == 0) continue;  // covered by the I_q family
        const MixedSpec spec(g, {{q, r}});
        product.push_back([spec, n, m, q, r, field]() -> std::optional<std::string> {
          const BettiTable oracle = hochster_betti(make_mixed(spec), field);
          for (int i = 0; i <= spec.ground().size(); ++i)
            if (closed_betti_IqJr(n, m, q, r, i) != oracle.ideal_at(i, q + r + i) ||
                oracle.ideal_total(i) != oracle.ideal_at(i, q + r + i))
              return detail::describe(spec) + ": beta_" + std::to_string(i) + " mismatch";
          return detail::compare_tables(spec, closed_betti_table(spec, field), oracle);
        });
      }
    for (int q = 0; q <= n; ++q)
      for (int s = q + 1; s <= n; ++s)
        for (int t = 0; t <= m; ++t)
          for (int r = t + 1; r <= m; ++r) {
            const MixedSpec spec(g, {{q, r}, {s, t}});
            two.push_back([spec, n, m, q, r, s, t, field]() -> std::optional<std::string> {
              const BettiTable oracle = hochster_betti(make_mixed(spec), field);
              for (int i = 0; i <= spec.ground().size(); ++i)
                if (closed_betti_mixed(n, m, q, r, s, t, i) != oracle.ideal_total(i))
                  return detail::describe(spec) + ": beta_" + std::to_string(i) + " mismatch";
              return detail::compare_tables(spec, closed_betti_table(spec, field), oracle);
            });
            if (q >= 1 && t >= 1) {
              const MixedSpec dual_spec(g, {{s, 0}, {q, t}, {0, r}});
              dual_two.push_back([dual_spec, n, m, q, r, s, t, field]() -> std::optional<std::string> {
                const BettiTable oracle = hochster_betti(make_mixed(dual_spec), field);
                for (int i = 0; i <= dual_spec.ground().size(); ++i)
                  if (closed_betti_dual_mixed(n, m, q, r, s, t, i) != oracle.ideal_total(i))
                    return detail::describe(dual_spec) + ": beta_" + std::to_string(i) + " mismatch";
                return detail::compare_tables(dual_spec, closed_betti_table(dual_spec, field), oracle);
              });
            }
          }
  });

  return {
      detail::run_cases("betti of I_q", power, opt.jobs),
      detail::run_cases("betti of I_qJ_r", product, opt.jobs),
      detail::run_cases("betti of I_qJ_r + I_sJ_t", two, opt.jobs),
      detail::run_cases("betti of I_s + I_qJ_t + J_r", dual_two, opt.jobs),
  };
}

/// Oracle tables of I_q and I_qJ_r sit on the single strand j = d + i.
inline CheckResult verify_linearity(const VerifyOptions& opt) {
  std::vector<detail::Case> cases;
  const FieldSpec field = opt.field;
  detail::for_each_ground(opt.max_vertices, 0, 0, [&](int n, int m) {
    const GroundSet g(n, m);
    for (int q = 0; q <= n; ++q)
      for (int r = 0; r <= m; ++r) {
        if (q == 0 && r == 0) continue;
        const MixedSpec spec(g, {{q, r}});
        cases.push_back([spec, q, r, field]() -> std::optional<std::string> {
          if (is_linear_resolution(hochster_betti(make_mixed(spec), field), q + r)) return std::nullopt;
          return detail::describe(spec) + ": resolution is not linear";
        });
      }
  });
  return detail::run_cases("linear resolution of I_qJ_r", cases, opt.jobs);
}

namespace detail {

/// Every spec in the four Cohen-Macaulay families. I_q is enumerated with
/// and without y-variables unless `x_only_powers` is set.
template <class F>
void for_each_cm_shape(int max_vertices, bool x_only_powers, F&& f) {
  for_each_ground(max_vertices, 1, 0, [&](int n, int m) {
    const GroundSet g(n, m);
    if (!x_only_powers || m == 0)
      for (int q = 1; q <= n; ++q) f(CmShape::PowerX, MixedSpec(g, {{q, 0}}));
    for (int q = 1; q <= n; ++q)
      for (int r = 1; r <= m; ++r) f(CmShape::Product, MixedSpec(g, {{q, r}}));
    for (int q = 1; q <= n; ++q)
      for (int s = q + 1; s <= n; ++s)
        for (int r = 1; r <= m; ++r) f(CmShape::ProductPlusPower, MixedSpec(g, {{q, r}, {s, 0}}));
    for (int q = 1; q <= n; ++q)
      for (int s = q + 1; s <= n; ++s)
        for (int t = 1; t <= m; ++t)
          for (int r = t + 1; r <= m; ++r) f(CmShape::TwoProducts, MixedSpec(g, {{q, r}, {s, t}}));
  });
}

}  // namespace detail

/// classify_cm against depth == dim from the oracle, plus the dimension law
/// on the Cohen-Macaulay members.
inline CheckResult verify_cm_classification(const VerifyOptions& opt) {
  std::vector<detail::Case> cases;
  const FieldSpec field = opt.field;
  detail::for_each_cm_shape(opt.max_vertices, false, [&](CmShape, MixedSpec spec) {
    cases.push_back([spec, field]() -> std::optional<std::string> {
      const Ideal ideal = make_mixed(spec);
      const bool predicted = classify_cm(spec);
      if (predicted != is_cm(ideal, hochster_betti(ideal, field)))
        return detail::describe(spec) + ": classification says " + (predicted ? "CM" : "not CM") + ", oracle disagrees";
      if (predicted && closed_dim(spec) != krull_dim(ideal))
        return detail::describe(spec) + ": dimension " + std::to_string(krull_dim(ideal)) + " != " +
               std::to_string(closed_dim(spec));
      return std::nullopt;
    });
  });
  return detail::run_cases("cm classification", cases, opt.jobs);
}

/// closed_type against the last Betti number, per family.
inline std::vector<CheckResult> verify_types(const VerifyOptions& opt) {
  std::vector<detail::Case> buckets[4];
  const FieldSpec field = opt.field;
  detail::for_each_cm_shape(opt.max_vertices, false, [&](CmShape shape, MixedSpec spec) {
    if (!classify_cm(spec)) return;
    buckets[static_cast<int>(shape)].push_back([spec, field]() -> std::optional<std::string> {
      const Ideal ideal = make_mixed(spec);
      const auto oracle = cm_type(ideal, hochster_betti(ideal, field));
      if (oracle == closed_type(spec)) return std::nullopt;
      return detail::describe(spec) + ": type " + std::to_string(oracle) + " != " + std::to_string(closed_type(spec));
    });
  });
  return {
      detail::run_cases("type of I_q", buckets[0], opt.jobs),
      detail::run_cases("type of I_qJ_r", buckets[1], opt.jobs),
      detail::run_cases("type of I_qJ_r + I_s", buckets[2], opt.jobs),
      detail::run_cases("type of I_qJ_r + I_sJ_t", buckets[3], opt.jobs),
  };
}

/// The Gorenstein members are exactly I_n and I_1 in K[x] and I_nJ_m.
inline CheckResult verify_gorenstein(const VerifyOptions& opt) {
  std::vector<detail::Case> cases;
  const FieldSpec field = opt.field;
  detail::for_each_cm_shape(opt.max_vertices, true, [&](CmShape shape, MixedSpec spec) {
    cases.push_back([spec, shape, field]() -> std::optional<std::string> {
      const int n = spec.ground().n(), m = spec.ground().m();
      const Term t0 = spec.terms()[0];
      const bool expected = (shape == CmShape::PowerX && (t0.q == n || t0.q == 1)) ||
                            (shape == CmShape::Product && t0.q == n && t0.r == m);
      const Ideal ideal = make_mixed(spec);
      const bool actual = is_gorenstein(ideal, hochster_betti(ideal, field));
      if (actual == expected) return std::nullopt;
      return detail::describe(spec) + (actual ? ": Gorenstein outside the three families" : ": expected Gorenstein");
    });
  });
  return detail::run_cases("gorenstein families", cases, opt.jobs);
}

/// Every closed-form family, in a fixed order.
inline std::vector<CheckResult> verify_all(const VerifyOptions& opt) {
  std::vector<CheckResult> out = verify_duals(opt);
  for (auto& r : verify_betti(opt)) out.push_back(std::move(r));
  out.push_back(verify_linearity(opt));
  out.push_back(verify_cm_classification(opt));
  for (auto& r : verify_types(opt)) out.push_back(std::move(r));
  out.push_back(verify_gorenstein(opt));
  return out;
}

}  // namespace sqfree
