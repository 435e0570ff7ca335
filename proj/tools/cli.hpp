#pragma once

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sqfree/alexander.hpp"
#include "sqfree/betti.hpp"
#include "sqfree/cm.hpp"
#include "sqfree/expr.hpp"
#include "sqfree/verify.hpp"

namespace sqfree::cli {

using nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Raised for flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IdealArgs {
  int n = -1;
  int m = -1;
  std::string expr;
  std::string gens;
  std::string field = "rat";
  bool json = false;
};

/// The ideal under study, with its symbolic form when it came from an expression.
struct Input {
  Ideal ideal;
  std::optional<MixedSpec> spec;
  FieldSpec field;
};

inline Input load_input(const IdealArgs& args) {
  if (args.expr.empty() == args.gens.empty()) throw UsageError("give exactly one of an expression or --gens");
  const GroundSet g(args.n, args.m);
  const FieldSpec field = FieldSpec::parse(args.field);
  if (!args.expr.empty()) {
    MixedSpec spec = parse_ideal_expr(args.expr, g);
    return {make_mixed(spec), std::move(spec), field};
  }
  const auto monomials = parse_monomial_list(args.gens, g);
  return {minimalize(g, std::span<const Monomial>(monomials)), std::nullopt, field};
}

inline json gens_json(const Ideal& ideal) { return ideal.gen_strings(); }

inline json betti_json(const BettiTable& table) {
  json out = json::object();
  for (const auto& [key, value] : table.entries()) out[std::to_string(key.first)][std::to_string(key.second)] = value;
  return out;
}

/// Macaulay2-style display: columns are homological degrees, rows are j - i.
inline void print_betti(std::ostream& out, const BettiTable& table) {
  const int top = table.max_index();
  int rows = 0;
  for (const auto& [key, value] : table.entries()) rows = std::max(rows, key.second - key.first);
  std::vector<std::string> header{""}, totals{"total:"};
  for (int i = 0; i <= top; ++i) {
    header.push_back(std::to_string(i));
    totals.push_back(std::to_string(table.total(i)));
  }
  std::vector<std::vector<std::string>> grid{header, totals};
  for (int d = 0; d <= rows; ++d) {
    std::vector<std::string> row(static_cast<std::size_t>(top + 2));
    row[0] = std::to_string(d) + ":";
    for (int i = 0; i <= top; ++i) {
      const auto v = table.at(i, i + d);
      row[static_cast<std::size_t>(i + 1)] = v == 0 ? "." : std::to_string(v);
    }
    grid.push_back(std::move(row));
  }
  std::vector<std::size_t> width(static_cast<std::size_t>(top + 2), 0);
  for (const auto& row : grid)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  for (const auto& row : grid) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += ' ';
      line += std::string(width[c] - row[c].size(), ' ') + row[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

/// Everything the single-ideal subcommands report.
struct Report {
  Input input;
  std::string method;
  std::optional<BettiTable> closed;
  std::optional<BettiTable> oracle;
  int pd = 0;
  int depth = 0;
  int dim = 0;
  bool cm = false;
  std::optional<std::uint64_t> type;
  bool gorenstein = false;

  const BettiTable& table() const { return oracle ? *oracle : *closed; }
  std::optional<bool> agree() const {
    if (closed && oracle) return closed->same_entries(*oracle);
    return std::nullopt;
  }
};

inline std::string default_method(const Input& in) {
  if (!in.spec) return "hochster";
  try {
    betti_shape(*in.spec);
    return "closed";
  } catch (const Error&) {
    return "hochster";
  }
}

inline Report build_report(Input in, std::string method) {
  if (method.empty()) method = default_method(in);
  Report rep{std::move(in), method, {}, {}, 0, 0, 0, false, {}, false};
  const Input& input = rep.input;
  if (!input.ideal.is_proper()) throw Error(Errc::NotProper, "the ideal must be proper and nonzero");
  if (method == "closed" || method == "both") {
    if (!input.spec) throw Error(Errc::UnsupportedShape, "closed formulas need a mixed expression, not --gens");
    rep.closed = closed_betti_table(*input.spec, input.field);
  }
  if (method == "hochster" || method == "both") rep.oracle = hochster_betti(input.ideal, input.field);
  const BettiTable& table = rep.table();
  rep.pd = projective_dimension(table);
  rep.depth = depth_of_quotient(table);
  rep.dim = input.spec ? krull_dim(*input.spec) : krull_dim(input.ideal);
  rep.cm = rep.depth == rep.dim;
  if (rep.cm) rep.type = table.total(rep.pd);
  rep.gorenstein = rep.cm && rep.type == 1u;
  return rep;
}

inline json report_json(const Report& rep) {
  const Input& in = rep.input;
  json out;
  out["n"] = in.ideal.ground().n();
  out["m"] = in.ideal.ground().m();
  out["ideal"] = {{"expr", in.spec ? json(format_expr(*in.spec)) : json(nullptr)}, {"gens", gens_json(in.ideal)}};
  out["betti"] = betti_json(rep.table());
  out["pd"] = rep.pd;
  out["depth"] = rep.depth;
  out["dim"] = rep.dim;
  out["cm"] = rep.cm;
  out["type"] = rep.type ? json(*rep.type) : json(nullptr);
  out["gorenstein"] = rep.gorenstein;
  out["field"] = in.field.to_string();
  out["method"] = rep.method;
  const auto agree = rep.agree();
  out["agree"] = agree ? json(*agree) : json(nullptr);
  return out;
}

inline void print_header(std::ostream& out, const Input& in) {
  const GroundSet& g = in.ideal.ground();
  out << "ideal: " << (in.spec ? format_expr(*in.spec) : std::string("(generators)")) << "  (n=" << g.n()
      << ", m=" << g.m() << ", field=" << in.field.to_string() << ")\n";
  out << "generators: " << join(in.ideal.gen_strings(), ", ") << '\n';
}

inline int cmd_dual(const IdealArgs& args, std::ostream& out) {
  Input in = load_input(args);
  const Ideal d = dual(in.ideal);
  std::optional<MixedSpec> closed;
  if (in.spec) {
    try {
      closed = closed_dual(*in.spec);
    } catch (const Error& e) {
      if (e.code() != Errc::UnsupportedShape) throw;
    }
  }
  if (closed && make_mixed(*closed) != d) throw Error(Errc::UnsupportedShape, "closed dual disagrees with the general dual");
  if (args.json) {
    json j = report_json(build_report(in, ""));
    j["dual"] = {{"expr", closed ? json(format_expr(*closed)) : json(nullptr)}, {"gens", gens_json(d)}};
    out << j.dump() << '\n';
    return kExitOk;
  }
  print_header(out, in);
  out << "dual: " << (closed ? format_expr(*closed) : std::string("(no closed form)")) << '\n';
  out << "dual generators: " << join(d.gen_strings(), ", ") << '\n';
  return kExitOk;
}

inline int cmd_betti(const IdealArgs& args, const std::string& method, std::ostream& out) {
  const Report rep = build_report(load_input(args), method);
  if (args.json) {
    out << report_json(rep).dump() << '\n';
    return kExitOk;
  }
  print_header(out, rep.input);
  if (rep.closed) {
    out << "closed:\n";
    print_betti(out, *rep.closed);
  }
  if (rep.oracle) {
    out << "hochster:\n";
    print_betti(out, *rep.oracle);
  }
  if (const auto agree = rep.agree()) out << (*agree ? "EQUAL" : "DIFFER") << '\n';
  return kExitOk;
}

inline int cmd_cm(const IdealArgs& args, const std::string& method, std::ostream& out) {
  const Report rep = build_report(load_input(args), method);
  if (args.json) {
    out << report_json(rep).dump() << '\n';
    return kExitOk;
  }
  print_header(out, rep.input);
  out << "pd: " << rep.pd << "\ndepth: " << rep.depth << "\ndim: " << rep.dim << "\ncm: " << (rep.cm ? "yes" : "no")
      << "\ntype: " << (rep.type ? std::to_string(*rep.type) : std::string("-"))
      << "\ngorenstein: " << (rep.gorenstein ? "yes" : "no") << '\n';
  if (rep.input.spec) {
    try {
      const bool predicted = classify_cm(*rep.input.spec);
      out << "classification: " << (predicted ? "CM" : "not CM");
      if (predicted) out << ", type " << closed_type(*rep.input.spec);
      out << '\n';
    } catch (const Error& e) {
      if (e.code() != Errc::UnsupportedShape) throw;
    }
  }
  return kExitOk;
}

inline int cmd_hilbert(const IdealArgs& args, const std::string& method, std::ostream& out) {
  const Report rep = build_report(load_input(args), method);
  const Polynomial numerator = hilbert_numerator(rep.input.ideal);
  const Polynomial kpoly = k_polynomial(rep.table());
  if (args.json) {
    json j = report_json(rep);
    j["hilbert"] = {{"numerator", numerator.coeffs()}, {"k_polynomial", kpoly.coeffs()}, {"agree", numerator == kpoly}};
    out << j.dump() << '\n';
    return kExitOk;
  }
  print_header(out, rep.input);
  out << "hilbert numerator: " << numerator.to_string() << '\n';
  out << "k-polynomial:      " << kpoly.to_string() << '\n';
  out << (numerator == kpoly ? "EQUAL" : "DIFFER") << '\n';
  return kExitOk;
}

inline int cmd_verify(int max_vertices, const std::string& field, unsigned jobs, bool as_json, std::ostream& out) {
  VerifyOptions opt;
  opt.max_vertices = max_vertices;
  opt.field = FieldSpec::parse(field);
  opt.jobs = jobs;
  const auto results = verify_all(opt);
  const bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed(); });
  if (as_json) {
    json list = json::array();
    for (const auto& r : results)
      list.push_back({{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"samples", r.samples},
                      {"pass", r.passed()}});
    out << json{{"max_vertices", max_vertices}, {"field", opt.field.to_string()}, {"results", list}, {"pass", ok}}.dump()
        << '\n';
  } else {
    for (const auto& r : results) {
      out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases";
      if (!r.passed()) out << ", " << r.failures << " failed";
      out << ")\n";
      for (const auto& s : r.samples) out << "    " << s << '\n';
    }
    out << (ok ? "all checks passed" : "some checks FAILED") << '\n';
  }
  return ok ? kExitOk : kExitDomain;
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Square-free monomial ideals in two blocks of variables: duals, Betti tables, Cohen-Macaulay type"};
  app.require_subcommand(1);

  IdealArgs args;
  std::string method;
  auto add_ideal_flags = [&](CLI::App* sub, bool with_method) {
    sub->add_option("--n", args.n, "number of x-variables")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--m", args.m, "number of y-variables")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("expr", args.expr, "mixed product expression, e.g. \"I2*J1 + I3\"");
    sub->add_option("--gens", args.gens, "explicit generators, e.g. \"x1*x2, y1*y2\"");
    sub->add_option("--field", args.field, "rat, gf2 or gfp:<p>");
    sub->add_flag("--json", args.json, "machine-readable output");
    if (with_method)
      sub->add_option("--method", method, "closed, hochster or both")
          ->check(CLI::IsMember({"closed", "hochster", "both"}));
  };

  auto* dual_cmd = app.add_subcommand("dual", "Alexander dual");
  add_ideal_flags(dual_cmd, false);
  auto* betti_cmd = app.add_subcommand("betti", "graded Betti table of S/I");
  add_ideal_flags(betti_cmd, true);
  auto* cm_cmd = app.add_subcommand("cm", "depth, Cohen-Macaulayness, type");
  add_ideal_flags(cm_cmd, true);
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert series numerator against the K-polynomial");
  add_ideal_flags(hilbert_cmd, true);

  int max_vertices = 7;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string verify_field = "rat";
  bool verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "check every closed form against the oracle");
  verify_cmd->add_option("--max-vertices", max_vertices, "sweep all ground sets with n+m up to this")
      ->check(CLI::Range(1, kOracleLimit));
  verify_cmd->add_option("--field", verify_field, "rat, gf2 or gfp:<p>");
  verify_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--json", verify_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*dual_cmd) return cmd_dual(args, out);
    if (*betti_cmd) return cmd_betti(args, method, out);
    if (*cm_cmd) return cmd_cm(args, method, out);
    if (*hilbert_cmd) return cmd_hilbert(args, method, out);
    if (*verify_cmd) return cmd_verify(max_vertices, verify_field, jobs, verify_json, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace sqfree::cli
