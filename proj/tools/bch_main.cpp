// bch: exact bicomplex Horadam sequences and identity verification.
//
// Subcommands:
//   term    print BH_n
//   gf      print the generating function numerator, denominator and series
//   verify  sweep one identity (or the whole catalog) and report verdicts
//   bench   time the evaluation strategies and count ring multiplications
//
// Exit codes: 0 success / all identities hold, 1 identity failure or
// strategy disagreement, 2 usage error.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <bch/bch.hpp>

namespace {

using bch::Bicomplex;
using bch::EvalStrategy;
using bch::HoradamParams;
using bch::IdentityId;
using bch::IdentityReport;
using bch::Rational;
using bch::SweepBounds;
using BC = Bicomplex<Rational>;

struct ParamFlags {
  std::string preset;
  std::string a, b, p, q;

  bool explicit_any() const {
    return !preset.empty() || !a.empty() || !b.empty() || !p.empty() || !q.empty();
  }

  // Resolves to concrete params; `fallback` applies when nothing was given.
  HoradamParams resolve(const HoradamParams& fallback) const {
    if (!preset.empty()) {
      const auto params = bch::preset_by_name(preset);
      if (!params) throw CLI::ValidationError("--preset", "unknown preset: " + preset);
      return *params;
    }
    if (a.empty() && b.empty() && p.empty() && q.empty()) return fallback;
    if (a.empty() || b.empty() || p.empty() || q.empty())
      throw CLI::ValidationError("params", "--a, --b, --p, --q must be given together");
    return {Rational::from_string(a), Rational::from_string(b),
            Rational::from_string(p), Rational::from_string(q)};
  }
};

void add_param_flags(CLI::App* cmd, ParamFlags& flags) {
  auto* preset = cmd->add_option("--preset", flags.preset,
                                 "Sequence preset: fibonacci, lucas or pell");
  cmd->add_option("--a", flags.a, "w_0, as 'num' or 'num/den'")->excludes(preset);
  cmd->add_option("--b", flags.b, "w_1")->excludes(preset);
  cmd->add_option("--p", flags.p, "recurrence coefficient of w_{n-1}")->excludes(preset);
  cmd->add_option("--q", flags.q, "recurrence coefficient of w_{n-2}")->excludes(preset);
}

struct OutputFlags {
  std::string format = "pretty";
  std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputFlags& flags) {
  cmd->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"pretty", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", flags.out_path,
                  "Also write the output bytes to this file");
}

// Prints to stdout and mirrors the same bytes to --out when given.
int emit(const std::string& text, const OutputFlags& flags) {
  std::cout << text;
  if (!flags.out_path.empty()) {
    std::ofstream file(flags.out_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write " << flags.out_path << "\n";
      return 2;
    }
    file << text;
  }
  return 0;
}

std::string csv_row(const BC& b) {
  return b.w().to_string() + "," + b.x().to_string() + "," + b.y().to_string() +
         "," + b.z().to_string();
}

std::string params_pretty(const HoradamParams& params) {
  return "a=" + params.a.to_string() + " b=" + params.b.to_string() +
         " p=" + params.p.to_string() + " q=" + params.q.to_string();
}

// ---------------------------------------------------------------- term ----

struct TermArgs {
  ParamFlags params;
  OutputFlags output;
  long long n = 0;
  std::string strategy = "matrix";
};

int run_term(const TermArgs& args) {
  const HoradamParams params = args.params.resolve(HoradamParams::fibonacci());
  const auto strategy = bch::strategy_by_name(args.strategy);
  if (!strategy) {
    std::cerr << "error: unknown strategy: " << args.strategy << "\n";
    return 2;
  }
  const BC value = bch::bh_term(args.n, params, *strategy);

  std::string text;
  if (args.output.format == "json") {
    bch::json j{{"n", args.n}, {"coeffs", bch::to_json(value)}};
    text = j.dump() + "\n";
  } else if (args.output.format == "csv") {
    text = "n,1,i,j,k\n" + std::to_string(args.n) + "," + csv_row(value) + "\n";
  } else {
    text = bch::to_string(value) + "\n";
  }
  return emit(text, args.output);
}

// ------------------------------------------------------------------ gf ----

struct GfArgs {
  ParamFlags params;
  OutputFlags output;
  long long order = 0;
};

int run_gf(const GfArgs& args) {
  const HoradamParams params = args.params.resolve(HoradamParams::fibonacci());
  const auto [n0, n1] = bch::gf_numerator(params);
  const auto coeffs = bch::gf_expand(params, static_cast<std::size_t>(args.order));

  std::string text;
  if (args.output.format == "json") {
    bch::json j{{"params", bch::to_json(params)},
                {"numerator", bch::json::array({bch::to_json(n0), bch::to_json(n1)})},
                {"denominator", bch::json::array({"1", (-params.p).to_string(),
                                                  (-params.q).to_string()})},
                {"coefficients", bch::json::array()}};
    for (const auto& c : coeffs) j["coefficients"].push_back(bch::to_json(c));
    text = j.dump() + "\n";
  } else if (args.output.format == "csv") {
    std::ostringstream os;
    os << "part,index,1,i,j,k\n";
    os << "numerator,0," << csv_row(n0) << "\n";
    os << "numerator,1," << csv_row(n1) << "\n";
    os << "denominator,0,1,,,\n";
    os << "denominator,1," << (-params.p).to_string() << ",,,\n";
    os << "denominator,2," << (-params.q).to_string() << ",,,\n";
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      os << "series," << i << "," << csv_row(coeffs[i]) << "\n";
    text = os.str();
  } else {
    std::ostringstream os;
    os << "g(t) = (BH_0 + (BH_1 - p*BH_0)*t) / (1 - p*t - q*t^2)\n";
    os << "numerator[0] = " << bch::to_string(n0) << "\n";
    os << "numerator[1] = " << bch::to_string(n1) << "\n";
    os << "denominator  = 1 - (" << params.p << ")*t - (" << params.q << ")*t^2\n";
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      os << "c[" << i << "] = " << bch::to_string(coeffs[i]) << "\n";
    text = os.str();
  }
  return emit(text, args.output);
}

// -------------------------------------------------------------- verify ----

struct VerifyArgs {
  ParamFlags params;
  OutputFlags output;
  std::string identity = "all";
  std::optional<long> n_min, n_max, r_min, r_max, m_min, m_max;
};

SweepBounds bounds_for(IdentityId id, const VerifyArgs& args) {
  SweepBounds bounds = bch::default_bounds(id);
  if (args.n_min) bounds.n_min = *args.n_min;
  if (args.n_max) bounds.n_max = *args.n_max;
  const auto ar = bch::arity(id);
  if (ar == bch::IdentityArity::NR) {
    if (args.r_min) bounds.second_min = *args.r_min;
    if (args.r_max) bounds.second_max = *args.r_max;
  } else if (ar == bch::IdentityArity::NM) {
    if (args.m_min) bounds.second_min = *args.m_min;
    if (args.m_max) bounds.second_max = *args.m_max;
  }
  return bounds;
}

std::string report_pretty(const IdentityReport& report) {
  std::ostringstream os;
  const auto ar = bch::arity(report.id);
  os << bch::identity_name(report.id) << "  [" << params_pretty(report.params)
     << "]  n in [" << report.bounds.n_min << ", " << report.bounds.n_max << "]";
  if (ar != bch::IdentityArity::N)
    os << ", " << (ar == bch::IdentityArity::NR ? "r" : "m") << " in ["
       << report.bounds.second_min << ", " << report.bounds.second_max << "]";
  os << "\n  verdict: " << report.verdict();
  if (!report.holds()) os << " (" << report.counterexamples.size() << " counterexamples)";
  os << "\n";
  const std::size_t shown = std::min<std::size_t>(report.counterexamples.size(), 5);
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& c = report.counterexamples[i];
    os << "  n=" << c.indices.n;
    if (c.indices.second)
      os << (ar == bch::IdentityArity::NR ? " r=" : " m=") << *c.indices.second;
    os << ": lhs = " << bch::to_string(c.lhs) << " | rhs = " << bch::to_string(c.rhs)
       << " | diff = " << bch::to_string(c.difference) << "\n";
  }
  if (report.counterexamples.size() > shown)
    os << "  ... " << (report.counterexamples.size() - shown) << " more\n";
  return os.str();
}

int run_verify(const VerifyArgs& args) {
  std::vector<IdentityId> ids;
  if (args.identity == "all") {
    ids.assign(bch::all_identities.begin(), bch::all_identities.end());
  } else {
    const auto id = bch::identity_by_name(args.identity);
    if (!id) {
      std::cerr << "error: unknown identity: " << args.identity << "\n";
      return 2;
    }
    ids.push_back(*id);
  }

  // Horadam-family identities default to the Lucas preset; preset-pinned
  // identities refuse explicitly different params instead of generalizing.
  const HoradamParams user_params = args.params.resolve(HoradamParams::lucas());

  std::vector<IdentityReport> reports;
  reports.reserve(ids.size());
  for (IdentityId id : ids) {
    const auto pin = bch::pinned_params(id);
    HoradamParams params = pin ? *pin : user_params;
    if (pin && args.params.explicit_any() && !(user_params == *pin)) {
      if (ids.size() == 1) {
        std::cerr << "error: " << bch::identity_name(id)
                  << " is specific to the Fibonacci/Lucas presets; it cannot be "
                     "verified with other params\n";
        return 2;
      }
      // 'all' with explicit params: pinned identities keep their presets.
    }
    reports.push_back(bch::sweep_verify(id, params, bounds_for(id, args)));
  }

  std::string text;
  if (args.output.format == "json") {
    if (reports.size() == 1) {
      text = bch::to_json(reports.front()).dump() + "\n";
    } else {
      bch::json arr = bch::json::array();
      for (const auto& r : reports) arr.push_back(bch::to_json(r));
      text = arr.dump() + "\n";
    }
  } else if (args.output.format == "csv") {
    std::ostringstream os;
    os << "identity,a,b,p,q,n_min,n_max,second_min,second_max,verdict,counterexamples\n";
    for (const auto& r : reports) {
      os << bch::identity_name(r.id) << "," << r.params.a << "," << r.params.b << ","
         << r.params.p << "," << r.params.q << "," << r.bounds.n_min << ","
         << r.bounds.n_max << "," << r.bounds.second_min << "," << r.bounds.second_max
         << "," << r.verdict() << "," << r.counterexamples.size() << "\n";
    }
    text = os.str();
  } else {
    std::ostringstream os;
    for (const auto& r : reports) os << report_pretty(r);
    text = os.str();
  }

  const int rc = emit(text, args.output);
  if (rc != 0) return rc;
  for (const auto& r : reports)
    if (!r.holds()) return 1;
  return 0;
}

// --------------------------------------------------------------- bench ----

struct BenchArgs {
  ParamFlags params;
  OutputFlags output;
  long long n = 0;
  std::string strategies = "iterative,matrix";
};

struct BenchRow {
  EvalStrategy strategy{};
  long long wall_us = 0;
  std::uint64_t rational_mults = 0;
  std::uint64_t matrix_mults = 0;
  BC value;
};

int run_bench(const BenchArgs& args) {
  const HoradamParams params = args.params.resolve(HoradamParams::fibonacci());

  std::vector<EvalStrategy> strategies;
  std::stringstream names(args.strategies);
  for (std::string name; std::getline(names, name, ',');) {
    const auto s = bch::strategy_by_name(name);
    if (!s) {
      std::cerr << "error: unknown strategy: " << name << "\n";
      return 2;
    }
    strategies.push_back(*s);
  }
  if (strategies.empty()) {
    std::cerr << "error: --strategies is empty\n";
    return 2;
  }

  std::vector<BenchRow> rows;
  for (EvalStrategy s : strategies) {
    BenchRow row;
    row.strategy = s;
    bch::reset_rational_mul_count();
    bch::reset_matrix_mul_count();
    const auto start = std::chrono::steady_clock::now();
    row.value = bch::bh_term(args.n, params, s);
    const auto stop = std::chrono::steady_clock::now();
    row.wall_us =
        std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
    row.rational_mults = bch::rational_mul_count();
    row.matrix_mults = bch::matrix_mul_count();
    rows.push_back(std::move(row));
  }

  // all strategies must agree before any timing is reported
  bool agree = true;
  for (const auto& row : rows) agree = agree && row.value == rows.front().value;
  if (!agree)
    std::cerr << "error: strategies disagree on the value of BH_" << args.n << "\n";

  std::string text;
  if (args.output.format == "json") {
    bch::json j{{"n", args.n},
                {"params", bch::to_json(params)},
                {"agree", agree},
                {"results", bch::json::array()}};
    for (const auto& row : rows)
      j["results"].push_back({{"strategy", bch::strategy_name(row.strategy)},
                              {"wall_us", row.wall_us},
                              {"rational_mults", row.rational_mults},
                              {"matrix_mults", row.matrix_mults}});
    text = j.dump() + "\n";
  } else if (args.output.format == "csv") {
    std::ostringstream os;
    os << "strategy,wall_us,rational_mults,matrix_mults,agree\n";
    for (const auto& row : rows)
      os << bch::strategy_name(row.strategy) << "," << row.wall_us << ","
         << row.rational_mults << "," << row.matrix_mults << ","
         << (agree ? "true" : "false") << "\n";
    text = os.str();
  } else {
    std::ostringstream os;
    os << "BH_" << args.n << " [" << params_pretty(params) << "], strategies "
       << (agree ? "agree" : "DISAGREE") << "\n";
    os << "strategy    wall_us      rational_mults  matrix_mults\n";
    for (const auto& row : rows) {
      os << bch::strategy_name(row.strategy);
      for (std::size_t pad = bch::strategy_name(row.strategy).size(); pad < 12; ++pad)
        os << ' ';
      os << row.wall_us << "\t" << row.rational_mults << "\t" << row.matrix_mults
         << "\n";
    }
    text = os.str();
  }

  const int rc = emit(text, args.output);
  if (rc != 0) return rc;
  return agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact bicomplex Horadam sequences: terms, generating functions,\n"
               "identity verification and strategy benchmarks."};
  app.require_subcommand(1);

  TermArgs term_args;
  auto* term = app.add_subcommand("term", "Print BH_n");
  term->add_option("-n,--n", term_args.n, "Term index (negative needs q != 0)")
      ->required();
  term->add_option("--strategy", term_args.strategy,
                   "iterative, matrix, binet or gf")
      ->check(CLI::IsMember({"iterative", "matrix", "binet", "gf"}))
      ->capture_default_str();
  add_param_flags(term, term_args.params);
  add_output_flags(term, term_args.output);

  GfArgs gf_args;
  auto* gf = app.add_subcommand("gf", "Print the generating function and its series");
  gf->add_option("--order", gf_args.order, "Highest series coefficient to print")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_param_flags(gf, gf_args.params);
  add_output_flags(gf, gf_args.output);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "Check closed-form identities against direct evaluation");
  verify->add_option("--identity", verify_args.identity,
                     "Identity name or 'all' (default bounds: n <= 100, r <= 5, "
                     "m <= 30)")
      ->capture_default_str();
  verify->add_option("--n-min", verify_args.n_min, "Lowest n to sweep");
  verify->add_option("--n-max", verify_args.n_max, "Highest n to sweep");
  verify->add_option("--r-min", verify_args.r_min, "Lowest r (Catalan identities)");
  verify->add_option("--r-max", verify_args.r_max, "Highest r (Catalan identities)");
  verify->add_option("--m-min", verify_args.m_min, "Lowest m ((n, m) identities)");
  verify->add_option("--m-max", verify_args.m_max, "Highest m ((n, m) identities)");
  add_param_flags(verify, verify_args.params);
  add_output_flags(verify, verify_args.output);

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Time strategies and count multiplications");
  bench->add_option("-n,--n", bench_args.n, "Term index")
      ->required()
      ->check(CLI::NonNegativeNumber);
  bench->add_option("--strategies", bench_args.strategies,
                    "Comma-separated strategy list")
      ->capture_default_str();
  add_param_flags(bench, bench_args.params);
  add_output_flags(bench, bench_args.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*term) return run_term(term_args);
    if (*gf) return run_gf(gf_args);
    if (*verify) return run_verify(verify_args);
    if (*bench) return run_bench(bench_args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    // DegenerateDiscriminant, NegativeIndexUnsupported, IndexOutOfDomain
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
