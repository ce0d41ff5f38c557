#include "fqreduce/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "fqreduce/bench.hpp"
#include "fqreduce/carlitz.hpp"
#include "fqreduce/reductions.hpp"
#include "fqreduce/textio.hpp"

namespace fqr {

namespace {

constexpr const char* kFooter =
    "Input is one line \"q=<prime> f=<c0>,...,<cn>\" (ascending coefficients) on stdin or --in.\n"
    "--seed falls back to the FQREDUCE_SEED environment variable, then 0.\n"
    "Exit status: 0 ok, 1 parse or usage error, 2 precondition violated,\n"
    "3 oracle or validation failure (including a factor fallback).";

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::NotPrime:
    case ErrorKind::InsufficientData:
      return kExitUsage;
    case ErrorKind::NotMonic:
    case ErrorKind::NotSquarefree:
    case ErrorKind::BadInput:
    case ErrorKind::TooLarge:
    case ErrorKind::DegenerateDifference:
    case ErrorKind::EmptyRange:
      return kExitPrecondition;
    default:
      return kExitOracle;
  }
}

struct Options {
  std::string in_path;
  std::optional<std::uint64_t> seed;
  std::string via;
  std::string oracle = "independent";
  int m = -1;
  std::uint64_t q = 0;
  int deg = 0;
  std::string problem;
  std::vector<std::uint64_t> q_list;
  std::vector<int> n_list;
  int reps = 3;
  std::string out_path;
};

class Runner {
 public:
  Runner(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err)
      : opt_(opt), in_(in), out_(out), err_(err), rng_(seed()) {}

  int factor_cmd() {
    const Poly f = monic_input();
    const std::string via = opt_.via.empty() ? "reference" : opt_.via;
    Factorization result(f.field());
    bool fallback = false;
    if (via == "reference") {
      result = factor(f, rng_);
    } else {
      OracleSet oracles(oracle_kind(), rng_.child(7).seed());
      for (const auto& sq : squarefree_decompose(f)) {
        Factorization part(f.field());
        if (via == "frobminpoly") {
          FrobReductionDiagnostics diag;
          part = reduce_factor_via_frobminpoly(
              sq.factor, [&](const Poly& a) { return oracles.frob_minpoly(a); }, rng_, &diag);
          fallback = fallback || diag.fallback_used;
        } else {
          part = reduce_factor_via_factordegree(
              sq.factor, [&](const Poly& a) { return oracles.factor_degree(a); }, std::nullopt, rng_);
        }
        result.append(part, sq.multiplicity);
      }
      result.canonicalize();
    }
    for (const auto& fp : result.factors) out_ << format_factor(fp) << '\n';
    if (fallback) {
      err_ << "warning: FallbackUsed, the reduction fell back to the reference engine\n";
      return kExitOracle;
    }
    return kExitOk;
  }

  int factor_degree_cmd() {
    const Poly f = squarefree_input();
    const std::string via = opt_.via.empty() ? "ddf" : opt_.via;
    if (via == "ddf") {
      out_ << "smallest " << factor_degree_ref(f) << '\n';
      return kExitOk;
    }
    if (via == "carlitz") {
      OracleSet oracles(oracle_kind(), rng_.seed());
      const auto r = factor_degree_via_carlitz(f, [&](const Poly& a) { return oracles.carlitz_charpoly(a); });
      out_ << "smallest " << r.degree << ' ' << (r.validated ? "VALIDATED" : "UNVALIDATED") << '\n';
      if (!r.validated) {
        err_ << "error: ValidationFailed, x^(q^" << r.degree << ") - x shares no factor with f\n";
        return kExitOracle;
      }
      return kExitOk;
    }
    const auto r = factor_degree_via_determinant(f, via == "moore" ? DeterminantKind::moore : DeterminantKind::vandermonde);
    out_ << "largest " << r.degree << '\n';
    return kExitOk;
  }

  int frob_minpoly_cmd() {
    const Poly f = squarefree_input();
    out_ << format_poly(frob_minpoly(f, rng_, reference() ? FrobMode::reference : FrobMode::independent)) << '\n';
    return kExitOk;
  }

  int frob_charpoly_cmd() {
    const Poly f = squarefree_input();
    if (reference()) {
      out_ << format_poly(easy_directions(f, EasyTarget::frob_charpoly, rng_)) << '\n';
    } else {
      out_ << format_poly(frob_charpoly_direct(ModCtx(f))) << '\n';
    }
    return kExitOk;
  }

  int carlitz_charpoly_cmd() {
    const Poly f = squarefree_input();
    OracleSet oracles(oracle_kind(), rng_.seed());
    out_ << format_poly(oracles.carlitz_charpoly(f)) << '\n';
    return kExitOk;
  }

  int determinant_cmd(bool vandermonde) {
    const Poly f = squarefree_input();
    if (opt_.m < 0 || opt_.m > f.degree()) {
      throw Error(ErrorKind::BadInput, "--m must lie in [0, deg f]");
    }
    const ModCtx ctx(f);
    const FrobTable frob = FrobTable::consecutive(ctx, static_cast<std::uint64_t>(opt_.m));
    if (!vandermonde) {
      out_ << (moore_zero_test(ctx, opt_.m, frob) ? "ZERO" : "NONZERO") << '\n';
      return kExitOk;
    }
    const Poly v = opt_.m == 0 ? Poly::one(f.field()) : vandermonde_det(ctx, opt_.m, frob);
    out_ << (v.is_zero() ? "ZERO" : "NONZERO") << '\n' << format_poly(v) << '\n';
    return kExitOk;
  }

  int gen_cmd() {
    if (opt_.q == 0 || opt_.deg < 1) throw Error(ErrorKind::BadInput, "gen needs --q and --deg >= 1");
    const PrimeField F(opt_.q);
    out_ << format_poly(random_monic_squarefree(opt_.deg, F, rng_)) << '\n';
    return kExitOk;
  }

  int bench_cmd() {
    BenchConfig cfg{opt_.problem, opt_.q_list, opt_.n_list, opt_.reps, rng_.seed(), oracle_kind()};
    std::ofstream file;
    if (!opt_.out_path.empty()) {
      file.open(opt_.out_path);
      if (!file) throw Error(ErrorKind::ParseError, "cannot open " + opt_.out_path);
    }
    std::ostream& sink = opt_.out_path.empty() ? out_ : file;
    sink << kBenchCsvHeader << '\n';
    std::vector<BenchRecord> records;
    run_bench(cfg, [&](const BenchRecord& r) {
      sink << to_csv_row(r) << '\n';
      records.push_back(r);
    });
    try {
      for (const auto& fit : bench_fit(records)) {
        err_ << "fit q=" << fit.q << std::fixed << std::setprecision(3) << " slope=" << fit.slope
             << " intercept=" << fit.intercept << " r2=" << fit.r2 << " points=" << fit.points << '\n';
      }
    } catch (const Error& e) {
      err_ << "fit skipped: " << e.what() << '\n';
    }
    const bool all_ok = std::all_of(records.begin(), records.end(), [](const BenchRecord& r) { return r.success; });
    return all_ok ? kExitOk : kExitOracle;
  }

  int selftest_cmd() {
    int checked = 0, failures = 0;
    OracleSet oracles(OracleKind::independent, rng_.seed());
    for (auto [p, top] : {std::pair<std::uint64_t, int>{2, 8}, {3, 6}, {5, 4}}) {
      const PrimeField F(p);
      for (int d = 1; d <= top; ++d) {
        for_each_monic(F, d, [&](const Poly& f) {
          ++checked;
          const Factorization expect = trial_factor(f);
          bool ok = factor(f, rng_).factors == expect.factors;
          if (is_squarefree(f)) {
            ok = ok &&
                 reduce_factor_via_frobminpoly(f, [&](const Poly& a) { return oracles.frob_minpoly(a); }, rng_)
                         .factors == expect.factors;
            ok = ok && carlitz_charpoly_direct(f) == carlitz_charpoly_from_factors(expect);
          }
          if (!ok) {
            ++failures;
            err_ << "selftest mismatch: " << format_poly(f) << '\n';
          }
        });
      }
    }
    out_ << "selftest " << (failures ? "FAIL" : "ok") << ' ' << checked - failures << '/' << checked << '\n';
    return failures ? kExitOracle : kExitOk;
  }

 private:
  std::uint64_t seed() const {
    if (opt_.seed) return *opt_.seed;
    if (const char* env = std::getenv("FQREDUCE_SEED")) {
      char* end = nullptr;
      const auto v = std::strtoull(env, &end, 10);
      if (end == env || *end != '\0') throw Error(ErrorKind::ParseError, "FQREDUCE_SEED is not an integer");
      return v;
    }
    return 0;
  }

  bool reference() const { return opt_.oracle == "reference"; }
  OracleKind oracle_kind() const { return reference() ? OracleKind::reference : OracleKind::independent; }

  Poly read_input() {
    std::ifstream file;
    if (!opt_.in_path.empty()) {
      file.open(opt_.in_path);
      if (!file) throw Error(ErrorKind::ParseError, "cannot open " + opt_.in_path);
    }
    std::istream& src = opt_.in_path.empty() ? in_ : file;
    std::string line, found;
    while (std::getline(src, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      if (!found.empty()) throw Error(ErrorKind::ParseError, "expected a single polynomial line");
      found = line;
    }
    if (found.empty()) throw Error(ErrorKind::ParseError, "no input polynomial");
    return parse_poly(found);
  }

  Poly monic_input() {
    Poly f = read_input();
    if (!f.is_monic()) throw Error(ErrorKind::NotMonic, "f must be monic");
    return f;
  }

  Poly squarefree_input() {
    Poly f = monic_input();
    if (f.degree() < 1) throw Error(ErrorKind::BadInput, "f must be nonconstant");
    if (!is_squarefree(f)) throw Error(ErrorKind::NotSquarefree, "f must be squarefree");
    return f;
  }

  const Options& opt_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  Rng rng_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Polynomial factorization over prime fields and its reductions", "fqreduce"};
  app.footer(kFooter);
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--in", opt.in_path, "Read the polynomial from this file instead of stdin");
    sub->add_option("--seed", opt.seed, "Random seed");
  };
  auto add_oracle = [&](CLI::App* sub) {
    sub->add_option("--oracle", opt.oracle, "Oracle backing: reference (factor engine) or independent")
        ->check(CLI::IsMember({"reference", "independent"}));
  };

  auto* factor_sub = app.add_subcommand("factor", "Factor f into monic irreducibles");
  add_common(factor_sub);
  add_oracle(factor_sub);
  factor_sub->add_option("--via", opt.via, "reference, frobminpoly or factordegree")
      ->check(CLI::IsMember({"reference", "frobminpoly", "factordegree"}));

  auto* degree_sub = app.add_subcommand(
      "factor-degree", "Smallest factor degree (ddf, carlitz) or largest (moore, vandermonde); f squarefree");
  add_common(degree_sub);
  add_oracle(degree_sub);
  degree_sub->add_option("--via", opt.via, "ddf, carlitz, moore or vandermonde")
      ->check(CLI::IsMember({"ddf", "carlitz", "moore", "vandermonde"}));

  auto* minpoly_sub = app.add_subcommand("frob-minpoly", "Minimal polynomial of Frobenius on F_q[x]/(f)");
  auto* charpoly_sub = app.add_subcommand("frob-charpoly", "Characteristic polynomial of Frobenius");
  auto* carlitz_sub = app.add_subcommand("carlitz-charpoly", "Characteristic polynomial of the Carlitz action");
  for (auto* sub : {minpoly_sub, charpoly_sub, carlitz_sub}) {
    add_common(sub);
    add_oracle(sub);
  }

  auto* moore_sub = app.add_subcommand("moore-det", "Whether the Moore determinant of (1, x, ..., x^m) vanishes mod f");
  auto* vdm_sub = app.add_subcommand("vandermonde-det", "Vandermonde determinant over S_m: ZERO/NONZERO and residue");
  for (auto* sub : {moore_sub, vdm_sub}) {
    add_common(sub);
    sub->add_option("--m", opt.m, "Matrix parameter, 0 <= m <= deg f")->required();
  }

  auto* gen_sub = app.add_subcommand("gen", "Random monic squarefree polynomial");
  gen_sub->add_option("--q", opt.q, "Prime modulus")->required();
  gen_sub->add_option("--deg", opt.deg, "Degree")->required();
  gen_sub->add_option("--seed", opt.seed, "Random seed");

  auto* bench_sub = app.add_subcommand("bench", "Time a problem over a grid; CSV on stdout or --out, fit on stderr");
  bench_sub->add_option("--problem", opt.problem, "Problem to time")
      ->required()
      ->check(CLI::IsMember(bench_problems()));
  bench_sub->add_option("--q-list", opt.q_list, "Prime moduli")->required()->delimiter(',');
  bench_sub->add_option("--n-list", opt.n_list, "Degrees")->required()->delimiter(',');
  bench_sub->add_option("--reps", opt.reps, "Repetitions per cell")->check(CLI::PositiveNumber);
  bench_sub->add_option("--seed", opt.seed, "Random seed");
  bench_sub->add_option("--out", opt.out_path, "CSV output file");
  add_oracle(bench_sub);

  auto* selftest_sub = app.add_subcommand("selftest", "Check the engine and reductions on every small polynomial");
  selftest_sub->add_option("--seed", opt.seed, "Random seed");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Runner run(opt, in, out, err);
    if (factor_sub->parsed()) return run.factor_cmd();
    if (degree_sub->parsed()) return run.factor_degree_cmd();
    if (minpoly_sub->parsed()) return run.frob_minpoly_cmd();
    if (charpoly_sub->parsed()) return run.frob_charpoly_cmd();
    if (carlitz_sub->parsed()) return run.carlitz_charpoly_cmd();
    if (moore_sub->parsed()) return run.determinant_cmd(false);
    if (vdm_sub->parsed()) return run.determinant_cmd(true);
    if (gen_sub->parsed()) return run.gen_cmd();
    if (bench_sub->parsed()) return run.bench_cmd();
    if (selftest_sub->parsed()) return run.selftest_cmd();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kExitUsage;
}

}  // namespace fqr
