#include "fqreduce/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>

#include "fqreduce/carlitz.hpp"

namespace fqr {

std::string to_csv_row(const BenchRecord& r) {
  return r.problem + ',' + std::to_string(r.q) + ',' + std::to_string(r.n) + ',' + std::to_string(r.seed) + ',' +
         std::to_string(r.rep) + ',' + std::to_string(r.nanos) + ',' + std::to_string(r.oracle_calls) + ',' +
         (r.success ? "1" : "0");
}

const std::vector<std::string>& bench_problems() {
  static const std::vector<std::string> names{"factor",       "factor-frobminpoly", "factor-factordegree",
                                              "frob-minpoly", "carlitz-charpoly",   "factor-degree-moore"};
  return names;
}

namespace {

struct Outcome {
  bool success;
  std::uint64_t oracle_calls;
};

using Clock = std::chrono::steady_clock;

Outcome run_one(const std::string& problem, const Poly& f, OracleKind kind, Rng& rng, std::uint64_t& nanos) {
  OracleSet oracles(kind, rng.child(1).seed());
  auto timed = [&](auto&& fn) {
    const auto t0 = Clock::now();
    auto result = fn();
    nanos = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count());
    return result;
  };
  if (problem == "factor") {
    auto fz = timed([&] { return factor(f, rng); });
    return {fz.product() == f, 0};
  }
  if (problem == "factor-frobminpoly") {
    FrobReductionDiagnostics diag;
    auto fz = timed([&] {
      return reduce_factor_via_frobminpoly(f, [&](const Poly& a) { return oracles.frob_minpoly(a); }, rng, &diag);
    });
    return {!diag.fallback_used && fz.factors == factor(f, rng).factors, oracles.total_calls()};
  }
  if (problem == "factor-factordegree") {
    auto fz = timed([&] {
      return reduce_factor_via_factordegree(f, [&](const Poly& a) { return oracles.factor_degree(a); }, std::nullopt,
                                            rng);
    });
    return {fz.factors == factor(f, rng).factors, oracles.total_calls()};
  }
  if (problem == "frob-minpoly") {
    auto g = timed([&] { return oracles.frob_minpoly(f); });
    return {g == frob_minpoly_reference(f, rng), oracles.total_calls()};
  }
  if (problem == "carlitz-charpoly") {
    auto chi = timed([&] { return oracles.carlitz_charpoly(f); });
    return {chi == carlitz_charpoly_from_factors(factor(f, rng)), oracles.total_calls()};
  }
  if (problem == "factor-degree-moore") {
    auto res = timed([&] { return factor_degree_via_determinant(f, DeterminantKind::moore); });
    int dmax = 0;
    for (const auto& fp : factor(f, rng).factors) dmax = std::max(dmax, fp.factor.degree());
    return {res.degree == dmax, static_cast<std::uint64_t>(res.calls)};
  }
  throw Error(ErrorKind::BadInput, "unknown bench problem '" + problem + "'");
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

}  // namespace

void run_bench(const BenchConfig& cfg, const std::function<void(const BenchRecord&)>& sink) {
  const auto& names = bench_problems();
  if (std::find(names.begin(), names.end(), cfg.problem) == names.end()) {
    throw Error(ErrorKind::BadInput, "unknown bench problem '" + cfg.problem + "'");
  }
  if (cfg.reps < 1) throw Error(ErrorKind::BadInput, "reps must be >= 1");
  const Rng base(cfg.seed);
  for (auto q : cfg.qs) {
    const PrimeField F(q);
    for (int n : cfg.ns) {
      if (n < 1) throw Error(ErrorKind::BadInput, "n must be >= 1");
      for (int rep = 0; rep < cfg.reps; ++rep) {
        const std::uint64_t tag = (q * 1000003ULL + static_cast<std::uint64_t>(n)) * 1009ULL + static_cast<std::uint64_t>(rep);
        Rng rng = base.child(tag);
        BenchRecord rec{cfg.problem, q, n, rng.seed(), rep, 0, 0, false};
        const Poly f = random_monic_squarefree(n, F, rng);
        const Outcome o = run_one(cfg.problem, f, cfg.oracle, rng, rec.nanos);
        rec.success = o.success;
        rec.oracle_calls = o.oracle_calls;
        sink(rec);
      }
    }
  }
}

std::vector<BenchFit> bench_fit(const std::vector<BenchRecord>& records) {
  std::map<std::uint64_t, std::map<int, std::vector<double>>> by_q;
  for (const auto& r : records) by_q[r.q][r.n].push_back(static_cast<double>(r.nanos));
  if (by_q.empty()) throw Error(ErrorKind::InsufficientData, "no records");
  std::vector<BenchFit> out;
  for (const auto& [q, cells] : by_q) {
    if (cells.size() < 4) throw Error(ErrorKind::InsufficientData, "q=" + std::to_string(q) + " has fewer than 4 sizes");
    std::vector<double> xs, ys;
    for (const auto& [n, times] : cells) {
      if (times.size() < 3) throw Error(ErrorKind::InsufficientData, "fewer than 3 reps at n=" + std::to_string(n));
      xs.push_back(std::log(static_cast<double>(n)));
      ys.push_back(std::log(std::max(median(times), 1.0)));
    }
    const double k = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      mx += xs[i] / k;
      my += ys[i] / k;
    }
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxx += (xs[i] - mx) * (xs[i] - mx);
      sxy += (xs[i] - mx) * (ys[i] - my);
      syy += (ys[i] - my) * (ys[i] - my);
    }
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    double ss_res = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double e = ys[i] - (intercept + slope * xs[i]);
      ss_res += e * e;
    }
    const double r2 = syy > 0 ? 1.0 - ss_res / syy : 1.0;
    out.push_back({q, slope, intercept, r2, static_cast<int>(xs.size())});
  }
  return out;
}

}  // namespace fqr
