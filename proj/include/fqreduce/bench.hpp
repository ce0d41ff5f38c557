#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fqreduce/reductions.hpp"

namespace fqr {

struct BenchRecord {
  std::string problem;
  std::uint64_t q = 0;
  int n = 0;
  std::uint64_t seed = 0;  // instance seed, enough to regenerate the input
  int rep = 0;
  std::uint64_t nanos = 0;
  std::uint64_t oracle_calls = 0;
  bool success = false;
};

inline constexpr std::string_view kBenchCsvHeader = "problem,q,n,seed,rep,nanos,oracle_calls,success";

std::string to_csv_row(const BenchRecord& r);

/// Problems understood by run_bench.
const std::vector<std::string>& bench_problems();

struct BenchConfig {
  std::string problem;
  std::vector<std::uint64_t> qs;
  std::vector<int> ns;
  int reps = 3;
  std::uint64_t seed = 0;
  OracleKind oracle = OracleKind::independent;
};

/// Times every (q, n, rep) cell on a random monic squarefree instance and
/// hands each record to sink as soon as it is measured. success compares
/// against the reference engine outside the timed region.
void run_bench(const BenchConfig& cfg, const std::function<void(const BenchRecord&)>& sink);

struct BenchFit {
  std::uint64_t q;
  double slope;
  double intercept;
  double r2;
  int points;
};

/// Least squares of log(median nanos) against log n, one line per q. Throws
/// InsufficientData unless each q has >= 4 distinct n with >= 3 reps each.
std::vector<BenchFit> bench_fit(const std::vector<BenchRecord>& records);

}  // namespace fqr
