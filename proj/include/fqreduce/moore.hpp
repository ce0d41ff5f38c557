#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fqreduce/frobenius.hpp"

namespace fqr {

struct IndexSetSm {
  std::uint64_t m;
  std::vector<std::uint64_t> elements;  // ascending
};

/// {0..b-1} u {b j : 1 <= j < b} u {b^2} u {m}, b = floor(sqrt m), when that
/// set's differences cover 1..m. Otherwise {0..b} u {max(0, m - k(b+1))}
/// u {m}, which always covers with at most 2b+1 elements.
IndexSetSm build_Sm(std::uint64_t m);

/// Whether {j - i : i < j in S} contains 1..m.
bool covers_differences(const std::vector<std::uint64_t>& s, std::uint64_t m);

/// Determinant without divisions, by dynamic programming over column
/// subsets (O(2^k k) ring operations). Works over rings with zero divisors.
template <class T, class Mul, class Add, class Neg>
T det_division_free(const std::vector<std::vector<T>>& a, const T& zero, const T& one, Mul mul, Add add, Neg neg) {
  const std::size_t k = a.size();
  std::vector<T> dp(std::size_t{1} << k, zero);
  std::vector<bool> live(dp.size(), false);
  dp[0] = one;
  live[0] = true;
  for (std::size_t mask = 1; mask < dp.size(); ++mask) {
    const auto row = static_cast<std::size_t>(__builtin_popcountll(mask)) - 1;
    int above = 0;  // set bits of mask above the current column
    for (std::size_t c = k; c-- > 0;) {
      if (!(mask >> c & 1)) continue;
      const std::size_t prev = mask & ~(std::size_t{1} << c);
      if (live[prev]) {
        T term = mul(dp[prev], a[row][c]);
        if (above & 1) term = neg(term);
        dp[mask] = live[mask] ? add(dp[mask], term) : term;
        live[mask] = true;
      }
      ++above;
    }
  }
  return dp.back();
}

/// Moore determinant of (1, x, ..., x^m) mod f: entry (i, j) = x^(j q^i).
/// Throws BadInput for m > deg f and TooLarge for m > 11.
Poly moore_det_direct(const ModCtx& ctx, int m);

/// Whether the Moore determinant vanishes mod squarefree f, decided as
/// prod_{d=1}^m (x^(q^d) - x) = 0 mod f. The table must hold 1..m.
bool moore_zero_test(const ModCtx& ctx, int m, const FrobTable& frob);

/// prod_{i<j in S_m} (x^(q^j) - x^(q^i)) mod f.
Poly vandermonde_det(const ModCtx& ctx, int m, const FrobTable& frob);

struct GcdSplit {
  Poly low;   // factors of degree <= m
  Poly high;  // f / low
};

/// low = gcd(prod_{i=1}^m (x^(q^i) - x), f). Throws BadInput for m < 1.
GcdSplit vandermonde_gcd_split(const ModCtx& ctx, int m, const FrobTable& frob);

struct BinarySearchResult {
  int degree;
  int calls;
};

/// Smallest m in [1, n] with zero_at(m) true, assuming monotonicity. Checks
/// zero_at(n) first; throws OracleInconsistent if it is false or if the
/// answers contradict each other. At most ceil(log2 n) + 1 calls.
BinarySearchResult largest_degree_binary_search(int n, const std::function<bool(int)>& zero_at);

}  // namespace fqr
