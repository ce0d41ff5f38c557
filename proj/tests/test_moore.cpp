#include "fqreduce/moore.hpp"

#include <algorithm>

#include "fqreduce/factor.hpp"
#include "fqreduce/numtheory.hpp"
#include "support.hpp"

using namespace fqr;
using namespace testing;

namespace {

int max_degree(const Poly& f) {
  int d = 0;
  for (const auto& fp : trial_factor(f).factors) d = std::max(d, fp.factor.degree());
  return d;
}

}  // namespace

TEST_CASE("S_m examples and invariants") {
  CHECK(build_Sm(1).elements == std::vector<std::uint64_t>{0, 1});
  CHECK(build_Sm(4).elements == std::vector<std::uint64_t>{0, 1, 2, 4});
  CHECK(build_Sm(9).elements == std::vector<std::uint64_t>{0, 1, 2, 3, 6, 9});
  CHECK_THROWS_AS(build_Sm(0), Error);
  for (std::uint64_t m = 1; m <= 10000; ++m) {
    const auto s = build_Sm(m).elements;
    const std::uint64_t b = nt::isqrt(m);
    REQUIRE(s.size() <= 2 * b + 1);
    REQUIRE(s.front() == 0);
    REQUIRE(s.back() == m);
    std::vector<char> seen(m + 1, 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) seen[s[j] - s[i]] = 1;
    }
    REQUIRE(std::count(seen.begin() + 1, seen.end(), 1) == static_cast<long>(m));
  }
}

TEST_CASE("determinant examples") {
  ModCtx ctx(P(2, {1, 1, 1}));
  FrobTable frob = FrobTable::consecutive(ctx, 2);
  CHECK(moore_det_direct(ctx, 0).is_one());
  CHECK(moore_det_direct(ctx, 1).is_one());
  CHECK(moore_det_direct(ctx, 2).is_zero());
  CHECK(vandermonde_det(ctx, 1, frob).is_one());
  CHECK(vandermonde_det(ctx, 2, frob).is_zero());
  CHECK_FALSE(moore_zero_test(ctx, 1, frob));
  CHECK(moore_zero_test(ctx, 2, frob));
  CHECK_THROWS_AS(moore_det_direct(ctx, 3), Error);

  Poly f = P(2, {0, 1, 1}) * P(2, {1, 1, 1});
  ModCtx c4(f);
  FrobTable t4 = FrobTable::consecutive(c4, 4);
  CHECK_FALSE(moore_zero_test(c4, 1, t4));
  CHECK(moore_zero_test(c4, 2, t4));
  GcdSplit split = vandermonde_gcd_split(c4, 1, t4);
  CHECK(split.low == P(2, {0, 1, 1}));
  CHECK(split.high == P(2, {1, 1, 1}));
  GcdSplit all = vandermonde_gcd_split(c4, 3, t4);
  CHECK(all.low == f);
  CHECK(all.high.is_one());
  CHECK_THROWS_AS(vandermonde_gcd_split(c4, 0, t4), Error);
  CHECK(vandermonde_det(c4, 1, t4) == (t4.at(1) - t4.at(0)) % f);
}

TEST_CASE("zero tests agree with the maximum factor degree") {
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
    PrimeField F(p);
    for (int n = 1; n <= 6; ++n) {
      if (p == 5 && n > 5) continue;
      for_each_monic(F, n, [&](const Poly& f) {
        if (!is_squarefree(f)) return;
        const ModCtx ctx(f);
        const FrobTable frob = FrobTable::consecutive(ctx, static_cast<std::uint64_t>(n));
        const int dmax = max_degree(f);
        for (int m = 1; m <= std::min(4, n); ++m) {
          const bool direct = moore_det_direct(ctx, m).is_zero();
          CHECK(direct == (dmax <= m));
          CHECK(moore_zero_test(ctx, m, frob) == direct);
          CHECK(vandermonde_det(ctx, m, frob).is_zero() == direct);
        }
      });
    }
  }
}

TEST_CASE("gcd identity on random instances") {
  Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    PrimeField F(std::vector<std::uint64_t>{2, 3, 5, 97}[static_cast<std::size_t>(rng.uniform(0, 3))]);
    const int n = static_cast<int>(rng.uniform(2, 40));
    Planted inst = planted(n, F, rng);
    const ModCtx ctx(inst.f);
    const FrobTable frob = FrobTable::consecutive(ctx, static_cast<std::uint64_t>(n));
    const int m = static_cast<int>(rng.uniform(1, n));
    GcdSplit split = vandermonde_gcd_split(ctx, m, frob);
    CHECK(gcd(vandermonde_det(ctx, m, frob), inst.f) == split.low);
    Poly low = Poly::one(F);
    for (const auto& g : inst.factors) {
      if (g.degree() <= m) low *= g;
    }
    CHECK(split.low == low);
    CHECK(split.low * split.high == inst.f);
  }
}

TEST_CASE("symbolic Carlitz factorial") {
  for (std::uint64_t p : {2ULL, 3ULL}) {
    PrimeField F(p);
    for (std::size_t m = 1; m <= 2; ++m) {
      std::vector<std::vector<Poly>> a(m + 1);
      std::uint64_t qi = 1;
      for (std::size_t i = 0; i <= m; ++i, qi *= p) {
        for (std::size_t j = 0; j <= m; ++j) a[i].push_back(Poly::monomial(F, 1, j * qi));
      }
      Poly det = det_division_free<Poly>(
          a, Poly(F), Poly::one(F), [](const Poly& u, const Poly& v) { return u * v; },
          [](const Poly& u, const Poly& v) { return u + v; }, [](const Poly& u) { return -u; });
      Poly expect = Poly::one(F);
      for (std::size_t i = 0; i <= m; ++i) {
        for (std::size_t j = i + 1; j <= m; ++j) {
          std::uint64_t qji = 1, qi2 = 1;
          for (std::size_t s = 0; s < j - i; ++s) qji *= p;
          for (std::size_t s = 0; s < i; ++s) qi2 *= p;
          expect *= pow(Poly::monomial(F, 1, qji) - Poly::x(F), qi2);
        }
      }
      CHECK(det == expect);
    }
  }
}

TEST_CASE("binary search for the largest degree") {
  auto r = largest_degree_binary_search(10, [](int m) { return m >= 7; });
  CHECK(r.degree == 7);
  CHECK(r.calls <= 5);
  CHECK(largest_degree_binary_search(1, [](int) { return true; }).calls == 1);
  try {
    (void)largest_degree_binary_search(8, [](int m) { return m < 8; });
    FAIL("inconsistent oracle");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OracleInconsistent);
  }
  for (int n = 1; n <= 200; ++n) {
    for (int d = 1; d <= n; d += 7) {
      auto res = largest_degree_binary_search(n, [d](int m) { return m >= d; });
      CHECK(res.degree == d);
      CHECK(res.calls <= static_cast<int>(std::ceil(std::log2(n))) + 1);
    }
  }
}
