#include "fqreduce/reductions.hpp"

#include <cmath>

#include "fqreduce/carlitz.hpp"
#include "fqreduce/numtheory.hpp"
#include "support.hpp"

using namespace fqr;
using namespace testing;

namespace {

CycloFactorSet set_of(std::initializer_list<Poly> ps) { return CycloFactorSet{std::set<Poly>(ps)}; }

std::vector<FactorPower> flatten(const Poly& g, Rng& rng) { return factor(g, rng).factors; }

}  // namespace

TEST_CASE("factor via factor degree: examples") {
  Rng rng(1);
  const Poly f = P(2, {0, 1}) * P(2, {1, 1}) * P(2, {1, 1, 0, 1}) * P(2, {1, 0, 1, 1});
  FactorDegreeStats st;
  auto fz = reduce_factor_via_factordegree(f, factor_degree_ref, 1, rng, &st);
  CHECK(fz.product() == f);
  CHECK(fz.factors.size() == 4);
  // Both cubics have degree 3, so a single gcd round splits them off together.
  CHECK(st.oracle_rounds == 1);

  const Poly small = P(3, {0, 1}) * P(3, {1, 0, 1});
  reduce_factor_via_factordegree(small, factor_degree_ref, 2, rng, &st);
  CHECK(st.oracle_rounds == 0);

  const Poly g = P(2, {1, 1, 0, 1}) * P(2, {1, 1, 1});
  CHECK_THROWS_AS(reduce_factor_via_factordegree(g, [](const Poly&) { return 5; }, 2, rng), Error);
  try {
    reduce_factor_via_factordegree(P(2, {1, 1, 0, 1}) * P(2, {1, 1, 0, 0, 1}), [](const Poly&) { return 2; }, 1, rng);
    FAIL("lie not detected");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OracleLied);
  }
}

TEST_CASE("factor via factor degree: exhaustive and both oracle kinds") {
  Rng rng(2);
  OracleSet indep(OracleKind::independent, 3);
  for (const auto& f : exhaustive_suite()) {
    if (!is_squarefree(f)) continue;
    const auto expect = trial_factor(f);
    CHECK(reduce_factor_via_factordegree(f, factor_degree_ref, std::nullopt, rng).factors == expect.factors);
    if (f.degree() <= 6) {
      auto fz = reduce_factor_via_factordegree(
          f, [&](const Poly& a) { return indep.factor_degree(a); }, std::nullopt, rng);
      CHECK(fz.factors == expect.factors);
    }
  }
  CHECK(indep.engine_calls_inside() == 0);
}

TEST_CASE("find_order examples") {
  Rng rng(4);
  const auto L = set_of({P(2, {1, 1, 0, 1})});
  CHECK(find_order(2, L, 7, rng) == 1);
  CHECK(find_order(3, L, 7, rng) == 2);
  CHECK(find_order(7, L, 7, rng) == 0);
  CHECK(find_order(5, set_of({P(3, {-1, 1})}), 5, rng) == 1);
}

TEST_CASE("find_cyclotomic examples") {
  Rng rng(5);
  CHECK(find_cyclotomic(P(2, {1, 1, 1}), 10, rng).factors == std::set<Poly>{P(2, {1, 1, 1})});
  CHECK(find_cyclotomic(P(2, {1, 1, 0, 1}), 20, rng).factors == std::set<Poly>{P(2, {1, 1, 0, 1}), P(2, {1, 0, 1, 1})});
  CHECK(find_cyclotomic(P(3, {1, 1}), 10, rng).factors == std::set<Poly>{P(3, {1, 1})});
}

TEST_CASE("find_k examples and random cases") {
  Rng rng(6);
  CHECK(find_k(6, P(2, {1, 1, 0, 1}), 7, rng) == 7);
  CHECK(find_k(1, P(2, {1, 1}), 1, rng) == 1);
  for (int t = 0; t < 30; ++t) {
    const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 97}[static_cast<std::size_t>(rng.uniform(0, 3))];
    std::uint64_t k;
    do k = rng.uniform(1, 200);
    while (k % p == 0);
    PrimeField F(p);
    const auto fz = factor(cyclotomic(k, F), rng);
    const auto& g0 = fz.factors[static_cast<std::size_t>(rng.below(fz.factors.size()))].factor;
    CHECK(find_k(nt::totient(k), g0, 200, rng) == k);
  }
}

TEST_CASE("find_T examples and invariants") {
  Rng rng(7);
  auto cert = find_T(flatten(P(3, {1, -2, 1}), rng), 4, rng);
  CHECK(cert.multiplicity == std::map<std::uint64_t, int>{{1, 2}});
  CHECK(cert.S == std::vector<std::uint64_t>{1});

  cert = find_T(flatten(P(2, {1, 0, 1}), rng), 4, rng);
  CHECK(cert.multiplicity == std::map<std::uint64_t, int>{{1, 2}});
  CHECK(cert.S == std::vector<std::uint64_t>{1, 2});

  cert = find_T(flatten(P(2, {1, 1, 0, 1}) * P(2, {1, 0, 1, 1}), rng), 8, rng);
  CHECK(cert.multiplicity == std::map<std::uint64_t, int>{{7, 1}});
  CHECK(cert.S == std::vector<std::uint64_t>{7});
  CHECK(cert.rounds == 1);

  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 97ULL}) {
    PrimeField F(p);
    for (int t = 0; t < 15; ++t) {
      const int n = static_cast<int>(rng.uniform(8, 60));
      Planted inst = planted(n, F, rng);
      Poly g = Poly::one(F);
      for (int d : inst.degrees()) g = lcm(g, lam_pow_minus_one(F, static_cast<std::uint64_t>(d)));
      const auto c = find_T(flatten(g, rng), static_cast<std::uint64_t>(n), rng);
      std::uint64_t weight = 0;
      for (const auto& [k, m] : c.multiplicity) {
        CHECK(k % p != 0);
        weight += static_cast<std::uint64_t>(m) * nt::totient(k);
      }
      CHECK(weight <= static_cast<std::uint64_t>(g.degree()));
      for (int d : inst.degrees()) {
        CHECK(std::binary_search(c.S.begin(), c.S.end(), static_cast<std::uint64_t>(d)));
      }
    }
  }
}

TEST_CASE("factor via Frobenius minimal polynomial") {
  Rng rng(8);
  OracleSet indep(OracleKind::independent, 9);
  auto oracle = [&](const Poly& a) { return indep.frob_minpoly(a); };
  FrobReductionDiagnostics diag;

  const Poly irr = random_irreducible(40, PrimeField(97), rng);
  auto single = reduce_factor_via_frobminpoly(irr, oracle, rng, &diag);
  REQUIRE(single.factors.size() == 1);
  CHECK(single.factors[0].factor == irr);
  CHECK(diag.oracle_calls == 1);

  for (const auto& f : exhaustive_suite()) {
    if (!is_squarefree(f)) continue;
    CHECK(reduce_factor_via_frobminpoly(f, oracle, rng, &diag).factors == trial_factor(f).factors);
    CHECK_FALSE(diag.fallback_used);
  }
  for (std::uint64_t p : {2ULL, 3ULL, 97ULL}) {
    PrimeField F(p);
    for (int t = 0; t < 20; ++t) {
      const int n = static_cast<int>(rng.uniform(20, 80));
      Planted inst = planted(n, F, rng);
      auto fz = reduce_factor_via_frobminpoly(inst.f, oracle, rng, &diag);
      REQUIRE(fz.factors.size() == inst.factors.size());
      for (std::size_t i = 0; i < fz.factors.size(); ++i) CHECK(fz.factors[i].factor == inst.factors[i]);
      CHECK_FALSE(diag.fallback_used);
      CHECK(diag.budget_ok);
      CHECK(diag.max_depth <= 2 * std::log2(n) + 2);
    }
  }
  CHECK(indep.engine_calls_inside() == 0);

  try {
    const PrimeField F2(2);
    reduce_factor_via_frobminpoly(random_irreducible(30, F2, rng) * random_irreducible(40, F2, rng),
                                  [](const Poly& a) { return lam_pow_minus_one(a.field(), 2); }, rng);
    FAIL("inconsistent oracle accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OracleInconsistent);
  }
}

TEST_CASE("factor degree via Carlitz") {
  auto direct = [](const Poly& f) { return carlitz_charpoly_direct(f); };
  auto r = factor_degree_via_carlitz(P(5, {0, 1}) * P(5, {1, 1}) * P(5, {2, 0, 1}), direct);
  CHECK(r.degree == 1);
  CHECK(r.validated);
  r = factor_degree_via_carlitz(P(2, {1, 1, 0, 1}), direct);
  CHECK(r.degree == 3);
  CHECK(r.validated);
  try {
    factor_degree_via_carlitz(P(3, {0, 1}) * P(3, {1, 1}) * P(3, {2, 1}), direct);
    FAIL("expected degenerate difference");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateDifference);
  }
  // Two linear factors over F_2: p divides the count, the estimate is unreliable.
  const Poly two = P(2, {0, 1}) * P(2, {1, 1}) * P(2, {1, 1, 0, 1});
  const auto maybe = factor_degree_via_carlitz(two, direct);
  if (!maybe.validated) CHECK_THROWS_AS(factor_degree_via_carlitz(two, direct, true), Error);
}

TEST_CASE("factor degree via determinants") {
  const Poly f = P(2, {0, 1}) * P(2, {1, 1}) * P(2, {1, 1, 1});
  CHECK(factor_degree_via_determinant(f, DeterminantKind::moore).degree == 2);
  CHECK(factor_degree_via_determinant(f, DeterminantKind::vandermonde).degree == 2);
  CHECK(factor_degree_via_determinant(P(3, {1, 2, 0, 1}), DeterminantKind::moore).degree == 3);
  Rng rng(10);
  for (int t = 0; t < 60; ++t) {
    PrimeField F(std::vector<std::uint64_t>{2, 3, 5, 97}[static_cast<std::size_t>(rng.uniform(0, 3))]);
    const int n = static_cast<int>(rng.uniform(1, 40));
    Planted inst = planted(n, F, rng);
    const int dmax = inst.degrees().back();
    for (auto which : {DeterminantKind::moore, DeterminantKind::vandermonde}) {
      const auto res = factor_degree_via_determinant(inst.f, which);
      CHECK(res.degree == dmax);
      CHECK(res.calls <= static_cast<int>(std::ceil(std::log2(n))) + 1);
    }
  }
}

TEST_CASE("easy directions and oracle counters") {
  Rng rng(11);
  const Poly f = P(2, {0, 1}) * P(2, {1, 1}) * P(2, {1, 1, 1});
  CHECK(easy_directions(f, EasyTarget::frob_minpoly, rng) == P(2, {1, 0, 1}));
  CHECK(easy_directions(P(2, {0, 1, 1}), EasyTarget::carlitz_charpoly, rng) == P(2, {0, 1, 1}));
  const Poly irr = P(3, {1, 2, 0, 1});
  CHECK(easy_directions(irr, EasyTarget::frob_minpoly, rng) == lam_pow_minus_one(PrimeField(3), 3));
  CHECK(easy_directions(irr, EasyTarget::frob_charpoly, rng) == lam_pow_minus_one(PrimeField(3), 3));
  CHECK(easy_directions(irr, EasyTarget::carlitz_charpoly, rng) == irr - Poly::one(PrimeField(3)));

  OracleSet ref(OracleKind::reference, 1), ind(OracleKind::independent, 1);
  for (auto* o : {&ref, &ind}) {
    CHECK(o->frob_minpoly(f) == P(2, {1, 0, 1}));
    CHECK(o->carlitz_charpoly(f) == carlitz_charpoly_direct(f));
    CHECK(o->moore_zero(f, 2));
    CHECK_FALSE(o->moore_zero(f, 1));
  }
  CHECK(ref.factor_degree(f) == 1);
  CHECK(ind.factor_degree(f) == 2);
  CHECK(ref.total_calls() == 5);
  CHECK(ref.engine_calls_inside() >= 5);
  CHECK(ind.engine_calls_inside() == 0);
}
