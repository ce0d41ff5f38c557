#include "fqreduce/frobenius.hpp"

#include <set>

#include "fqreduce/factor.hpp"
#include "fqreduce/numtheory.hpp"
#include "support.hpp"

using namespace fqr;
using namespace testing;

namespace {

// lcm(lambda^d - 1) over the planted degrees.
Poly lcm_from_degrees(const std::vector<int>& degrees, const PrimeField& F) {
  Poly g = Poly::one(F);
  for (int d : degrees) g = lcm(g, lam_pow_minus_one(F, static_cast<std::uint64_t>(d)));
  return g;
}

// Sum_j g_j sigma^j(x^k) for every basis monomial, with plain division.
bool annihilates(const Poly& g, const Poly& f) {
  const PrimeField& F = f.field();
  std::vector<Poly> frob;
  for (int j = 0; j <= g.degree(); ++j) frob.push_back(naive_frob(f, static_cast<std::uint64_t>(j)));
  for (int k = 0; k < f.degree(); ++k) {
    Poly acc(F);
    for (int j = 0; j <= g.degree(); ++j) {
      Poly term = Poly::one(F);
      for (int e = 0; e < k; ++e) term = (term * frob[static_cast<std::size_t>(j)]) % f;
      acc += term.scaled(g[static_cast<std::size_t>(j)]);
    }
    if (!(acc % f).is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("Frobenius table") {
  PrimeField F2(2);
  ModCtx ctx(P(2, {1, 1, 1}));
  FrobTable t(ctx, {0, 1, 2, 5});
  CHECK(t.at(0) == P(2, {0, 1}));
  CHECK(t.at(1) == P(2, {1, 1}));
  CHECK(t.at(2) == P(2, {0, 1}));
  CHECK(t.at(5) == P(2, {1, 1}));
  CHECK_THROWS_AS(t.at(3), Error);

  Rng rng(6);
  for (std::uint64_t p : {2ULL, 3ULL, 101ULL}) {
    PrimeField F(p);
    for (int d : {1, 4, 9, 16}) {
      Poly f = random_irreducible(d, F, rng);
      ModCtx c(f);
      CHECK(frobenius_power(c, static_cast<std::uint64_t>(d)) == Poly::x(F) % f);
    }
    Poly f = random_monic_squarefree(20, F, rng);
    ModCtx c(f);
    FrobTable seq = FrobTable::consecutive(c, 25);
    FrobTable dbl(c, {3, 7, 12, 25});
    for (std::uint64_t i : {3ULL, 7ULL, 12ULL, 25ULL}) {
      CHECK(seq.at(i) == dbl.at(i));
      if (i < 10) CHECK(seq.at(i) == naive_frob(f, i));
    }
    CHECK(seq.at(12) == modcompose(seq.at(6), seq.at(6), c));
  }
}

TEST_CASE("automorphism projection") {
  ModCtx ctx(P(2, {1, 1, 1}));
  LinearFunctional coeff_x{{0, 1}};
  CHECK(automorphism_projection(ctx, P(2, {0, 1}), coeff_x, 2) == std::vector<Felt>{1, 1});
  LinearFunctional zero{{0, 0}};
  CHECK(automorphism_projection(ctx, P(2, {0, 1}), zero, 4) == std::vector<Felt>(4, 0));
  ModCtx c7(P(7, {3, 1, 0, 1}));
  LinearFunctional u{{2, 5, 1}};
  CHECK(automorphism_projection(c7, P(7, {4}), u, 5) == std::vector<Felt>(5, 1));
}

TEST_CASE("Frobenius minimal polynomial examples") {
  Rng rng(7);
  PrimeField F2(2), F3(3);
  Poly irr = P(2, {1, 1, 0, 0, 0, 1});  // x^5+x+1? check with Rabin
  if (!rabin_irreducible(irr)) irr = P(2, {1, 0, 1, 0, 0, 1});
  REQUIRE(rabin_irreducible(irr));
  CHECK(frob_minpoly(irr, rng, FrobMode::independent) == lam_pow_minus_one(F2, 5));
  CHECK(frob_minpoly(irr, rng, FrobMode::reference) == lam_pow_minus_one(F2, 5));
  Poly f = P(2, {0, 1}) * P(2, {1, 1}) * P(2, {1, 1, 1});
  CHECK(frob_minpoly(f, rng, FrobMode::independent) == P(2, {1, 0, 1}));
  CHECK(frob_minpoly(f, rng, FrobMode::reference) == P(2, {1, 0, 1}));
  Poly g = P(3, {0, 2, 1});  // x (x - 1)
  CHECK(frob_minpoly(g, rng, FrobMode::independent) == P(3, {2, 1}));

  CHECK(frob_charpoly_from_degrees({1}, F3) == P(3, {-1, 1}));
  CHECK(frob_charpoly_from_degrees({1, 1}, F2) == P(2, {1, 0, 1}));
  CHECK(frob_charpoly_from_degrees({1, 2}, F3) == P(3, {1, -1, -1, 1}));
  CHECK_THROWS_AS(frob_charpoly_from_degrees({}, F3), Error);
}

TEST_CASE("independent and reference Frobenius minimal polynomials agree") {
  Rng rng(8);
  int fallbacks = 0;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 101ULL}) {
    PrimeField F(p);
    for (int t = 0; t < 40; ++t) {
      const int n = static_cast<int>(rng.uniform(1, 64));
      Planted inst = planted(n, F, rng);
      const ModCtx ctx(inst.f);
      FrobMinPolyStats st;
      Poly g = frob_minpoly_independent(ctx, rng, &st);
      fallbacks += st.matrix_fallback;
      CHECK(g == lcm_from_degrees(inst.degrees(), F));
      CHECK(g == frob_minpoly_reference(inst.f, rng));
      CHECK(g.degree() <= n);
      if (n <= 12) CHECK(annihilates(g, inst.f));
      CHECK(frob_charpoly_direct(ctx) == frob_charpoly_from_degrees(inst.degrees(), F));
    }
  }
  CHECK(fallbacks <= 2);
}

TEST_CASE("projection sequences divide the minimal polynomial") {
  Rng rng(9);
  for (std::uint64_t p : {2ULL, 5ULL}) {
    PrimeField F(p);
    for (int t = 0; t < 30; ++t) {
      const int n = static_cast<int>(rng.uniform(2, 30));
      Planted inst = planted(n, F, rng);
      const ModCtx ctx(inst.f);
      Poly alpha = random_below(n, F, rng);
      LinearFunctional u{std::vector<Felt>(static_cast<std::size_t>(n))};
      for (auto& w : u.weights) w = rng.felt(F);
      std::vector<Felt> seq{u(alpha, F)};
      auto rest = automorphism_projection(ctx, alpha, u, static_cast<std::size_t>(2 * n - 1));
      seq.insert(seq.end(), rest.begin(), rest.end());
      CHECK(divides(berlekamp_massey(seq, F), lcm_from_degrees(inst.degrees(), F)));
    }
  }
}

TEST_CASE("minimality on small inputs") {
  Rng rng(10);
  for (std::uint64_t p : {2ULL, 3ULL}) {
    PrimeField F(p);
    for (int t = 0; t < 30; ++t) {
      const int n = static_cast<int>(rng.uniform(1, 12));
      Planted inst = planted(n, F, rng);
      Poly g = frob_minpoly_independent(ModCtx(inst.f), rng);
      CHECK(annihilates(g, inst.f));
      // no proper monic divisor g / h, h an irreducible factor of g, annihilates
      for (const auto& fp : factor(g, rng).factors) CHECK_FALSE(annihilates(exact_div(g, fp.factor), inst.f));
    }
  }
}
