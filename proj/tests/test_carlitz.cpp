#include "fqreduce/carlitz.hpp"

#include <map>

#include "fqreduce/factor.hpp"
#include "support.hpp"

using namespace fqr;
using namespace testing;

namespace {

Poly chi_from_planted(const Planted& inst) {
  Poly chi = Poly::one(inst.f.field());
  for (const auto& g : inst.factors) chi *= g - Poly::one(inst.f.field());
  return chi;
}

}  // namespace

TEST_CASE("Carlitz action examples") {
  PrimeField F2(2), F7(7);
  CarlitzCtx c2{ModCtx(P(2, {1, 1, 1}))};
  CHECK(carlitz_apply(P(2, {0, 1}), P(2, {1}), c2) == P(2, {1, 1}));
  CHECK(carlitz_apply(P(2, {0, 1}), P(2, {0, 1}), c2).is_zero());
  CarlitzCtx c7{ModCtx(P(7, {3, 1, 0, 0, 1}))};
  Poly alpha = P(7, {1, 2, 3});
  CHECK(carlitz_apply(P(7, {5}), alpha, c7) == alpha.scaled(5));
  CHECK(carlitz_apply(P(7, {0, 1}), P(7, {1}), c7) == P(7, {1, 1}));
}

TEST_CASE("Carlitz characteristic polynomial examples") {
  Poly irr = P(2, {1, 1, 1});
  CHECK(carlitz_charpoly_direct(irr) == P(2, {0, 1, 1}));
  CHECK(carlitz_charpoly_direct(P(2, {0, 1, 1})) == P(2, {0, 1, 1}));
  Rng rng(1);
  CHECK(carlitz_charpoly_from_factors(factor(P(2, {0, 1, 1}), rng)) == P(2, {0, 1, 1}));
  Factorization sq(PrimeField(3));
  sq.add(P(3, {1, 1}), 2);
  CHECK_THROWS_AS(carlitz_charpoly_from_factors(sq), Error);

  CHECK(smallest_degree_via_carlitz(irr, P(2, {0, 1, 1})) == 2);
  Poly f3 = P(3, {0, 2, 0, 1});
  try {
    (void)smallest_degree_via_carlitz(f3, carlitz_charpoly_direct(f3));
    FAIL("degenerate difference");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateDifference);
  }
  Poly f5 = P(5, {0, 1, 1});
  CHECK(carlitz_charpoly_direct(f5) == P(5, {0, 4, 1}));
  CHECK(smallest_degree_via_carlitz(f5, P(5, {0, 4, 1})) == 1);
}

TEST_CASE("direct and factor routes agree on planted instances") {
  Rng rng(2);
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 101ULL}) {
    PrimeField F(p);
    for (int t = 0; t < 30; ++t) {
      const int n = static_cast<int>(rng.uniform(1, 48));
      Planted inst = planted(n, F, rng);
      const Poly chi = carlitz_charpoly_direct(inst.f);
      CHECK(chi == chi_from_planted(inst));
      CHECK(chi.degree() == n);
      CHECK(chi.is_monic());
      std::map<int, int> count;
      for (int d : inst.degrees()) ++count[d];
      const auto [dmin, cmin] = *count.begin();
      if (cmin % static_cast<int>(p) != 0) CHECK(smallest_degree_via_carlitz(inst.f, chi) == dmin);
    }
  }
}

TEST_CASE("module laws") {
  Rng rng(3);
  for (std::uint64_t p : {2ULL, 3ULL, 97ULL}) {
    PrimeField F(p);
    for (int t = 0; t < 30; ++t) {
      const int n = static_cast<int>(rng.uniform(1, 20));
      Poly f = random_monic(n, F, rng);
      CarlitzCtx c{ModCtx(f)};
      Poly alpha = random_below(n, F, rng);
      Poly m1 = random_below(static_cast<int>(rng.uniform(0, 6)), F, rng);
      Poly m2 = random_below(static_cast<int>(rng.uniform(0, 6)), F, rng);
      CHECK(carlitz_apply(m1 + m2, alpha, c) == carlitz_apply(m1, alpha, c) + carlitz_apply(m2, alpha, c));
      CHECK(carlitz_apply(m1 * m2, alpha, c) == carlitz_apply(m1, carlitz_apply(m2, alpha, c), c));
    }
  }
}
