#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fqreduce/poly.hpp"
#include "fqreduce/polyalg.hpp"

namespace fqr {

inline std::ostream& operator<<(std::ostream& os, const Poly& a) {
  os << "q=" << a.field().modulus() << " [";
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  return os << "]";
}

}  // namespace fqr

namespace testing {

using namespace fqr;

inline Poly P(std::uint64_t p, std::initializer_list<std::int64_t> c) { return Poly::from_ints(PrimeField(p), c); }

inline Poly lam_pow_minus_one(const PrimeField& F, std::uint64_t d) {
  return Poly::monomial(F, 1, d) - Poly::one(F);
}

// x^(q^i) mod g by repeated p-th powers with plain long division only.
inline Poly naive_frob(const Poly& g, std::uint64_t i) {
  const PrimeField& F = g.field();
  Poly r = Poly::x(F) % g;
  for (std::uint64_t s = 0; s < i; ++s) {
    Poly base = r, acc = Poly::one(F);
    std::uint64_t e = F.modulus();
    while (e) {
      if (e & 1) acc = (acc * base) % g;
      base = (base * base) % g;
      e >>= 1;
    }
    r = acc;
  }
  return r;
}

// Rabin's test, independent of the factor engine.
inline bool rabin_irreducible(const Poly& g) {
  const int d = g.degree();
  if (d < 1) return false;
  const Poly x = Poly::x(g.field()) % g;
  if (!(naive_frob(g, static_cast<std::uint64_t>(d)) == x)) return false;
  for (int r = 2; r <= d; ++r) {
    bool prime = true;
    for (int s = 2; s * s <= r; ++s) prime = prime && r % s != 0;
    if (!prime || d % r) continue;
    if (!gcd(g, naive_frob(g, static_cast<std::uint64_t>(d / r)) - x).is_one()) return false;
  }
  return true;
}

inline Poly random_irreducible(int d, const PrimeField& F, Rng& rng) {
  for (;;) {
    Poly g = random_monic(d, F, rng);
    if (rabin_irreducible(g)) return g;
  }
}

struct Planted {
  Poly f;
  std::vector<Poly> factors;  // sorted canonically
  std::vector<int> degrees() const {
    std::vector<int> out;
    for (const auto& g : factors) out.push_back(g.degree());
    std::sort(out.begin(), out.end());
    return out;
  }
};

// Squarefree polynomial of degree n with a known factorization: distinct
// random irreducibles of random degrees.
inline Planted planted(int n, const PrimeField& F, Rng& rng, int max_degree = 0) {
  for (;;) {
    Planted out{Poly::one(F), {}};
    int left = n;
    bool ok = true;
    int guard = 0;
    while (left > 0 && ok) {
      const int cap = max_degree > 0 ? std::min(left, max_degree) : left;
      const int d = static_cast<int>(rng.uniform(1, cap));
      Poly g = random_irreducible(d, F, rng);
      if (std::find(out.factors.begin(), out.factors.end(), g) != out.factors.end()) {
        ok = ++guard < 50;
        continue;
      }
      out.f *= g;
      out.factors.push_back(g);
      left -= d;
    }
    if (!ok) continue;
    std::sort(out.factors.begin(), out.factors.end());
    return out;
  }
}

inline std::vector<Poly> all_monic(const PrimeField& F, int degree) {
  std::vector<Poly> out;
  for_each_monic(F, degree, [&](const Poly& f) { out.push_back(f); });
  return out;
}

// Every monic polynomial of the exhaustive suite: F_2 deg <= 8, F_3 deg <= 6,
// F_5 deg <= 4.
inline std::vector<Poly> exhaustive_suite() {
  std::vector<Poly> out;
  for (auto [p, top] : {std::pair<std::uint64_t, int>{2, 8}, {3, 6}, {5, 4}}) {
    PrimeField F(p);
    for (int d = 1; d <= top; ++d) {
      auto part = all_monic(F, d);
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  return out;
}

}  // namespace testing
