#pragma once

#include <functional>
#include <span>
#include <vector>

#include "fqreduce/modular.hpp"

namespace fqr {

struct FactorPower {
  Poly factor;
  int multiplicity;

  friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

/// Multiset of monic irreducible factors. After canonicalize() factors are
/// distinct and sorted by the canonical Poly order.
struct Factorization {
  explicit Factorization(PrimeField f) : field(f) {}

  PrimeField field;
  std::vector<FactorPower> factors;

  void add(Poly factor, int multiplicity = 1) { factors.push_back({std::move(factor), multiplicity}); }
  void append(const Factorization& other, int scale = 1);
  /// Merges equal factors and sorts.
  void canonicalize();
  Poly product() const;
  std::vector<int> degrees_with_multiplicity() const;
  std::size_t count() const;

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.field == b.field && a.factors == b.factors;
  }
};

/// Pairwise coprime squarefree parts with f = prod g_i^{e_i}, sorted by factor.
/// Throws NotMonic.
std::vector<FactorPower> squarefree_decompose(const Poly& f);

/// Monic minimal generating polynomial lambda^L + c_1 lambda^(L-1) + ... + c_L
/// of the sequence prefix.
Poly berlekamp_massey(std::span<const Felt> seq, const PrimeField& field);

/// Minimal polynomial of r in F_p[lambda]/(h). Up to three random projections
/// through Berlekamp-Massey (sequence by baby-step/giant-step with transposed
/// multiplication), then a deterministic Krylov dependency if they have not
/// produced an annihilating polynomial.
Poly minpoly_mod(const Poly& r, const ModCtx& ctx, Rng& rng);

/// Same contract, deterministic Krylov route only (test oracle and fallback).
Poly minpoly_mod_krylov(const Poly& r, const ModCtx& ctx);

/// Phi_k over F_p by the Moebius product of (lambda^(k/d) - 1)^mu(d).
Poly cyclotomic(std::uint64_t k, const PrimeField& field);

/// Uniform monic squarefree polynomial of degree n by rejection.
Poly random_monic_squarefree(int n, const PrimeField& field, Rng& rng);
/// Uniform monic polynomial of degree n.
Poly random_monic(int n, const PrimeField& field, Rng& rng);
/// Uniform polynomial of degree < n.
Poly random_below(int n, const PrimeField& field, Rng& rng);

/// Calls fn for every monic polynomial of exactly this degree, in
/// lexicographic order of the coefficients below the leading one.
void for_each_monic(const PrimeField& field, int degree, const std::function<void(const Poly&)>& fn);

}  // namespace fqr
