#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fqreduce/linalg.hpp"
#include "fqreduce/modular.hpp"

namespace fqr {

/// Frobenius powers x^(q^i) mod f for a chosen set of exponents i.
class FrobTable {
 public:
  /// Entries 0 (x) and 1 (x^q).
  explicit FrobTable(const ModCtx& ctx);
  /// Covers every requested index, built by composition doubling
  /// x^(q^(a+b)) = x^(q^a) o x^(q^b); power-of-two entries are kept.
  FrobTable(const ModCtx& ctx, const std::vector<std::uint64_t>& indices);

  /// Entries 0..last by repeated application of the Frobenius map.
  static FrobTable consecutive(const ModCtx& ctx, std::uint64_t last);

  bool contains(std::uint64_t i) const { return entries_.count(i) != 0; }
  /// Throws BadInput for an index that was not built.
  const Poly& at(std::uint64_t i) const;
  const ModCtx& ctx() const noexcept { return ctx_; }

 private:
  void ensure(std::uint64_t i);

  ModCtx ctx_;
  std::map<std::uint64_t, Poly> entries_;
};

/// x^(q^i) mod f by binary doubling with Brent-Kung composition.
Poly frobenius_power(const ModCtx& ctx, std::uint64_t i);

struct LinearFunctional {
  std::vector<Felt> weights;

  Felt operator()(const Poly& a, const PrimeField& field) const;
};

/// u(alpha^(q^1)), ..., u(alpha^(q^count)).
std::vector<Felt> automorphism_projection(const ModCtx& ctx, const Poly& alpha, const LinearFunctional& u,
                                          std::size_t count);

/// Matrix of sigma on the monomial basis: column k holds x^(kq) mod f.
Matrix frobenius_matrix(const ModCtx& ctx);

struct FrobMinPolyStats {
  int trials = 0;
  bool matrix_fallback = false;
};

/// Minimal polynomial of sigma without factoring f: Berlekamp-Massey on
/// projections u(sigma^i alpha), lcm over trials, then a mandatory check
/// g(M) = 0 on the Frobenius matrix. Up to 8 extra trials after the first
/// 3, then the minimal polynomial of the matrix itself.
Poly frob_minpoly_independent(const ModCtx& ctx, Rng& rng, FrobMinPolyStats* stats = nullptr);

/// lcm(lambda^d - 1) over the factor degrees of f, from the factor engine.
Poly frob_minpoly_reference(const Poly& f, Rng& rng);

enum class FrobMode { independent, reference };

Poly frob_minpoly(const Poly& f, Rng& rng, FrobMode mode);

/// prod (lambda^d - 1).
Poly frob_charpoly_from_degrees(const std::vector<int>& degrees, const PrimeField& field);

/// Characteristic polynomial of the Frobenius matrix.
Poly frob_charpoly_direct(const ModCtx& ctx);

}  // namespace fqr
