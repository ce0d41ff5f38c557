#pragma once

#include <climits>
#include <cstdint>
#include <vector>

#include "fqreduce/modular.hpp"
#include "fqreduce/polyalg.hpp"

namespace fqr {

struct DDFPart {
  Poly part;  // product of all irreducible factors of this degree
  int degree;

  friend bool operator==(const DDFPart&, const DDFPart&) = default;
};

struct DDFResult {
  std::vector<DDFPart> parts;  // ascending degree
  Poly remainder;              // factors of degree > up_to

  friend bool operator==(const DDFResult&, const DDFResult&) = default;
};

enum class DDFStrategy { plain, bsgs };

inline constexpr int kAllDegrees = INT_MAX;

/// Distinct-degree factorization of the squarefree modulus of ctx, for
/// degrees <= up_to. Throws NotSquarefree.
DDFResult ddf(const ModCtx& ctx, int up_to = kAllDegrees, DDFStrategy strategy = DDFStrategy::bsgs);

/// Splits a product of distinct irreducibles of degree d. Odd q uses
/// gcd(N(a)^((q-1)/2) - 1, g) with N the norm to F_q; q = 2 uses the
/// absolute trace. Throws BadInput when d does not divide deg g and
/// InternalError after 64 log2(deg g) unsuccessful draws.
std::vector<Poly> edf(const Poly& g, int d, Rng& rng);

/// Complete factorization of a monic nonconstant polynomial, canonical order.
Factorization factor(const Poly& f, Rng& rng);

/// factor() for input already known to be squarefree.
Factorization factor_squarefree(const Poly& f, Rng& rng);

/// Trial division by every monic polynomial of degree <= deg f / 2. Throws
/// TooLarge beyond 2^22 candidates.
Factorization trial_factor(const Poly& f);

/// Smallest irreducible factor degree, by plain DDF up to the first hit.
int factor_degree_ref(const Poly& f);

/// Number of factor-engine entry points run on this thread so far.
std::uint64_t engine_calls() noexcept;

}  // namespace fqr
