#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "fqreduce/factor.hpp"
#include "fqreduce/frobenius.hpp"
#include "fqreduce/moore.hpp"
#include "fqreduce/polyalg.hpp"

namespace fqr {

enum class OracleKind { reference, independent };

struct OracleCounter {
  std::uint64_t calls = 0;
  std::uint64_t engine_calls_inside = 0;  // factor-engine entries made while answering
};

/// The four oracles used by the reductions. Reference handles answer with
/// the factor engine; independent handles use the Frobenius, Carlitz and
/// Moore computations and never enter the engine.
///
/// factor_degree returns the smallest factor degree for reference handles
/// and the largest one (by determinant binary search) for independent ones.
class OracleSet {
 public:
  OracleSet(OracleKind kind, std::uint64_t seed) : kind_(kind), rng_(seed) {}

  int factor_degree(const Poly& f);
  Poly frob_minpoly(const Poly& f);
  Poly carlitz_charpoly(const Poly& f);
  /// Whether every factor of f has degree <= m.
  bool moore_zero(const Poly& f, int m);

  OracleKind kind() const noexcept { return kind_; }
  const OracleCounter& factor_degree_counter() const noexcept { return fd_; }
  const OracleCounter& frob_minpoly_counter() const noexcept { return fm_; }
  const OracleCounter& carlitz_counter() const noexcept { return cc_; }
  const OracleCounter& moore_counter() const noexcept { return mz_; }
  std::uint64_t total_calls() const noexcept { return fd_.calls + fm_.calls + cc_.calls + mz_.calls; }
  std::uint64_t engine_calls_inside() const noexcept {
    return fd_.engine_calls_inside + fm_.engine_calls_inside + cc_.engine_calls_inside + mz_.engine_calls_inside;
  }

 private:
  template <class Fn>
  auto counted(OracleCounter& c, Fn&& fn);

  OracleKind kind_;
  Rng rng_;
  OracleCounter fd_, fm_, cc_, mz_;
};

// ---------------------------------------------------------------------------
// Factor from a factor-degree oracle

struct FactorDegreeStats {
  int t = 0;
  int oracle_rounds = 0;
};

/// Stage 1 strips every factor of degree <= t through
/// gcd(prod_{i<=t} (x^(q^i) - x), f); stage 2 asks the oracle for a degree d
/// of the remainder and splits off gcd(x^(q^d) - x, f). t defaults to
/// ceil(n^(2/3)). Throws OracleLied when a claimed degree splits off nothing
/// and LoopBudgetExceeded after n/t rounds.
Factorization reduce_factor_via_factordegree(const Poly& f, const std::function<int(const Poly&)>& oracle,
                                             std::optional<int> t, Rng& rng, FactorDegreeStats* stats = nullptr);

// ---------------------------------------------------------------------------
// Factor from a Frobenius minimal polynomial oracle

struct CycloFactorSet {
  std::set<Poly> factors;

  Poly product(const PrimeField& field) const;
};

/// Order of l in G/H where H is the subgroup associated with L, or 0 when l
/// is not a unit mod k. bound is an upper bound for k and caps the loop.
int find_order(std::uint64_t l, const CycloFactorSet& L, std::uint64_t bound, Rng& rng);

/// Grows {g0} by random l in [1, n] for N = max(1, floor(8 ln n ln ln n))
/// rounds. The result is every factor of Phi_k with high probability.
CycloFactorSet find_cyclotomic(const Poly& g0, std::uint64_t n, Rng& rng);

/// A divisor of k, equal to k when d = phi(k).
std::uint64_t find_k(std::uint64_t d, const Poly& g0, std::uint64_t bound, Rng& rng);

struct DegreeCertificate {
  std::map<std::uint64_t, int> multiplicity;  // k -> m_k
  std::vector<std::uint64_t> S;               // ascending
  int rounds = 0;
};

/// {k p^e : k in T, p^e <= m_k}, ascending.
std::vector<std::uint64_t> certificate_set(const std::map<std::uint64_t, int>& multiplicity, std::uint64_t p);

/// T and m_k from the irreducible factors of g with multiplicities. A round
/// is accepted only when h | lambda^k0 - 1, deg h = phi(k0) and L is still
/// available in the multiset. Throws StuckError after 32 |L0| rounds.
DegreeCertificate find_T(const std::vector<FactorPower>& factors, std::uint64_t n, Rng& rng);

struct FrobReductionDiagnostics {
  int max_depth = 0;  // top level is depth 1
  int oracle_calls = 0;
  int find_t_retries = 0;
  int certificate_misses = 0;  // true large degrees missing from S
  bool fallback_used = false;
  bool budget_ok = true;
};

/// Factor through the minimal polynomial of Frobenius: small factors by DDF,
/// then factor g recursively, recover the cyclotomic structure of g, and
/// split f along the candidate degrees. A failed product check retries
/// find_T up to three times, then falls back to factor() and sets
/// fallback_used. Throws OracleInconsistent when g(sigma)(x) != 0.
Factorization reduce_factor_via_frobminpoly(const Poly& f, const std::function<Poly(const Poly&)>& oracle, Rng& rng,
                                            FrobReductionDiagnostics* diag = nullptr);

// ---------------------------------------------------------------------------
// Factor degree from Carlitz and from determinants

struct CarlitzDegree {
  int degree;
  bool validated;  // gcd(x^(q^d) - x, f) != 1
};

/// Smallest factor degree from chi_f = oracle(f). Throws ValidationFailed
/// when require_validation is set and the result does not validate.
CarlitzDegree factor_degree_via_carlitz(const Poly& f, const std::function<Poly(const Poly&)>& oracle,
                                        bool require_validation = false);

enum class DeterminantKind { moore, vandermonde };

/// Largest factor degree by binary search over the zero test.
BinarySearchResult factor_degree_via_determinant(const Poly& f, DeterminantKind which);

enum class EasyTarget { frob_minpoly, frob_charpoly, carlitz_charpoly };

Poly easy_directions(const Poly& f, EasyTarget target, Rng& rng);

}  // namespace fqr
