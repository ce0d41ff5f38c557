#include "fqreduce/reductions.hpp"

#include <algorithm>
#include <cmath>

#include "fqreduce/carlitz.hpp"
#include "fqreduce/numtheory.hpp"

namespace fqr {

namespace {

int max_factor_degree(const Factorization& fz) {
  int d = 0;
  for (const auto& fp : fz.factors) d = std::max(d, fp.factor.degree());
  return d;
}

Poly lambda_pow_minus_one(const PrimeField& F, std::uint64_t k) {
  return Poly::monomial(F, 1, static_cast<std::size_t>(k)) - Poly::one(F);
}

// Splits g, a product of distinct irreducibles whose degrees divide d, into
// irreducibles, skipping degrees <= floor (already removed by the caller).
void split_by_divisors(Poly g, int d, int floor, Rng& rng, Factorization& out) {
  for (auto e64 : nt::divisors(static_cast<std::uint64_t>(d))) {
    const int e = static_cast<int>(e64);
    if (e <= floor || g.degree() <= 0) continue;
    Poly part = g;
    if (e != d) {
      const ModCtx ctx(g);
      part = gcd(frobenius_power(ctx, e64) - Poly::x(g.field()), g);
    }
    if (part.degree() <= 0) continue;
    for (auto& h : edf(part, e, rng)) out.add(std::move(h));
    g = exact_div(g, part);
  }
}

}  // namespace

template <class Fn>
auto OracleSet::counted(OracleCounter& c, Fn&& fn) {
  ++c.calls;
  const auto before = engine_calls();
  auto result = fn();
  c.engine_calls_inside += engine_calls() - before;
  return result;
}

int OracleSet::factor_degree(const Poly& f) {
  return counted(fd_, [&] {
    if (kind_ == OracleKind::reference) return factor_degree_ref(f);
    return factor_degree_via_determinant(f, DeterminantKind::moore).degree;
  });
}

Poly OracleSet::frob_minpoly(const Poly& f) {
  return counted(fm_, [&] {
    return fqr::frob_minpoly(f, rng_, kind_ == OracleKind::reference ? FrobMode::reference : FrobMode::independent);
  });
}

Poly OracleSet::carlitz_charpoly(const Poly& f) {
  return counted(cc_, [&] {
    if (kind_ == OracleKind::reference) return carlitz_charpoly_from_factors(factor(f, rng_));
    return carlitz_charpoly_direct(f);
  });
}

bool OracleSet::moore_zero(const Poly& f, int m) {
  return counted(mz_, [&] {
    if (kind_ == OracleKind::reference) return max_factor_degree(factor(f, rng_)) <= m;
    const ModCtx ctx(f);
    return moore_zero_test(ctx, m, FrobTable::consecutive(ctx, static_cast<std::uint64_t>(m)));
  });
}

// ---------------------------------------------------------------------------

Factorization reduce_factor_via_factordegree(const Poly& f, const std::function<int(const Poly&)>& oracle,
                                             std::optional<int> t_opt, Rng& rng, FactorDegreeStats* stats) {
  if (!f.is_monic()) throw Error(ErrorKind::NotMonic, "input must be monic");
  const PrimeField& F = f.field();
  Factorization out(F);
  const int n = f.degree();
  if (n <= 0) return out;
  if (!is_squarefree(f)) throw Error(ErrorKind::NotSquarefree, "input must be squarefree");
  const int t = std::clamp(t_opt.value_or(static_cast<int>(nt::ceil_two_thirds_power(static_cast<std::uint64_t>(n)))),
                           1, n);
  FactorDegreeStats local;
  FactorDegreeStats& st = stats ? *stats : local;
  st = FactorDegreeStats{};
  st.t = t;

  // Stage 1: s = prod_{i=1}^t (x^(q^i) - x) mod f.
  const ModCtx ctx(f);
  const FrobeniusMap sigma(ctx);
  const Poly x = ctx.reduce(Poly::x(F));
  Poly xi = x, s = Poly::one(F);
  for (int i = 1; i <= t; ++i) {
    xi = sigma.apply(xi);
    s = ctx.mul(s, xi - x);
  }
  const Poly g = gcd(s, f);
  if (g.degree() > 0) {
    const DDFResult small = ddf(ModCtx(g), t);
    for (const auto& part : small.parts) {
      for (auto& h : edf(part.part, part.degree, rng)) out.add(std::move(h));
    }
  }

  // Stage 2.
  Poly cur = exact_div(f, g);
  const int budget = std::max(1, n / t);
  while (cur.degree() > 0) {
    if (st.oracle_rounds >= budget) throw Error(ErrorKind::LoopBudgetExceeded, "more than n/t oracle rounds");
    ++st.oracle_rounds;
    const int d = oracle(cur);
    if (d <= t || d > cur.degree()) throw Error(ErrorKind::OracleLied, "claimed degree out of range");
    const ModCtx cctx(cur);
    const Poly split = gcd(frobenius_power(cctx, static_cast<std::uint64_t>(d)) - Poly::x(F), cur);
    if (split.degree() <= 0) throw Error(ErrorKind::OracleLied, "claimed degree splits off nothing");
    split_by_divisors(split, d, t, rng, out);
    cur = exact_div(cur, split);
  }
  out.canonicalize();
  return out;
}

// ---------------------------------------------------------------------------

Poly CycloFactorSet::product(const PrimeField& field) const {
  Poly h = Poly::one(field);
  for (const auto& g : factors) h *= g;
  return h;
}

int find_order(std::uint64_t l, const CycloFactorSet& L, std::uint64_t bound, Rng& rng) {
  if (L.factors.empty()) throw Error(ErrorKind::BadInput, "empty factor set");
  const Poly& f0 = *L.factors.begin();
  const ModCtx ctx(f0);
  const std::uint64_t cap = bound + static_cast<std::uint64_t>(std::log2(static_cast<double>(bound) + 1)) + 8;
  std::set<Poly> seen{f0};
  Poly r = ctx.reduce(Poly::x(f0.field()));
  for (std::uint64_t e = 1; e <= cap; ++e) {
    r = ctx.pow(r, l);
    Poly fe = minpoly_mod(r, ctx, rng);
    if (L.factors.count(fe)) return static_cast<int>(e);
    if (!seen.insert(std::move(fe)).second) return 0;
  }
  throw Error(ErrorKind::InternalError, "find_order exceeded its loop bound");
}

CycloFactorSet find_cyclotomic(const Poly& g0, std::uint64_t n, Rng& rng) {
  const double ln = std::log(static_cast<double>(std::max<std::uint64_t>(n, 1)));
  const double lnln = std::log(std::log(static_cast<double>(std::max<std::uint64_t>(n, 3))));
  const auto N = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::floor(8.0 * ln * lnln)));
  const std::uint64_t hi = std::max<std::uint64_t>(n, 1);
  CycloFactorSet L{{g0}};
  for (std::uint64_t t = 0; t < N; ++t) {
    const std::uint64_t l = rng.uniform(1, hi);
    const int e = find_order(l, L, hi, rng);
    if (e <= 1) continue;
    const std::vector<Poly> snapshot(L.factors.begin(), L.factors.end());
    for (const auto& h : snapshot) {
      const ModCtx ctx(h);
      Poly r = ctx.reduce(Poly::x(h.field()));
      for (int i = 1; i < e; ++i) {
        r = ctx.pow(r, l);
        L.factors.insert(minpoly_mod(r, ctx, rng));
      }
    }
  }
  return L;
}

std::uint64_t find_k(std::uint64_t d, const Poly& g0, std::uint64_t bound, Rng& rng) {
  std::uint64_t k0 = 1;
  const ModCtx ctx(g0);
  for (auto t : nt::divisors(d)) {
    const std::uint64_t l = t + 1;
    if (!is_prime_u64(l)) continue;
    int e = 0;
    Poly h = g0;
    Poly r = ctx.reduce(Poly::x(g0.field()));
    while (find_order(l, CycloFactorSet{{h}}, bound, rng) == 0) {
      if (++e > 64) throw Error(ErrorKind::InternalError, "find_k exceeded its loop bound");
      r = ctx.pow(r, l);
      h = minpoly_mod(r, ctx, rng);
    }
    for (int i = 0; i < e; ++i) k0 *= l;
  }
  return k0;
}

std::vector<std::uint64_t> certificate_set(const std::map<std::uint64_t, int>& multiplicity, std::uint64_t p) {
  std::vector<std::uint64_t> S;
  for (const auto& [k, m] : multiplicity) {
    std::uint64_t pe = 1;
    while (pe <= static_cast<std::uint64_t>(m)) {
      S.push_back(k * pe);
      pe *= p;
    }
  }
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  return S;
}

DegreeCertificate find_T(const std::vector<FactorPower>& factors, std::uint64_t n, Rng& rng) {
  std::map<Poly, int> L0;
  int total = 0;
  for (const auto& fp : factors) {
    L0[fp.factor] += fp.multiplicity;
    total += fp.multiplicity;
  }
  DegreeCertificate cert;
  if (L0.empty()) return cert;
  const PrimeField F = L0.begin()->first.field();
  const int cap = total * 32;
  while (!L0.empty()) {
    if (cert.rounds >= cap) throw Error(ErrorKind::StuckError, "find_T made no progress");
    ++cert.rounds;
    const Poly g0 = L0.begin()->first;
    const CycloFactorSet L = find_cyclotomic(g0, n, rng);
    const Poly h = L.product(F);
    const auto d = static_cast<std::uint64_t>(h.degree());
    const std::uint64_t k0 = find_k(d, g0, n, rng);
    if (nt::totient(k0) != d || !divides(h, lambda_pow_minus_one(F, k0))) continue;
    if (!std::all_of(L.factors.begin(), L.factors.end(), [&](const Poly& g) { return L0.count(g) != 0; })) continue;
    ++cert.multiplicity[k0];
    for (const auto& g : L.factors) {
      if (--L0[g] == 0) L0.erase(g);
    }
  }
  cert.S = certificate_set(cert.multiplicity, F.modulus());
  return cert;
}

// ---------------------------------------------------------------------------

namespace {

// g(sigma)(x) = sum_j g_j x^(q^j) mod f.
bool annihilates_x(const Poly& g, const ModCtx& ctx) {
  const FrobeniusMap sigma(ctx);
  const PrimeField& F = ctx.field();
  Poly a = ctx.reduce(Poly::x(F));
  Poly acc(F);
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (j > 0) a = sigma.apply(a);
    if (g[j] != 0) acc += a.scaled(g[j]);
  }
  return acc.is_zero();
}

struct FrobReduction {
  const std::function<Poly(const Poly&)>& oracle;
  Rng& rng;
  FrobReductionDiagnostics& diag;

  // Returns false when the certificate did not account for every factor.
  bool split_along(const Poly& rem, const DegreeCertificate& cert, int B, Factorization& out) {
    std::vector<std::uint64_t> large;
    std::uint64_t sum = 0;
    for (auto s : cert.S) {
      sum += s;
      if (s > static_cast<std::uint64_t>(B) && s <= static_cast<std::uint64_t>(rem.degree())) large.push_back(s);
    }
    const auto above = static_cast<std::uint64_t>(
        std::count_if(cert.S.begin(), cert.S.end(), [B](std::uint64_t s) { return s > static_cast<std::uint64_t>(B); }));
    if (above * static_cast<std::uint64_t>(B) > sum) diag.budget_ok = false;
    if (large.empty()) return false;

    const ModCtx ctx(rem);
    const FrobTable table(ctx, large);
    const PrimeField& F = rem.field();
    Poly cur = rem;
    Factorization found(F);
    for (auto s : large) {
      if (cur.degree() <= 0) break;
      const Poly fs = gcd((table.at(s) - Poly::x(F)) % cur, cur);
      if (fs.degree() <= 0) continue;
      if (fs.degree() % static_cast<int>(s) != 0) return false;
      for (auto& h : edf(fs, static_cast<int>(s), rng)) found.add(std::move(h));
      cur = exact_div(cur, fs);
    }
    if (!cur.is_one() || found.product() != rem) return false;
    out.append(found, 1);
    return true;
  }

  Factorization run(const Poly& f, int depth) {
    diag.max_depth = std::max(diag.max_depth, depth);
    const PrimeField& F = f.field();
    Factorization out(F);
    const int n = f.degree();
    if (n <= 0) return out;
    const int B = static_cast<int>(nt::ceil_two_thirds_power(static_cast<std::uint64_t>(n)));

    // Line 1: factors of degree <= B.
    const DDFResult small = ddf(ModCtx(f), B);
    for (const auto& part : small.parts) {
      for (auto& h : edf(part.part, part.degree, rng)) out.add(std::move(h));
    }
    const Poly rem = small.remainder;
    if (rem.degree() <= 0) return out;
    if (rem.degree() < 2 * (B + 1)) {
      out.add(rem);
      return out;
    }

    // Line 2.
    ++diag.oracle_calls;
    const Poly g = oracle(rem);
    const ModCtx ctx(rem);
    if (!g.is_monic() || g.degree() < 1 || g.degree() > rem.degree() || !annihilates_x(g, ctx)) {
      throw Error(ErrorKind::OracleInconsistent, "oracle polynomial does not annihilate Frobenius");
    }
    // With two or more factors lambda - 1 is shared, so deg g < deg rem.
    if (g.degree() == rem.degree()) {
      out.add(rem);
      return out;
    }

    // Line 3: factor g with multiplicities.
    std::vector<FactorPower> gfactors;
    for (const auto& sq : squarefree_decompose(g)) {
      const Factorization sub = run(sq.factor, depth + 1);
      for (const auto& fp : sub.factors) gfactors.push_back({fp.factor, fp.multiplicity * sq.multiplicity});
    }

    // Lines 4-6, retried with fresh randomness when the split is incomplete.
    for (int attempt = 0; attempt < 3; ++attempt) {
      if (attempt > 0) ++diag.find_t_retries;
      try {
        const DegreeCertificate cert = find_T(gfactors, static_cast<std::uint64_t>(n), rng);
        if (split_along(rem, cert, B, out)) return out;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::StuckError && e.kind() != ErrorKind::InternalError) throw;
      }
    }
    diag.fallback_used = true;
    out.append(factor_squarefree(rem, rng), 1);
    return out;
  }
};

}  // namespace

Factorization reduce_factor_via_frobminpoly(const Poly& f, const std::function<Poly(const Poly&)>& oracle, Rng& rng,
                                            FrobReductionDiagnostics* diag) {
  if (!f.is_monic()) throw Error(ErrorKind::NotMonic, "input must be monic");
  if (f.degree() > 0 && !is_squarefree(f)) throw Error(ErrorKind::NotSquarefree, "input must be squarefree");
  FrobReductionDiagnostics local;
  FrobReductionDiagnostics& d = diag ? *diag : local;
  d = FrobReductionDiagnostics{};
  FrobReduction red{oracle, rng, d};
  Factorization out = red.run(f, 1);
  out.canonicalize();
  if (out.product() != f) throw Error(ErrorKind::InternalError, "factor product mismatch");
  return out;
}

// ---------------------------------------------------------------------------

CarlitzDegree factor_degree_via_carlitz(const Poly& f, const std::function<Poly(const Poly&)>& oracle,
                                        bool require_validation) {
  const int d = smallest_degree_via_carlitz(f, oracle(f));
  const ModCtx ctx(f);
  const bool ok = gcd(frobenius_power(ctx, static_cast<std::uint64_t>(d)) - Poly::x(f.field()), f).degree() > 0;
  if (require_validation && !ok) throw Error(ErrorKind::ValidationFailed, "degree does not split f");
  return {d, ok};
}

BinarySearchResult factor_degree_via_determinant(const Poly& f, DeterminantKind which) {
  if (!f.is_monic()) throw Error(ErrorKind::NotMonic, "input must be monic");
  if (f.degree() < 1) throw Error(ErrorKind::BadInput, "input must be nonconstant");
  if (!is_squarefree(f)) throw Error(ErrorKind::NotSquarefree, "input must be squarefree");
  const ModCtx ctx(f);
  const int n = f.degree();
  const FrobTable frob = FrobTable::consecutive(ctx, static_cast<std::uint64_t>(n));
  return largest_degree_binary_search(n, [&](int m) {
    if (which == DeterminantKind::moore) return moore_zero_test(ctx, m, frob);
    return vandermonde_det(ctx, m, frob).is_zero();
  });
}

Poly easy_directions(const Poly& f, EasyTarget target, Rng& rng) {
  const Factorization fz = factor(f, rng);
  const PrimeField& F = f.field();
  switch (target) {
    case EasyTarget::frob_minpoly: {
      Poly g = Poly::one(F);
      for (const auto& fp : fz.factors) g = lcm(g, lambda_pow_minus_one(F, static_cast<std::uint64_t>(fp.factor.degree())));
      return g;
    }
    case EasyTarget::frob_charpoly: {
      std::vector<int> degrees;
      for (const auto& fp : fz.factors) degrees.push_back(fp.factor.degree());
      return frob_charpoly_from_degrees(degrees, F);
    }
    case EasyTarget::carlitz_charpoly:
      return carlitz_charpoly_from_factors(fz);
  }
  throw Error(ErrorKind::BadInput, "unknown target");
}

}  // namespace fqr
