#include "fqreduce/factor.hpp"

#include <algorithm>
#include <cmath>

namespace fqr {

namespace {

thread_local std::uint64_t g_engine_calls = 0;

void require_monic_nonconstant(const Poly& f) {
  if (f.degree() < 1) throw Error(ErrorKind::BadInput, "polynomial must be nonconstant");
  if (!f.is_monic()) throw Error(ErrorKind::NotMonic, "polynomial must be monic");
}

Poly gcd_with(const Poly& rem, const Poly& h) { return gcd(rem, h % rem); }

}  // namespace

std::uint64_t engine_calls() noexcept { return g_engine_calls; }

DDFResult ddf(const ModCtx& ctx, int up_to, DDFStrategy strategy) {
  ++g_engine_calls;
  const Poly& f = ctx.modulus();
  const PrimeField& F = ctx.field();
  if (!is_squarefree(f)) throw Error(ErrorKind::NotSquarefree, "ddf needs a squarefree input");
  const int n = f.degree();
  const int t = std::min(up_to, n);
  const Poly x = ctx.reduce(Poly::x(F));
  DDFResult out{{}, f};
  Poly& rem = out.remainder;

  // Everything below degree `done` is gone; rem is irreducible once it is
  // too small to hold two factors of degree > done.
  auto finish_if_single = [&](int done) {
    if (rem.degree() > 0 && rem.degree() < 2 * (done + 1)) {
      if (rem.degree() <= t) {
        out.parts.push_back({rem, rem.degree()});
        rem = Poly::one(F);
      }
      return true;
    }
    return rem.degree() <= 0;
  };

  const FrobeniusMap sigma(ctx);
  if (strategy == DDFStrategy::plain) {
    Poly h = x;
    for (int d = 1; d <= t; ++d) {
      if (finish_if_single(d - 1)) break;
      h = sigma.apply(h);
      Poly g = gcd_with(rem, h - x);
      if (!g.is_one()) {
        if (g.degree() % d != 0) throw Error(ErrorKind::NotSquarefree, "inconsistent degree split");
        rem = exact_div(rem, g);
        out.parts.push_back({std::move(g), d});
      }
    }
    return out;
  }

  if (t < 1) return out;
  const int ell = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(t))));
  std::vector<Poly> baby;  // x^(q^i), i < ell
  baby.reserve(static_cast<std::size_t>(ell) + 1);
  baby.push_back(x);
  for (int i = 1; i <= ell; ++i) baby.push_back(sigma.apply(baby.back()));
  const PowerTable giant_step(ctx, baby[static_cast<std::size_t>(ell)]);
  Poly H = baby[static_cast<std::size_t>(ell)];  // x^(q^(ell j)) for j = 1
  for (int j = 1; (j - 1) * ell < t; ++j) {
    if (j > 1) H = giant_step.compose(H);
    if (finish_if_single((j - 1) * ell)) break;
    const ModCtx rctx(rem);
    const Poly Hr = H % rem;
    Poly interval = rctx.reduce(Poly::one(F));
    for (int i = 0; i < ell; ++i) interval = rctx.mul(interval, Hr - baby[static_cast<std::size_t>(i)] % rem);
    Poly G = gcd(rem, interval);
    if (G.is_one()) continue;
    for (int i = ell - 1; i >= 0 && G.degree() > 0; --i) {
      const int d = ell * j - i;
      if (d > t) continue;
      Poly g = gcd_with(G, H - baby[static_cast<std::size_t>(i)]);
      if (g.is_one()) continue;
      if (g.degree() % d != 0) throw Error(ErrorKind::NotSquarefree, "inconsistent degree split");
      G = exact_div(G, g);
      rem = exact_div(rem, g);
      out.parts.push_back({std::move(g), d});
    }
  }
  return out;
}

namespace {

// One random splitting polynomial modulo g for degree-d components.
Poly splitter(const Poly& g, int d, const FrobeniusMap& sigma, Rng& rng) {
  const ModCtx& ctx = sigma.ctx();
  const PrimeField& F = ctx.field();
  const Poly a = random_below(g.degree(), F, rng);
  Poly cur = a;
  if (F.modulus() == 2) {
    Poly trace = a;
    for (int i = 1; i < d; ++i) {
      cur = sigma.apply(cur);
      trace += cur;
    }
    return trace;
  }
  Poly norm = a;
  for (int i = 1; i < d; ++i) {
    cur = sigma.apply(cur);
    norm = ctx.mul(norm, cur);
  }
  return ctx.pow(norm, (F.modulus() - 1) / 2) - Poly::one(F);
}

void edf_rec(const Poly& g, int d, Rng& rng, int budget, std::vector<Poly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const ModCtx ctx(g);
  const FrobeniusMap sigma(ctx);
  for (int attempt = 0; attempt < budget; ++attempt) {
    Poly s = splitter(g, d, sigma, rng);
    if (s.is_zero()) continue;
    Poly h = gcd(g, s);
    if (h.degree() <= 0 || h.degree() == g.degree()) continue;
    edf_rec(h, d, rng, budget, out);
    edf_rec(exact_div(g, h), d, rng, budget, out);
    return;
  }
  throw Error(ErrorKind::InternalError, "equal-degree split did not separate after retry budget");
}

}  // namespace

std::vector<Poly> edf(const Poly& g, int d, Rng& rng) {
  ++g_engine_calls;
  require_monic_nonconstant(g);
  if (d < 1 || g.degree() % d != 0) throw Error(ErrorKind::BadInput, "degree does not divide deg g");
  const int budget = std::max(64, static_cast<int>(64 * std::ceil(std::log2(static_cast<double>(g.degree())))));
  std::vector<Poly> out;
  edf_rec(g, d, rng, budget, out);
  std::sort(out.begin(), out.end());
  return out;
}

Factorization factor_squarefree(const Poly& f, Rng& rng) {
  ++g_engine_calls;
  require_monic_nonconstant(f);
  Factorization fz(f.field());
  const DDFResult split = ddf(ModCtx(f), kAllDegrees, DDFStrategy::bsgs);
  for (const auto& part : split.parts) {
    for (auto& p : edf(part.part, part.degree, rng)) fz.add(std::move(p));
  }
  fz.canonicalize();
  return fz;
}

Factorization factor(const Poly& f, Rng& rng) {
  ++g_engine_calls;
  require_monic_nonconstant(f);
  Factorization fz(f.field());
  for (const auto& sq : squarefree_decompose(f)) fz.append(factor_squarefree(sq.factor, rng), sq.multiplicity);
  fz.canonicalize();
  if (!(fz.product() == f)) throw Error(ErrorKind::InternalError, "factor product check failed");
  return fz;
}

Factorization trial_factor(const Poly& f) {
  ++g_engine_calls;
  require_monic_nonconstant(f);
  const PrimeField& F = f.field();
  const int half = (f.degree() + 1) / 2;
  const double candidates = std::pow(static_cast<double>(F.modulus()), half);
  if (candidates > static_cast<double>(1 << 22)) throw Error(ErrorKind::TooLarge, "too many trial divisors");
  Factorization fz(F);
  Poly rem = f;
  for (int d = 1; 2 * d <= rem.degree(); ++d) {
    for_each_monic(F, d, [&](const Poly& c) {
      if (c.degree() > rem.degree()) return;
      int mult = 0;
      for (;;) {
        auto [q, r] = divrem(rem, c);
        if (!r.is_zero()) break;
        rem = std::move(q);
        ++mult;
      }
      if (mult) fz.add(c, mult);
    });
  }
  if (rem.degree() > 0) fz.add(rem);
  fz.canonicalize();
  return fz;
}

int factor_degree_ref(const Poly& f) {
  ++g_engine_calls;
  require_monic_nonconstant(f);
  const ModCtx ctx(f);
  const FrobeniusMap sigma(ctx);
  const Poly x = ctx.reduce(Poly::x(f.field()));
  Poly h = x;
  for (int d = 1; d < f.degree(); ++d) {
    h = sigma.apply(h);
    if (!gcd(f, h - x).is_one()) return d;
  }
  return f.degree();
}

}  // namespace fqr
