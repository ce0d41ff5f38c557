#include "fqreduce/polyalg.hpp"

#include <algorithm>
#include <cmath>

#include "fqreduce/linalg.hpp"
#include "fqreduce/numtheory.hpp"

namespace fqr {

void Factorization::append(const Factorization& other, int scale) {
  for (const auto& fp : other.factors) factors.push_back({fp.factor, fp.multiplicity * scale});
}

void Factorization::canonicalize() {
  std::sort(factors.begin(), factors.end(), [](const FactorPower& a, const FactorPower& b) { return a.factor < b.factor; });
  std::vector<FactorPower> merged;
  for (auto& fp : factors) {
    if (!merged.empty() && merged.back().factor == fp.factor) {
      merged.back().multiplicity += fp.multiplicity;
    } else {
      merged.push_back(std::move(fp));
    }
  }
  factors = std::move(merged);
}

Poly Factorization::product() const {
  Poly r = Poly::one(field);
  for (const auto& fp : factors) r *= pow(fp.factor, static_cast<std::uint64_t>(fp.multiplicity));
  return r;
}

std::vector<int> Factorization::degrees_with_multiplicity() const {
  std::vector<int> out;
  for (const auto& fp : factors) {
    for (int i = 0; i < fp.multiplicity; ++i) out.push_back(fp.factor.degree());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Factorization::count() const {
  std::size_t c = 0;
  for (const auto& fp : factors) c += static_cast<std::size_t>(fp.multiplicity);
  return c;
}

namespace {

// f(x) = g(x^p)  ->  g(x); valid on F_p where c^(1/p) = c.
Poly pth_root(const Poly& f) {
  const PrimeField& F = f.field();
  const auto p = F.modulus();
  std::vector<Felt> c;
  for (std::size_t i = 0; i < f.size(); i += p) c.push_back(f[i]);
  return Poly(F, std::move(c));
}

void sff(const Poly& f, int scale, std::vector<FactorPower>& out) {
  if (f.degree() <= 0) return;
  const Poly d = f.derivative();
  Poly c = d.is_zero() ? f : gcd(f, d);
  Poly w = exact_div(f, c);
  int i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly fac = exact_div(w, y);
    if (fac.degree() > 0) out.push_back({fac, i * scale});
    w = std::move(y);
    c = exact_div(c, w);
    ++i;
  }
  if (!c.is_one()) {
    sff(pth_root(c), scale * static_cast<int>(f.field().modulus()), out);
  }
}

}  // namespace

std::vector<FactorPower> squarefree_decompose(const Poly& f) {
  if (!f.is_monic()) throw Error(ErrorKind::NotMonic, "squarefree_decompose needs a monic input");
  std::vector<FactorPower> out;
  sff(f, 1, out);
  std::sort(out.begin(), out.end(), [](const FactorPower& a, const FactorPower& b) { return a.factor < b.factor; });
  return out;
}

Poly berlekamp_massey(std::span<const Felt> seq, const PrimeField& F) {
  std::vector<Felt> C{1}, B{1};
  std::size_t L = 0, m = 1;
  Felt b = 1;
  for (std::size_t n = 0; n < seq.size(); ++n) {
    Felt d = seq[n];
    for (std::size_t i = 1; i <= L && i < C.size(); ++i) d = F.add(d, F.mul(C[i], seq[n - i]));
    if (d == 0) {
      ++m;
      continue;
    }
    const Felt coef = F.mul(d, F.inv(b));
    std::vector<Felt> T = C;
    if (C.size() < B.size() + m) C.resize(B.size() + m, 0);
    for (std::size_t i = 0; i < B.size(); ++i) C[i + m] = F.sub(C[i + m], F.mul(coef, B[i]));
    if (2 * L <= n) {
      L = n + 1 - L;
      B = std::move(T);
      b = d;
      m = 1;
    } else {
      ++m;
    }
  }
  C.resize(L + 1, 0);
  std::reverse(C.begin(), C.end());
  return Poly(F, std::move(C));
}

namespace {

std::vector<Felt> dense(const Poly& a, std::size_t n) {
  std::vector<Felt> v = a.coeffs();
  v.resize(n, 0);
  return v;
}

Felt dot(const std::vector<Felt>& a, const std::vector<Felt>& b, const PrimeField& F) {
  unsigned __int128 acc = 0;
  int pending = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    acc += static_cast<unsigned __int128>(a[i]) * b[i];
    if (!F.small() && ++pending == 15) {
      acc %= F.modulus();
      pending = 0;
    }
  }
  return F.reduce(acc);
}

// Matrix of multiplication by R on F_p[x]/(h), columns x^j R mod h.
Matrix multiplication_matrix(const Poly& R, const ModCtx& ctx) {
  const PrimeField& F = ctx.field();
  const auto n = static_cast<std::size_t>(ctx.degree());
  const auto& h = ctx.modulus().coeffs();
  Matrix m(F, n, n);
  std::vector<Felt> col = dense(ctx.reduce(R), n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t r = 0; r < n; ++r) m(r, j) = col[r];
    // col <- x * col mod h
    const Felt top = col[n - 1];
    for (std::size_t r = n - 1; r > 0; --r) col[r] = F.sub(col[r - 1], F.mul(top, h[r]));
    col[0] = F.sub(0, F.mul(top, h[0]));
  }
  return m;
}

}  // namespace

Poly minpoly_mod_krylov(const Poly& r, const ModCtx& ctx) {
  const auto n = static_cast<std::size_t>(ctx.degree());
  const PrimeField& F = ctx.field();
  const Matrix mult = multiplication_matrix(r, ctx);
  std::vector<Felt> one(n, 0);
  one[0] = 1;
  return krylov_minpoly([&mult](const std::vector<Felt>& w) { return mult.apply(w); }, one, F);
}

Poly minpoly_mod(const Poly& r_in, const ModCtx& ctx, Rng& rng) {
  constexpr int kProjections = 3;
  const PrimeField& F = ctx.field();
  const auto n = static_cast<std::size_t>(ctx.degree());
  const Poly r = ctx.reduce(r_in);
  if (r.degree() <= 0) return Poly::x(F) - Poly::constant(F, r[0]);

  const std::size_t len = 2 * n;
  const auto k = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(len))));
  std::vector<std::vector<Felt>> baby;
  baby.reserve(k);
  Poly cur = Poly::one(F);
  for (std::size_t i = 0; i < k; ++i) {
    baby.push_back(dense(cur, n));
    cur = ctx.mul(cur, r);
  }
  const Matrix giant = multiplication_matrix(cur, ctx);  // cur = r^k

  Poly acc = Poly::one(F);
  for (int t = 0; t < kProjections; ++t) {
    std::vector<Felt> u(n);
    for (auto& x : u) x = rng.felt(F);
    std::vector<Felt> seq;
    seq.reserve(len);
    while (seq.size() < len) {
      for (std::size_t b = 0; b < k && seq.size() < len; ++b) seq.push_back(dot(u, baby[b], F));
      u = giant.apply_transposed(u);
    }
    acc = lcm(acc, berlekamp_massey(seq, F));
    if (modcompose(acc, r, ctx).is_zero()) return acc;
  }
  return minpoly_mod_krylov(r, ctx);
}

Poly cyclotomic(std::uint64_t k, const PrimeField& F) {
  if (k == 0) throw Error(ErrorKind::BadInput, "cyclotomic index must be >= 1");
  Poly num = Poly::one(F), den = Poly::one(F);
  for (auto d : nt::divisors(k)) {
    const int mu = nt::mobius(d);
    if (mu == 0) continue;
    Poly term = Poly::monomial(F, 1, static_cast<std::size_t>(k / d)) - Poly::one(F);
    (mu > 0 ? num : den) *= term;
  }
  return exact_div(num, den);
}

Poly random_below(int n, const PrimeField& F, Rng& rng) {
  std::vector<Felt> c(static_cast<std::size_t>(std::max(n, 0)));
  for (auto& x : c) x = rng.felt(F);
  return Poly(F, std::move(c));
}

Poly random_monic(int n, const PrimeField& F, Rng& rng) {
  std::vector<Felt> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = rng.felt(F);
  c[static_cast<std::size_t>(n)] = 1;
  return Poly(F, std::move(c));
}

Poly random_monic_squarefree(int n, const PrimeField& F, Rng& rng) {
  if (n < 1) throw Error(ErrorKind::BadInput, "degree must be >= 1");
  for (;;) {
    Poly f = random_monic(n, F, rng);
    if (is_squarefree(f)) return f;
  }
}

void for_each_monic(const PrimeField& F, int degree, const std::function<void(const Poly&)>& fn) {
  const auto p = F.modulus();
  std::vector<Felt> c(static_cast<std::size_t>(degree) + 1, 0);
  c.back() = 1;
  for (;;) {
    fn(Poly(F, c));
    std::size_t i = 0;
    while (i < static_cast<std::size_t>(degree)) {
      if (++c[i] < p) break;
      c[i] = 0;
      ++i;
    }
    if (i == static_cast<std::size_t>(degree)) return;
  }
}

}  // namespace fqr
