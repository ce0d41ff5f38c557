#include "fqreduce/modular.hpp"

#include <algorithm>
#include <cmath>

namespace fqr {

namespace {

// rev(f)^-1 mod x^prec by Newton iteration g <- g (2 - r g).
std::vector<Felt> reversal_inverse(const Poly& f, std::size_t prec) {
  const PrimeField& F = f.field();
  const Poly rev = f.reversed(f.size());
  Poly g = Poly::one(F);
  std::size_t k = 1;
  while (k < prec) {
    k = std::min(2 * k, prec);
    Poly e = (rev.truncated(k) * g).truncated(k);
    Poly two_minus = Poly::constant(F, 2 % F.modulus()) - e;
    g = (g * two_minus).truncated(k);
  }
  std::vector<Felt> out = g.coeffs();
  out.resize(prec, 0);
  return out;
}

}  // namespace

ModCtx::ModCtx(Poly modulus) : f_(std::move(modulus)), cache_(std::make_shared<Cache>()) {
  if (f_.degree() < 1) throw Error(ErrorKind::BadInput, "modulus must have degree >= 1");
  if (!f_.is_monic()) throw Error(ErrorKind::NotMonic, "modulus must be monic");
  inv_rev_ = reversal_inverse(f_, static_cast<std::size_t>(f_.degree()));
}

Poly ModCtx::reduce(const Poly& a) const {
  if (!(a.field() == field())) throw Error(ErrorKind::FieldMismatch, "reduce over a different field");
  const int n = degree();
  const int da = a.degree();
  if (da < n) return a;
  if (da > 2 * n - 1) return a % f_;
  const PrimeField& F = field();
  const auto qlen = static_cast<std::size_t>(da - n + 1);
  // Quotient from the reversed product, truncated to its length.
  Poly arev = a.reversed(static_cast<std::size_t>(da + 1)).truncated(qlen);
  std::vector<Felt> inv(inv_rev_.begin(), inv_rev_.begin() + static_cast<std::ptrdiff_t>(qlen));
  std::vector<Felt> prod = kernel::mul(arev.coeffs(), inv, F);
  prod.resize(qlen, 0);
  Poly q = Poly(F, std::move(prod)).reversed(qlen);
  Poly r = (a - q * f_).truncated(static_cast<std::size_t>(n));
  return r;
}

Poly ModCtx::pow(const Poly& base, std::uint64_t e) const {
  Poly b = reduce(base);
  Poly result = reduce(Poly::one(field()));
  while (e) {
    if (e & 1) result = mul(result, b);
    e >>= 1;
    if (e) b = sqr(b);
  }
  return result;
}

Poly ModCtx::pow(const Poly& base, const BigInt& e) const {
  if (e < 0) throw Error(ErrorKind::BadInput, "negative exponent");
  Poly result = reduce(Poly::one(field()));
  if (e == 0) return result;
  const Poly b = reduce(base);
  const auto top = boost::multiprecision::msb(e);
  for (auto bit = static_cast<std::ptrdiff_t>(top); bit >= 0; --bit) {
    result = sqr(result);
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(bit))) result = mul(result, b);
  }
  return result;
}

const Poly& ModCtx::frobenius() const {
  std::call_once(cache_->once, [this] {
    cache_->xq = std::make_unique<Poly>(pow(Poly::x(field()), field().modulus()));
  });
  return *cache_->xq;
}

Poly modpow(const Poly& base, const BigInt& e, const ModCtx& ctx) { return ctx.pow(base, e); }

Poly modcompose(const Poly& g, const Poly& h, const ModCtx& ctx, ComposeStrategy strategy) {
  const PrimeField& F = ctx.field();
  const Poly hr = ctx.reduce(h);
  if (g.is_zero()) return Poly(F);
  const int dg = g.degree();
  if (strategy == ComposeStrategy::horner) {
    Poly r(F);
    for (int i = dg; i >= 0; --i) {
      r = ctx.mul(r, hr);
      r += Poly::constant(F, g[static_cast<std::size_t>(i)]);
    }
    return r;
  }
  const auto n = static_cast<std::size_t>(ctx.degree());
  const auto k = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(dg + 1))));
  std::vector<Poly> baby;
  baby.reserve(k + 1);
  baby.push_back(ctx.reduce(Poly::one(F)));
  for (std::size_t i = 1; i <= k; ++i) baby.push_back(ctx.mul(baby.back(), hr));
  const Poly& giant = baby[k];
  const std::size_t blocks = (static_cast<std::size_t>(dg) + k) / k;
  Poly r(F);
  for (std::size_t j = blocks; j-- > 0;) {
    LinearAccumulator acc(F, n);
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t idx = j * k + i;
      if (idx > static_cast<std::size_t>(dg)) break;
      acc.add_scaled(baby[i].coeffs(), g[idx]);
    }
    Poly block(F, acc.finish());
    r = ctx.mul(r, giant) + block;
  }
  return r;
}

PowerTable::PowerTable(const ModCtx& ctx, const Poly& h) : ctx_(ctx), h_(ctx.reduce(h)), top_(ctx.field()) {
  const auto n = static_cast<std::size_t>(ctx.degree());
  cols_.reserve(n);
  Poly cur = ctx.reduce(Poly::one(ctx.field()));
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Felt> col = cur.coeffs();
    col.resize(n, 0);
    cols_.push_back(std::move(col));
    cur = ctx.mul(cur, h_);
  }
  top_ = cur;
}

Poly PowerTable::compose(const Poly& g) const {
  const PrimeField& F = ctx_.field();
  const std::size_t n = cols_.size();
  if (g.is_zero()) return Poly(F);
  const std::size_t blocks = (g.size() + n - 1) / n;
  Poly r(F);
  for (std::size_t j = blocks; j-- > 0;) {
    LinearAccumulator acc(F, n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t idx = j * n + i;
      if (idx >= g.size()) break;
      acc.add_scaled(cols_[i], g[idx]);
    }
    Poly block(F, acc.finish());
    r = r.is_zero() ? block : ctx_.mul(r, top_) + block;
  }
  return r;
}

}  // namespace fqr
