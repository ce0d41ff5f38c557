#include "fqreduce/frobenius.hpp"

#include <set>

#include "fqreduce/factor.hpp"
#include "fqreduce/polyalg.hpp"

namespace fqr {

FrobTable::FrobTable(const ModCtx& ctx) : ctx_(ctx) {
  entries_.emplace(0, ctx_.reduce(Poly::x(ctx_.field())));
  entries_.emplace(1, ctx_.frobenius());
}

FrobTable::FrobTable(const ModCtx& ctx, const std::vector<std::uint64_t>& indices) : FrobTable(ctx) {
  for (auto i : indices) ensure(i);
}

FrobTable FrobTable::consecutive(const ModCtx& ctx, std::uint64_t last) {
  FrobTable t(ctx);
  FrobeniusMap sigma(ctx);
  Poly cur = t.entries_.at(1);
  for (std::uint64_t i = 2; i <= last; ++i) {
    cur = sigma.apply(cur);
    t.entries_.emplace(i, cur);
  }
  return t;
}

const Poly& FrobTable::at(std::uint64_t i) const {
  auto it = entries_.find(i);
  if (it == entries_.end()) throw Error(ErrorKind::BadInput, "Frobenius power " + std::to_string(i) + " not in table");
  return it->second;
}

void FrobTable::ensure(std::uint64_t i) {
  if (contains(i)) return;
  std::uint64_t bit = 1;
  while (bit * 2 <= i && bit * 2 > bit) {
    if (!contains(bit * 2)) {
      const Poly& half = entries_.at(bit);
      entries_.emplace(bit * 2, modcompose(half, half, ctx_));
    }
    bit *= 2;
  }
  Poly acc = entries_.at(0);
  std::uint64_t have = 0;
  for (std::uint64_t b = bit; b > 0; b /= 2) {
    if (!(i & b)) continue;
    acc = have == 0 ? entries_.at(b) : modcompose(entries_.at(b), acc, ctx_);
    have += b;
  }
  entries_.emplace(i, std::move(acc));
}

Poly frobenius_power(const ModCtx& ctx, std::uint64_t i) { return FrobTable(ctx, {i}).at(i); }

Felt LinearFunctional::operator()(const Poly& a, const PrimeField& field) const {
  Felt s = 0;
  for (std::size_t j = 0; j < weights.size() && j < a.size(); ++j) s = field.add(s, field.mul(weights[j], a[j]));
  return s;
}

std::vector<Felt> automorphism_projection(const ModCtx& ctx, const Poly& alpha, const LinearFunctional& u,
                                          std::size_t count) {
  FrobeniusMap sigma(ctx);
  Poly a = ctx.reduce(alpha);
  std::vector<Felt> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    a = sigma.apply(a);
    out.push_back(u(a, ctx.field()));
  }
  return out;
}

namespace {

Matrix matrix_of(const PowerTable& table) {
  const std::size_t n = table.dim();
  Matrix m(table.ctx().field(), n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& col = table.column(k);
    for (std::size_t r = 0; r < n; ++r) m(r, k) = col[r];
  }
  return m;
}

}  // namespace

Matrix frobenius_matrix(const ModCtx& ctx) { return matrix_of(FrobeniusMap(ctx).table()); }

Poly frob_minpoly_independent(const ModCtx& ctx, Rng& rng, FrobMinPolyStats* stats) {
  constexpr int kTrials = 3;
  constexpr int kExtraTrials = 8;
  const PrimeField& F = ctx.field();
  const auto n = static_cast<std::size_t>(ctx.degree());
  const FrobeniusMap sigma(ctx);
  const Matrix M = matrix_of(sigma.table());
  FrobMinPolyStats local;
  FrobMinPolyStats& st = stats ? *stats : local;
  st = {};

  Poly acc = Poly::one(F);
  for (int t = 1; t <= kTrials + kExtraTrials; ++t) {
    ++st.trials;
    Poly a = random_below(static_cast<int>(n), F, rng);
    LinearFunctional u{std::vector<Felt>(n)};
    for (auto& w : u.weights) w = rng.felt(F);
    std::vector<Felt> seq;
    seq.reserve(2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i) {
      seq.push_back(u(a, F));
      a = sigma.apply(a);
    }
    acc = lcm(acc, berlekamp_massey(seq, F));
    if (t >= kTrials && evaluate_at_matrix(acc, M).is_zero()) return acc;
  }
  st.matrix_fallback = true;
  return matrix_minpoly(M);
}

Poly frob_minpoly_reference(const Poly& f, Rng& rng) {
  const PrimeField& F = f.field();
  const Factorization fz = factor(f, rng);
  std::set<int> degrees;
  for (const auto& fp : fz.factors) degrees.insert(fp.factor.degree());
  Poly g = Poly::one(F);
  for (int d : degrees) g = lcm(g, Poly::monomial(F, 1, static_cast<std::size_t>(d)) - Poly::one(F));
  return g;
}

Poly frob_minpoly(const Poly& f, Rng& rng, FrobMode mode) {
  if (mode == FrobMode::reference) return frob_minpoly_reference(f, rng);
  return frob_minpoly_independent(ModCtx(f), rng);
}

Poly frob_charpoly_from_degrees(const std::vector<int>& degrees, const PrimeField& field) {
  if (degrees.empty()) throw Error(ErrorKind::BadInput, "empty degree multiset");
  Poly g = Poly::one(field);
  for (int d : degrees) g *= Poly::monomial(field, 1, static_cast<std::size_t>(d)) - Poly::one(field);
  return g;
}

Poly frob_charpoly_direct(const ModCtx& ctx) { return charpoly(frobenius_matrix(ctx)); }

}  // namespace fqr
