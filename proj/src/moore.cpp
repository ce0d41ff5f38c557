#include "fqreduce/moore.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fqreduce/numtheory.hpp"

namespace fqr {

bool covers_differences(const std::vector<std::uint64_t>& s, std::uint64_t m) {
  std::vector<bool> seen(m + 1, false);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s[j] > s[i] && s[j] - s[i] <= m) seen[s[j] - s[i]] = true;
    }
  }
  for (std::uint64_t d = 1; d <= m; ++d) {
    if (!seen[d]) return false;
  }
  return true;
}

IndexSetSm build_Sm(std::uint64_t m) {
  if (m < 1) throw Error(ErrorKind::BadInput, "S_m needs m >= 1");
  const std::uint64_t b = nt::isqrt(m);
  std::set<std::uint64_t> s;
  for (std::uint64_t i = 0; i < b; ++i) s.insert(i);
  for (std::uint64_t j = 1; j < b; ++j) s.insert(b * j);
  s.insert(b * b);
  s.insert(m);
  std::vector<std::uint64_t> out(s.begin(), s.end());
  if (covers_differences(out, m)) return {m, out};

  s.clear();
  for (std::uint64_t i = 0; i <= b; ++i) s.insert(i);
  const std::uint64_t blocks = (m + b) / (b + 1);
  for (std::uint64_t k = 0; k < blocks; ++k) s.insert(m > k * (b + 1) ? m - k * (b + 1) : 0);
  s.insert(m);
  return {m, std::vector<std::uint64_t>(s.begin(), s.end())};
}

Poly moore_det_direct(const ModCtx& ctx, int m) {
  if (m < 0 || m > ctx.degree()) throw Error(ErrorKind::BadInput, "m must lie in [0, deg f]");
  if (m > 11) throw Error(ErrorKind::TooLarge, "direct Moore determinant limited to m <= 11");
  const PrimeField& F = ctx.field();
  const auto k = static_cast<std::size_t>(m) + 1;
  const FrobTable frob = FrobTable::consecutive(ctx, static_cast<std::uint64_t>(m));
  std::vector<std::vector<Poly>> a(k);
  for (std::size_t i = 0; i < k; ++i) {
    Poly cur = ctx.reduce(Poly::one(F));
    for (std::size_t j = 0; j < k; ++j) {
      a[i].push_back(cur);
      cur = ctx.mul(cur, frob.at(i));
    }
  }
  return det_division_free<Poly>(
      a, Poly(F), ctx.reduce(Poly::one(F)), [&ctx](const Poly& u, const Poly& v) { return ctx.mul(u, v); },
      [](const Poly& u, const Poly& v) { return u + v; }, [](const Poly& u) { return -u; });
}

bool moore_zero_test(const ModCtx& ctx, int m, const FrobTable& frob) {
  if (m < 1) throw Error(ErrorKind::BadInput, "m must be >= 1");
  const Poly x = ctx.reduce(Poly::x(ctx.field()));
  Poly acc = ctx.reduce(Poly::one(ctx.field()));
  for (int d = 1; d <= m; ++d) {
    acc = ctx.mul(acc, frob.at(static_cast<std::uint64_t>(d)) - x);
    if (acc.is_zero()) return true;
  }
  return false;
}

Poly vandermonde_det(const ModCtx& ctx, int m, const FrobTable& frob) {
  if (m < 1) throw Error(ErrorKind::BadInput, "m must be >= 1");
  const IndexSetSm S = build_Sm(static_cast<std::uint64_t>(m));
  Poly acc = ctx.reduce(Poly::one(ctx.field()));
  for (std::size_t j = 0; j < S.elements.size() && !acc.is_zero(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = ctx.mul(acc, frob.at(S.elements[j]) - frob.at(S.elements[i]));
      if (acc.is_zero()) break;
    }
  }
  return acc;
}

GcdSplit vandermonde_gcd_split(const ModCtx& ctx, int m, const FrobTable& frob) {
  if (m < 1) throw Error(ErrorKind::BadInput, "m must be >= 1");
  const Poly& f = ctx.modulus();
  const Poly x = ctx.reduce(Poly::x(ctx.field()));
  Poly acc = ctx.reduce(Poly::one(ctx.field()));
  for (int i = 1; i <= m && !acc.is_zero(); ++i) acc = ctx.mul(acc, frob.at(static_cast<std::uint64_t>(i)) - x);
  Poly low = gcd(acc, f);
  Poly high = exact_div(f, low);
  return {std::move(low), std::move(high)};
}

BinarySearchResult largest_degree_binary_search(int n, const std::function<bool(int)>& zero_at) {
  if (n < 1) throw Error(ErrorKind::BadInput, "degree must be >= 1");
  std::map<int, bool> seen;
  int calls = 0;
  auto ask = [&](int m) {
    ++calls;
    const bool z = zero_at(m);
    for (const auto& [k, v] : seen) {
      if ((k < m && v && !z) || (k > m && !v && z)) {
        throw Error(ErrorKind::OracleInconsistent, "zero test is not monotone in m");
      }
    }
    seen[m] = z;
    return z;
  };
  if (!ask(n)) throw Error(ErrorKind::OracleInconsistent, "zero test false at m = deg f");
  int lo = 1, hi = n;  // answer in [lo, hi], zero_at(hi) true
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (ask(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return {hi, calls};
}

}  // namespace fqr
