#include "fqreduce/numtheory.hpp"

#include <algorithm>
#include <cmath>

namespace fqr::nt {

std::vector<std::pair<std::uint64_t, int>> factor_int(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (auto [prime, e] : factor_int(n)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= prime;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t totient(std::uint64_t n) {
  std::uint64_t r = n;
  for (auto [prime, e] : factor_int(n)) r = r / prime * (prime - 1);
  return r;
}

int mobius(std::uint64_t n) {
  int sign = 1;
  for (auto [prime, e] : factor_int(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

int floor_log(std::uint64_t n, std::uint64_t base) {
  int e = 0;
  std::uint64_t v = 1;
  while (v <= n / base) {
    v *= base;
    ++e;
  }
  return e;
}

std::uint64_t ceil_two_thirds_power(std::uint64_t n) {
  const auto target = static_cast<unsigned __int128>(n) * n;
  auto c = static_cast<std::uint64_t>(std::cbrt(static_cast<double>(n) * static_cast<double>(n)));
  while (c > 0 && static_cast<unsigned __int128>(c - 1) * (c - 1) * (c - 1) >= target) --c;
  while (static_cast<unsigned __int128>(c) * c * c < target) ++c;
  return c;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace fqr::nt
