#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace fqr::nt {

/// (prime, exponent) pairs by trial division, ascending primes.
std::vector<std::pair<std::uint64_t, int>> factor_int(std::uint64_t n);

/// All positive divisors, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t totient(std::uint64_t n);
int mobius(std::uint64_t n);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// Largest e with base^e <= n (base >= 2, n >= 1).
int floor_log(std::uint64_t n, std::uint64_t base);

/// Smallest integer c with c^3 >= n^2, i.e. ceil(n^(2/3)).
std::uint64_t ceil_two_thirds_power(std::uint64_t n);

std::uint64_t isqrt(std::uint64_t n);

}  // namespace fqr::nt
