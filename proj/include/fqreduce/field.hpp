#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "fqreduce/error.hpp"

namespace fqr {

/// Canonical residue in [0, p). Every PrimeField operation returns canonical
/// values; the alias exists so signatures say what they hold.
using Felt = std::uint64_t;

using BigInt = boost::multiprecision::cpp_int;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n) noexcept;

/// Prime field F_p with p < 2^62. Immutable and cheap to copy.
class PrimeField {
 public:
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

  /// Throws NotPrime or TooLarge.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const noexcept { return p_; }
  std::uint64_t characteristic() const noexcept { return p_; }

  Felt add(Felt a, Felt b) const noexcept {
    Felt s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Felt sub(Felt a, Felt b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Felt neg(Felt a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Felt mul(Felt a, Felt b) const noexcept {
    return static_cast<Felt>(static_cast<unsigned __int128>(a) * b % p_);
  }
  Felt reduce(unsigned __int128 v) const noexcept { return static_cast<Felt>(v % p_); }
  Felt from_int(std::int64_t v) const noexcept;

  /// Throws DivisionByZero for a == 0.
  Felt inv(Felt a) const;
  Felt pow(Felt a, std::uint64_t e) const noexcept;
  Felt pow(Felt a, const BigInt& e) const;

  /// True when products of two residues summed n times fit in 128 bits
  /// without intermediate reduction.
  bool small() const noexcept { return p_ < (std::uint64_t{1} << 32); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

/// Counter-based generator (splitmix64 finalizer over seed + counter). Same
/// seed gives the same stream; no hidden global state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept : seed_(seed) {}

  std::uint64_t next() noexcept;
  /// Uniform in [lo, hi] by rejection; throws EmptyRange if lo > hi.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// Uniform in [0, bound) for bound >= 1.
  std::uint64_t below(std::uint64_t bound) noexcept;
  Felt felt(const PrimeField& field) noexcept { return below(field.modulus()); }

  /// Independent generator for a sub-task; does not advance this stream.
  Rng child(std::uint64_t tag) const noexcept;

  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace fqr
