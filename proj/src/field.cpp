#include "fqreduce/field.hpp"

#include <array>
#include <string>

namespace fqr {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::EmptyRange: return "EmptyRange";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::OracleLied: return "OracleLied";
    case ErrorKind::OracleInconsistent: return "OracleInconsistent";
    case ErrorKind::LoopBudgetExceeded: return "LoopBudgetExceeded";
    case ErrorKind::DegenerateDifference: return "DegenerateDifference";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::StuckError: return "StuckError";
    case ErrorKind::InternalError: return "InternalError";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) noexcept {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto w : kWitnesses) {
    if (n % w == 0) return n == w;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is exact below 3.3e24.
  for (auto a : kWitnesses) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= kMaxModulus) throw Error(ErrorKind::TooLarge, "modulus must be below 2^62, got " + std::to_string(p));
  if (!is_prime_u64(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
}

Felt PrimeField::from_int(std::int64_t v) const noexcept {
  auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  return static_cast<Felt>(r < 0 ? r + p : r);
}

Felt PrimeField::inv(Felt a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  // Extended Euclid on signed 128-bit to avoid overflow near 2^62.
  __int128 t = 0, new_t = 1;
  __int128 r = p_, new_r = a;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Felt>(t);
}

Felt PrimeField::pow(Felt a, std::uint64_t e) const noexcept { return powmod64(a, e, p_); }

Felt PrimeField::pow(Felt a, const BigInt& e) const {
  if (e < 0) throw Error(ErrorKind::BadInput, "negative exponent");
  if (e == 0) return 1 % p_;
  if (a == 0) return 0;
  // a^(p-1) = 1 for a != 0.
  BigInt reduced = e % (p_ - 1);
  return powmod64(a, static_cast<std::uint64_t>(reduced), p_);
}

namespace {

constexpr std::uint64_t splitmix(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t Rng::next() noexcept {
  ++counter_;
  return splitmix(seed_ ^ splitmix(counter_ * 0xd1b54a32d192ed03ULL));
}

std::uint64_t Rng::below(std::uint64_t bound) noexcept {
  if (bound <= 1) return 0;
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t x = next();
    if (x >= threshold) return x % bound;
  }
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw Error(ErrorKind::EmptyRange, "uniform: lo > hi");
  auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + below(span));
}

Rng Rng::child(std::uint64_t tag) const noexcept {
  return Rng(splitmix(seed_ ^ splitmix(tag + 0x632be59bd9b4e019ULL) ^ (counter_ << 17)));
}

}  // namespace fqr
