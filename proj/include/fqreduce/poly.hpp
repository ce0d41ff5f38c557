#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "fqreduce/field.hpp"

namespace fqr {

/// Dense univariate polynomial over F_p, coefficients ascending from degree 0.
/// Invariant: no trailing zero coefficient, so the zero polynomial is empty.
class Poly {
 public:
  explicit Poly(PrimeField field) : field_(field) {}
  /// Coefficients must already be canonical residues; throws BadInput otherwise.
  Poly(PrimeField field, std::vector<Felt> coeffs);

  /// Reduces signed integers mod p. Convenient for literals.
  static Poly from_ints(PrimeField field, std::initializer_list<std::int64_t> coeffs);
  static Poly from_ints(PrimeField field, std::span<const std::int64_t> coeffs);
  static Poly constant(PrimeField field, Felt c);
  static Poly monomial(PrimeField field, Felt c, std::size_t k);
  static Poly x(PrimeField field) { return monomial(field, 1, 1); }
  static Poly one(PrimeField field) { return constant(field, 1); }

  const PrimeField& field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  std::size_t size() const noexcept { return c_.size(); }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  Felt operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  Felt lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
  const std::vector<Felt>& coeffs() const noexcept { return c_; }

  Poly monic() const;
  Poly derivative() const;
  Felt eval(Felt point) const noexcept;
  Poly scaled(Felt c) const;
  Poly shifted(std::size_t k) const;
  Poly truncated(std::size_t len) const;
  /// x^(len-1) * p(1/x) for len > degree.
  Poly reversed(std::size_t len) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) noexcept {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }
  /// Canonical order: degree first, then coefficients compared from degree 0 up.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept;

 private:
  void trim() noexcept;
  void check_field(const Poly& o) const;

  PrimeField field_;
  std::vector<Felt> c_;
};

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
inline Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }
inline Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }
/// Quotient that must be exact; throws InternalError on nonzero remainder.
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

/// Monic gcd; throws BothZero when both inputs vanish.
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);
Poly pow(const Poly& base, std::uint64_t e);

/// gcd(f, f') == 1 with f' != 0 (for nonconstant f).
bool is_squarefree(const Poly& f);

namespace kernel {

/// Coefficient multiplication kernels, exposed so tests can compare them.
std::vector<Felt> mul_schoolbook(std::span<const Felt> a, std::span<const Felt> b, const PrimeField& F);
std::vector<Felt> mul_karatsuba(std::span<const Felt> a, std::span<const Felt> b, const PrimeField& F);
std::vector<Felt> mul(std::span<const Felt> a, std::span<const Felt> b, const PrimeField& F);

inline constexpr std::size_t kKaratsubaCutoff = 40;

}  // namespace kernel

/// Accumulates sum_i c_i * v_i over coefficient vectors with one reduction
/// per output slot. Used by composition and matrix-vector kernels.
class LinearAccumulator {
 public:
  LinearAccumulator(const PrimeField& field, std::size_t len);
  void add_scaled(std::span<const Felt> v, Felt c);
  std::vector<Felt> finish();

 private:
  const PrimeField* field_;
  std::vector<unsigned __int128> acc_;
  std::size_t pending_ = 0;
  void fold();
};

}  // namespace fqr
