#include "fqreduce/poly.hpp"

#include <algorithm>
#include <string>

namespace fqr {

Poly::Poly(PrimeField field, std::vector<Felt> coeffs) : field_(field), c_(std::move(coeffs)) {
  for (Felt c : c_) {
    if (c >= field_.modulus()) {
      throw Error(ErrorKind::BadInput, "coefficient " + std::to_string(c) + " is not a canonical residue mod " +
                                           std::to_string(field_.modulus()));
    }
  }
  trim();
}

Poly Poly::from_ints(PrimeField field, std::initializer_list<std::int64_t> coeffs) {
  return from_ints(field, std::span<const std::int64_t>(coeffs.begin(), coeffs.size()));
}

Poly Poly::from_ints(PrimeField field, std::span<const std::int64_t> coeffs) {
  std::vector<Felt> c;
  c.reserve(coeffs.size());
  for (auto v : coeffs) c.push_back(field.from_int(v));
  return Poly(field, std::move(c));
}

Poly Poly::constant(PrimeField field, Felt c) {
  Poly p(field);
  if (c % field.modulus()) p.c_.push_back(c % field.modulus());
  return p;
}

Poly Poly::monomial(PrimeField field, Felt c, std::size_t k) {
  Poly p(field);
  c %= field.modulus();
  if (c == 0) return p;
  p.c_.assign(k + 1, 0);
  p.c_[k] = c;
  return p;
}

void Poly::trim() noexcept {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_field(const Poly& o) const {
  if (!(field_ == o.field_)) {
    throw Error(ErrorKind::FieldMismatch, "operands live over F_" + std::to_string(field_.modulus()) + " and F_" +
                                              std::to_string(o.field_.modulus()));
  }
}

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scaled(field_.inv(lead()));
}

Poly Poly::derivative() const {
  Poly d(field_);
  if (c_.size() <= 1) return d;
  d.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d.c_[i - 1] = field_.mul(c_[i], i % field_.modulus());
  d.trim();
  return d;
}

Felt Poly::eval(Felt point) const noexcept {
  Felt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, point), *it);
  return acc;
}

Poly Poly::scaled(Felt c) const {
  Poly r(field_);
  if (c == 0) return r;
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = field_.mul(c_[i], c);
  return r;
}

Poly Poly::shifted(std::size_t k) const {
  Poly r(field_);
  if (is_zero()) return r;
  r.c_.assign(k, 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::truncated(std::size_t len) const {
  Poly r(field_);
  r.c_.assign(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(std::min(len, c_.size())));
  r.trim();
  return r;
}

Poly Poly::reversed(std::size_t len) const {
  Poly r(field_);
  r.c_.assign(len, 0);
  for (std::size_t i = 0; i < c_.size() && i < len; ++i) r.c_[len - 1 - i] = c_[i];
  r.trim();
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_field(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_field(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly operator*(const Poly& a, const Poly& b) {
  a.check_field(b);
  Poly r(a.field_);
  if (a.is_zero() || b.is_zero()) return r;
  r.c_ = kernel::mul(a.c_, b.c_, a.field_);
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r(field_);
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = field_.neg(c_[i]);
  return r;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept {
  if (auto c = a.field_.modulus() <=> b.field_.modulus(); c != 0) return c;
  if (auto c = a.c_.size() <=> b.c_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, "divrem over different fields");
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  const PrimeField& F = a.field();
  if (a.degree() < b.degree()) return {Poly(F), a};
  std::vector<Felt> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const Felt lead_inv = F.inv(b.lead());
  std::vector<Felt> q(r.size() - db, 0);
  for (std::size_t i = r.size(); i-- > db;) {
    Felt c = r[i];
    if (c == 0) continue;
    c = F.mul(c, lead_inv);
    q[i - db] = c;
    const std::size_t off = i - db;
    for (std::size_t j = 0; j <= db; ++j) r[off + j] = F.sub(r[off + j], F.mul(c, bc[j]));
  }
  r.resize(db);
  return {Poly(F, std::move(q)), Poly(F, std::move(r))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw Error(ErrorKind::InternalError, "exact division left a remainder");
  return q;
}

bool divides(const Poly& d, const Poly& a) { return (a % d).is_zero(); }

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::BothZero, "gcd(0, 0)");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  return (exact_div(a, gcd(a, b)) * b).monic();
}

Poly pow(const Poly& base, std::uint64_t e) {
  Poly result = Poly::one(base.field());
  Poly b = base;
  while (e) {
    if (e & 1) result *= b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

bool is_squarefree(const Poly& f) {
  if (f.degree() <= 0) return true;
  Poly d = f.derivative();
  if (d.is_zero()) return false;
  return gcd(f, d).is_one();
}

// ---------------------------------------------------------------------------

LinearAccumulator::LinearAccumulator(const PrimeField& field, std::size_t len) : field_(&field), acc_(len, 0) {}

void LinearAccumulator::fold() {
  const auto p = field_->modulus();
  for (auto& v : acc_) v %= p;
  pending_ = 0;
}

void LinearAccumulator::add_scaled(std::span<const Felt> v, Felt c) {
  if (c == 0) return;
  // Products are below 2^124 for p < 2^62; fold before 15 of them can overflow.
  if (!field_->small() && pending_ >= 14) fold();
  const std::size_t n = std::min(v.size(), acc_.size());
  for (std::size_t i = 0; i < n; ++i) acc_[i] += static_cast<unsigned __int128>(v[i]) * c;
  ++pending_;
}

std::vector<Felt> LinearAccumulator::finish() {
  std::vector<Felt> out(acc_.size());
  for (std::size_t i = 0; i < acc_.size(); ++i) out[i] = field_->reduce(acc_[i]);
  return out;
}

namespace kernel {

std::vector<Felt> mul_schoolbook(std::span<const Felt> a, std::span<const Felt> b, const PrimeField& F) {
  if (a.empty() || b.empty()) return {};
  if (a.size() < b.size()) std::swap(a, b);
  const std::size_t n = a.size() + b.size() - 1;
  std::vector<Felt> out(n);
  if (F.small()) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t lo = k >= a.size() ? k - a.size() + 1 : 0;
      const std::size_t hi = std::min(k, b.size() - 1);
      unsigned __int128 acc = 0;
      for (std::size_t j = lo; j <= hi; ++j) acc += static_cast<std::uint64_t>(a[k - j] * b[j]);
      out[k] = F.reduce(acc);
    }
    return out;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t lo = k >= a.size() ? k - a.size() + 1 : 0;
    const std::size_t hi = std::min(k, b.size() - 1);
    unsigned __int128 acc = 0;
    int pending = 0;
    for (std::size_t j = lo; j <= hi; ++j) {
      acc += static_cast<unsigned __int128>(a[k - j]) * b[j];
      if (++pending == 15) {
        acc %= F.modulus();
        pending = 0;
      }
    }
    out[k] = F.reduce(acc);
  }
  return out;
}

namespace {

void add_into(std::vector<Felt>& dst, std::size_t off, std::span<const Felt> src, const PrimeField& F) {
  if (dst.size() < off + src.size()) dst.resize(off + src.size(), 0);
  for (std::size_t i = 0; i < src.size(); ++i) dst[off + i] = F.add(dst[off + i], src[i]);
}

std::vector<Felt> karatsuba_rec(std::span<const Felt> a, std::span<const Felt> b, const PrimeField& F) {
  if (a.size() < kKaratsubaCutoff || b.size() < kKaratsubaCutoff) return mul_schoolbook(a, b, F);
  const std::size_t h = std::max(a.size(), b.size()) / 2;
  auto split = [h](std::span<const Felt> v) {
    if (v.size() <= h) return std::pair{v, std::span<const Felt>{}};
    return std::pair{v.first(h), v.subspan(h)};
  };
  auto [a0, a1] = split(a);
  auto [b0, b1] = split(b);
  if (a1.empty() || b1.empty()) {
    // Unbalanced: split only the longer operand.
    std::vector<Felt> lo = karatsuba_rec(a1.empty() ? a : a0, a1.empty() ? b0 : b, F);
    std::vector<Felt> hi = karatsuba_rec(a1.empty() ? a : a1, a1.empty() ? b1 : b, F);
    add_into(lo, h, hi, F);
    return lo;
  }
  std::vector<Felt> z0 = karatsuba_rec(a0, b0, F);
  std::vector<Felt> z2 = karatsuba_rec(a1, b1, F);
  std::vector<Felt> sa(std::max(a0.size(), a1.size()), 0), sb(std::max(b0.size(), b1.size()), 0);
  for (std::size_t i = 0; i < a0.size(); ++i) sa[i] = a0[i];
  for (std::size_t i = 0; i < a1.size(); ++i) sa[i] = F.add(sa[i], a1[i]);
  for (std::size_t i = 0; i < b0.size(); ++i) sb[i] = b0[i];
  for (std::size_t i = 0; i < b1.size(); ++i) sb[i] = F.add(sb[i], b1[i]);
  std::vector<Felt> z1 = karatsuba_rec(sa, sb, F);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = F.sub(z1[i], z0[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = F.sub(z1[i], z2[i]);
  std::vector<Felt> out(a.size() + b.size() - 1, 0);
  add_into(out, 0, z0, F);
  add_into(out, h, z1, F);
  add_into(out, 2 * h, z2, F);
  out.resize(a.size() + b.size() - 1);
  return out;
}

}  // namespace

std::vector<Felt> mul_karatsuba(std::span<const Felt> a, std::span<const Felt> b, const PrimeField& F) {
  if (a.empty() || b.empty()) return {};
  return karatsuba_rec(a, b, F);
}

std::vector<Felt> mul(std::span<const Felt> a, std::span<const Felt> b, const PrimeField& F) {
  if (a.size() >= kKaratsubaCutoff && b.size() >= kKaratsubaCutoff) return mul_karatsuba(a, b, F);
  return mul_schoolbook(a, b, F);
}

}  // namespace kernel

}  // namespace fqr
