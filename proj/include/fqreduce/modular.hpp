#pragma once

#include <memory>
#include <mutex>

#include "fqreduce/poly.hpp"

namespace fqr {

/// Arithmetic in F_p[x]/(f) for a fixed monic f of degree n >= 1.
///
/// Remainders of products (degree <= 2n-2) go through a precomputed
/// inverse of rev(f) mod x^n, obtained by Newton iteration. The Frobenius
/// image x^p mod f is computed on first use and shared between copies.
class ModCtx {
 public:
  /// Throws NotMonic if f is not monic, BadInput if deg f < 1.
  explicit ModCtx(Poly modulus);

  const Poly& modulus() const noexcept { return f_; }
  int degree() const noexcept { return f_.degree(); }
  const PrimeField& field() const noexcept { return f_.field(); }

  Poly reduce(const Poly& a) const;
  Poly mul(const Poly& a, const Poly& b) const { return reduce(a * b); }
  Poly sqr(const Poly& a) const { return reduce(a * a); }
  Poly pow(const Poly& base, std::uint64_t e) const;
  Poly pow(const Poly& base, const BigInt& e) const;

  /// x^p mod f. Thread-safe lazy fill.
  const Poly& frobenius() const;

 private:
  struct Cache {
    std::once_flag once;
    std::unique_ptr<Poly> xq;
  };

  Poly f_;
  std::vector<Felt> inv_rev_;
  std::shared_ptr<Cache> cache_;
};

/// base^e mod f by left-to-right square-and-multiply.
Poly modpow(const Poly& base, const BigInt& e, const ModCtx& ctx);

enum class ComposeStrategy { horner, brent_kung };

/// g(h) mod f. Both strategies return identical results; Brent-Kung uses
/// ceil(sqrt(deg g + 1)) baby steps.
Poly modcompose(const Poly& g, const Poly& h, const ModCtx& ctx, ComposeStrategy strategy = ComposeStrategy::brent_kung);

/// The powers h^0, ..., h^(n-1) mod f, i.e. the matrix of a -> a(h) on the
/// monomial basis. Composition with this fixed h then costs O(n^2).
class PowerTable {
 public:
  PowerTable(const ModCtx& ctx, const Poly& h);

  /// g(h) mod f; any degree of g is accepted.
  Poly compose(const Poly& g) const;
  /// Column k: h^k mod f as a dense length-n vector.
  const std::vector<Felt>& column(std::size_t k) const { return cols_[k]; }
  std::size_t dim() const noexcept { return cols_.size(); }
  const ModCtx& ctx() const noexcept { return ctx_; }

 private:
  ModCtx ctx_;
  Poly h_;
  std::vector<std::vector<Felt>> cols_;
  Poly top_;  // h^n mod f, for inputs of degree >= n
};

/// The Frobenius map a -> a^p on F_p[x]/(f), as composition with x^p mod f.
class FrobeniusMap {
 public:
  explicit FrobeniusMap(const ModCtx& ctx) : table_(ctx, ctx.frobenius()) {}

  Poly apply(const Poly& a) const { return table_.compose(a); }
  const PowerTable& table() const noexcept { return table_; }
  const ModCtx& ctx() const noexcept { return table_.ctx(); }

 private:
  PowerTable table_;
};

}  // namespace fqr
