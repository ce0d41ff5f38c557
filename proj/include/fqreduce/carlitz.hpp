#pragma once

#include "fqreduce/linalg.hpp"
#include "fqreduce/modular.hpp"
#include "fqreduce/polyalg.hpp"

namespace fqr {

/// The Carlitz action on F_q[x]/(f): rho_x(a) = a^q + x a.
class CarlitzCtx {
 public:
  explicit CarlitzCtx(const ModCtx& ctx) : sigma_(ctx) {}

  Poly rho_x(const Poly& a) const;
  const ModCtx& ctx() const noexcept { return sigma_.ctx(); }

 private:
  FrobeniusMap sigma_;
};

/// rho_m(alpha) = sum_i m_i rho_x^i(alpha).
Poly carlitz_apply(const Poly& m, const Poly& alpha, const CarlitzCtx& cctx);

/// Matrix of rho_x on the monomial basis; column j is rho_x(x^j).
Matrix carlitz_matrix(const CarlitzCtx& cctx);

/// Characteristic polynomial of rho_x by Hessenberg reduction.
Poly carlitz_charpoly_direct(const Poly& f);

/// prod (f_i - 1) over the factors; throws NotSquarefree on a repeated factor.
Poly carlitz_charpoly_from_factors(const Factorization& fz);

/// deg f - deg(f - chi). Only meaningful when p does not divide the number
/// of smallest-degree factors; throws DegenerateDifference when f = chi.
int smallest_degree_via_carlitz(const Poly& f, const Poly& chi);

}  // namespace fqr
