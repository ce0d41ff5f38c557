#include "fqreduce/carlitz.hpp"

namespace fqr {

Poly CarlitzCtx::rho_x(const Poly& a) const {
  const ModCtx& c = ctx();
  const Poly ar = c.reduce(a);
  return sigma_.apply(ar) + c.reduce(ar.shifted(1));
}

Poly carlitz_apply(const Poly& m, const Poly& alpha, const CarlitzCtx& cctx) {
  const ModCtx& c = cctx.ctx();
  Poly beta = c.reduce(alpha);
  Poly acc(c.field());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) beta = cctx.rho_x(beta);
    if (m[i]) acc += beta.scaled(m[i]);
  }
  return acc;
}

Matrix carlitz_matrix(const CarlitzCtx& cctx) {
  const ModCtx& c = cctx.ctx();
  const auto n = static_cast<std::size_t>(c.degree());
  Matrix m(c.field(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Poly col = cctx.rho_x(Poly::monomial(c.field(), 1, j));
    for (std::size_t r = 0; r < n; ++r) m(r, j) = col[r];
  }
  return m;
}

Poly carlitz_charpoly_direct(const Poly& f) { return charpoly(carlitz_matrix(CarlitzCtx(ModCtx(f)))); }

Poly carlitz_charpoly_from_factors(const Factorization& fz) {
  Poly chi = Poly::one(fz.field);
  for (const auto& fp : fz.factors) {
    if (fp.multiplicity != 1) throw Error(ErrorKind::NotSquarefree, "Carlitz product needs a squarefree factorization");
    chi *= fp.factor - Poly::one(fz.field);
  }
  return chi;
}

int smallest_degree_via_carlitz(const Poly& f, const Poly& chi) {
  const Poly diff = f - chi;
  if (diff.is_zero()) throw Error(ErrorKind::DegenerateDifference, "f equals its Carlitz characteristic polynomial");
  return f.degree() - diff.degree();
}

}  // namespace fqr
