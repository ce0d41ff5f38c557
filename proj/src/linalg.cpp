#include "fqreduce/linalg.hpp"

#include <cmath>

namespace fqr {

Matrix Matrix::identity(PrimeField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(PrimeField field, const std::vector<std::vector<Felt>>& columns, std::size_t rows) {
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t r = 0; r < rows && r < columns[c].size(); ++r) m(r, c) = columns[c][r];
  }
  return m;
}

std::vector<Felt> Matrix::apply(const std::vector<Felt>& v) const {
  std::vector<Felt> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    unsigned __int128 acc = 0;
    int pending = 0;
    for (std::size_t c = 0; c < cols_ && c < v.size(); ++c) {
      acc += static_cast<unsigned __int128>(a_[r * cols_ + c]) * v[c];
      if (!field_.small() && ++pending == 15) {
        acc %= field_.modulus();
        pending = 0;
      }
    }
    out[r] = field_.reduce(acc);
  }
  return out;
}

std::vector<Felt> Matrix::apply_transposed(const std::vector<Felt>& v) const {
  LinearAccumulator acc(field_, cols_);
  for (std::size_t r = 0; r < rows_ && r < v.size(); ++r) {
    acc.add_scaled(std::span<const Felt>(a_.data() + r * cols_, cols_), v[r]);
  }
  return acc.finish();
}

bool Matrix::is_zero() const noexcept {
  for (Felt x : a_) {
    if (x) return false;
  }
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (!(a.field_ == b.field_) || a.cols_ != b.rows_) throw Error(ErrorKind::BadInput, "matrix shape mismatch");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    LinearAccumulator acc(a.field_, b.cols_);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      acc.add_scaled(std::span<const Felt>(b.a_.data() + k * b.cols_, b.cols_), a(r, k));
    }
    auto row = acc.finish();
    std::copy(row.begin(), row.end(), out.a_.begin() + static_cast<std::ptrdiff_t>(r * b.cols_));
  }
  return out;
}

Felt determinant(Matrix m) {
  const PrimeField F = m.field();
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error(ErrorKind::BadInput, "determinant of a non-square matrix");
  Felt det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = F.neg(det);
    }
    det = F.mul(det, m(c, c));
    const Felt inv = F.inv(m(c, c));
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      const Felt factor = F.mul(m(r, c), inv);
      for (std::size_t j = c; j < n; ++j) m(r, j) = F.sub(m(r, j), F.mul(factor, m(c, j)));
    }
  }
  return det;
}

Poly charpoly(Matrix m) {
  const PrimeField F = m.field();
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error(ErrorKind::BadInput, "charpoly of a non-square matrix");
  // Similarity transforms to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && m(piv, j) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(piv, c), m(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(m(r, piv), m(r, j + 1));
    }
    const Felt inv = F.inv(m(j + 1, j));
    for (std::size_t i = j + 2; i < n; ++i) {
      if (m(i, j) == 0) continue;
      const Felt u = F.mul(m(i, j), inv);
      // row_i -= u row_{j+1}; col_{j+1} += u col_i
      for (std::size_t c = 0; c < n; ++c) m(i, c) = F.sub(m(i, c), F.mul(u, m(j + 1, c)));
      for (std::size_t r = 0; r < n; ++r) m(r, j + 1) = F.add(m(r, j + 1), F.mul(u, m(r, i)));
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_{i=1}^{k-1} h_{k-i,k} (prod_{j=k-i+1}^{k} h_{j,j-1}) p_{k-i-1}
  std::vector<Poly> p;
  p.reserve(n + 1);
  p.push_back(Poly::one(F));
  const Poly x = Poly::x(F);
  for (std::size_t k = 1; k <= n; ++k) {
    Poly cur = (x - Poly::constant(F, m(k - 1, k - 1))) * p[k - 1];
    Felt prod = 1;
    for (std::size_t i = 1; i < k; ++i) {
      prod = F.mul(prod, m(k - i, k - i - 1));
      if (prod == 0) break;
      const Felt coef = F.mul(prod, m(k - i - 1, k - 1));
      if (coef) cur -= p[k - i - 1].scaled(coef);
    }
    p.push_back(std::move(cur));
  }
  return p[n];
}

Matrix evaluate_at_matrix(const Poly& g, const Matrix& a) {
  const PrimeField F = a.field();
  const std::size_t n = a.rows();
  Matrix result(F, n, n);
  if (g.is_zero()) return result;
  const auto deg = static_cast<std::size_t>(g.degree());
  const auto k = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(deg + 1)))));
  std::vector<Matrix> baby;
  baby.reserve(k + 1);
  baby.push_back(Matrix::identity(F, n));
  for (std::size_t i = 1; i <= k; ++i) baby.push_back(baby.back() * a);
  const Matrix& giant = baby[k];
  const std::size_t blocks = deg / k + 1;
  bool first = true;
  for (std::size_t j = blocks; j-- > 0;) {
    Matrix block(F, n, n);
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t idx = j * k + i;
      if (idx > deg) break;
      const Felt c = g[idx];
      if (c == 0) continue;
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t cc = 0; cc < n; ++cc) block(r, cc) = F.add(block(r, cc), F.mul(c, baby[i](r, cc)));
      }
    }
    if (first) {
      result = block;
      first = false;
    } else {
      result = result * giant;
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t cc = 0; cc < n; ++cc) result(r, cc) = F.add(result(r, cc), block(r, cc));
      }
    }
  }
  return result;
}

std::optional<std::vector<Felt>> DependencyFinder::insert(const std::vector<Felt>& v) {
  const PrimeField& F = field_;
  std::vector<Felt> w = v;
  w.resize(dim_, 0);
  std::vector<Felt> combo(inserted_ + 1, 0);
  combo[inserted_] = 1;  // w = v - sum (...)
  for (const Row& row : basis_) {
    const Felt c = w[row.pivot];
    if (c == 0) continue;
    for (std::size_t i = 0; i < dim_; ++i) w[i] = F.sub(w[i], F.mul(c, row.vec[i]));
    for (std::size_t i = 0; i < row.combo.size(); ++i) combo[i] = F.sub(combo[i], F.mul(c, row.combo[i]));
  }
  std::size_t pivot = 0;
  while (pivot < dim_ && w[pivot] == 0) ++pivot;
  if (pivot == dim_) {
    // 0 = v + sum_{i<inserted} combo_i v_i  =>  v = -sum combo_i v_i
    std::vector<Felt> out(inserted_);
    for (std::size_t i = 0; i < inserted_; ++i) out[i] = F.neg(combo[i]);
    return out;
  }
  const Felt inv = F.inv(w[pivot]);
  for (auto& x : w) x = F.mul(x, inv);
  for (auto& x : combo) x = F.mul(x, inv);
  // Keep rows fully reduced at the new pivot so later inserts stay consistent.
  for (Row& row : basis_) {
    const Felt c = row.vec[pivot];
    if (c == 0) continue;
    for (std::size_t i = 0; i < dim_; ++i) row.vec[i] = F.sub(row.vec[i], F.mul(c, w[i]));
    row.combo.resize(combo.size(), 0);
    for (std::size_t i = 0; i < combo.size(); ++i) row.combo[i] = F.sub(row.combo[i], F.mul(c, combo[i]));
  }
  basis_.push_back(Row{std::move(w), std::move(combo), pivot});
  ++inserted_;
  return std::nullopt;
}

Poly krylov_minpoly(const std::function<std::vector<Felt>(const std::vector<Felt>&)>& apply,
                    const std::vector<Felt>& v, PrimeField field) {
  const std::size_t dim = v.size();
  DependencyFinder finder(field, dim);
  std::vector<Felt> cur = v;
  for (std::size_t d = 0; d <= dim; ++d) {
    auto dep = finder.insert(cur);
    if (dep) {
      // A^d v = sum_i c_i A^i v  =>  x^d - sum c_i x^i
      std::vector<Felt> coeffs(d + 1, 0);
      for (std::size_t i = 0; i < d; ++i) coeffs[i] = field.neg((*dep)[i]);
      coeffs[d] = 1;
      return Poly(field, std::move(coeffs));
    }
    cur = apply(cur);
  }
  throw Error(ErrorKind::InternalError, "Krylov sequence failed to become dependent");
}

Poly matrix_minpoly(const Matrix& a) {
  const PrimeField F = a.field();
  const std::size_t n = a.rows();
  Poly result = Poly::one(F);
  auto apply = [&a](const std::vector<Felt>& w) { return a.apply(w); };
  for (std::size_t k = 0; k < n; ++k) {
    // Skip basis vectors already annihilated by the running lcm.
    std::vector<Felt> e(n, 0);
    e[k] = 1;
    std::vector<Felt> w(n, 0);
    for (int j = result.degree(); j >= 0; --j) {
      w = a.apply(w);
      w[k] = F.add(w[k], result[static_cast<std::size_t>(j)]);
    }
    bool killed = true;
    for (std::size_t r = 0; r < n && killed; ++r) killed = w[r] == 0;
    if (killed) continue;
    result = lcm(result, krylov_minpoly(apply, e, F));
  }
  return result;
}

}  // namespace fqr
