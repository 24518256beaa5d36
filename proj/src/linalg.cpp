#include "gc/linalg.hpp"

namespace gc {

void Matrix::append_row(const std::vector<Elem>& v) {
  if (rows == 0 && cols == 0) cols = v.size();
  if (v.size() != cols) throw FieldError("row length mismatch");
  a.insert(a.end(), v.begin(), v.end());
  ++rows;
}

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 0;
  return m;
}

size_t rref(const FieldTable& F, Matrix& m, std::vector<size_t>* pivots) {
  if (pivots) pivots->clear();
  size_t r = 0;
  for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
    size_t piv = r;
    while (piv < m.rows && m.at(piv, c) == ZERO) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    Elem inv = F.inv(m.at(r, c));
    Elem* pr = m.row(r);
    for (size_t j = c; j < m.cols; ++j) pr[j] = F.mul(pr[j], inv);
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      Elem f = m.at(i, c);
      if (f == ZERO) continue;
      Elem nf = F.neg(f);
      Elem* pi = m.row(i);
      for (size_t j = c; j < m.cols; ++j)
        if (pr[j] != ZERO) pi[j] = F.add(pi[j], F.mul(nf, pr[j]));
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

size_t rank(const FieldTable& F, Matrix m) { return rref(F, m); }

Matrix row_basis(const FieldTable& F, const Matrix& m) {
  Matrix t = m;
  size_t r = rref(F, t);
  t.a.resize(r * t.cols);
  t.rows = r;
  return t;
}

std::optional<Matrix> inverse(const FieldTable& F, const Matrix& m) {
  if (m.rows != m.cols) throw FieldError("inverse of non-square matrix");
  size_t n = m.rows;
  Matrix aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 0;
  }
  std::vector<size_t> piv;
  rref(F, aug, &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

Matrix nullspace(const FieldTable& F, const Matrix& m) {
  Matrix t = m;
  std::vector<size_t> piv;
  size_t r = rref(F, t, &piv);
  std::vector<char> is_piv(m.cols, 0);
  for (auto c : piv) is_piv[c] = 1;
  Matrix out(0, m.cols);
  out.cols = m.cols;
  for (size_t f = 0; f < m.cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<Elem> v(m.cols, ZERO);
    v[f] = 0;
    for (size_t i = 0; i < r; ++i) v[piv[i]] = F.neg(t.at(i, f));
    out.append_row(v);
  }
  return out;
}

Matrix multiply(const FieldTable& F, const Matrix& x, const Matrix& y) {
  if (x.cols != y.rows) throw FieldError("dimension mismatch in multiply");
  Matrix z(x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k) {
      Elem e = x.at(i, k);
      if (e == ZERO) continue;
      const Elem* yr = y.row(k);
      Elem* zr = z.row(i);
      for (size_t j = 0; j < y.cols; ++j)
        if (yr[j] != ZERO) zr[j] = F.add(zr[j], F.mul(e, yr[j]));
    }
  return z;
}

std::vector<Elem> vec_mat(const FieldTable& F, const std::vector<Elem>& v, const Matrix& m) {
  if (v.size() != m.rows) throw FieldError("dimension mismatch in vec_mat");
  std::vector<Elem> out(m.cols, ZERO);
  for (size_t k = 0; k < m.rows; ++k) {
    if (v[k] == ZERO) continue;
    const Elem* r = m.row(k);
    for (size_t j = 0; j < m.cols; ++j)
      if (r[j] != ZERO) out[j] = F.add(out[j], F.mul(v[k], r[j]));
  }
  return out;
}

bool contains_rows(const FieldTable& F, const Matrix& x, const Matrix& y) {
  if (y.rows == 0) return true;
  if (x.cols != y.cols) return false;
  Matrix s = x;
  s.a.insert(s.a.end(), y.a.begin(), y.a.end());
  s.rows += y.rows;
  return rank(F, s) == rank(F, x);
}

bool same_row_space(const FieldTable& F, const Matrix& x, const Matrix& y) {
  if (x.rows == 0 || y.rows == 0) return rank(F, x) == rank(F, y);
  return rank(F, x) == rank(F, y) && contains_rows(F, x, y);
}

Matrix frobenius(const FieldTable& F, const Matrix& m, uint64_t q) {
  Matrix r = m;
  for (auto& e : r.a) e = F.frobenius(e, q);
  return r;
}

}  // namespace gc
