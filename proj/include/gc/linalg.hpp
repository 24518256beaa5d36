#pragma once
// Dense matrices over a FieldTable.

#include <optional>
#include <vector>

#include "gc/field.hpp"

namespace gc {

struct Matrix {
  size_t rows = 0, cols = 0;
  std::vector<Elem> a;

  Matrix() = default;
  Matrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, ZERO) {}

  Elem& at(size_t i, size_t j) { return a[i * cols + j]; }
  Elem at(size_t i, size_t j) const { return a[i * cols + j]; }
  Elem* row(size_t i) { return a.data() + i * cols; }
  const Elem* row(size_t i) const { return a.data() + i * cols; }
  void append_row(const std::vector<Elem>& v);
  std::vector<Elem> row_vec(size_t i) const {
    return std::vector<Elem>(row(i), row(i) + cols);
  }
  bool operator==(const Matrix& o) const = default;

  static Matrix identity(size_t n);
};

// Reduced row echelon form in place; returns the rank. Zero rows move last.
size_t rref(const FieldTable& F, Matrix& m, std::vector<size_t>* pivots = nullptr);
size_t rank(const FieldTable& F, Matrix m);
// Nonzero rows of the RREF.
Matrix row_basis(const FieldTable& F, const Matrix& m);
std::optional<Matrix> inverse(const FieldTable& F, const Matrix& m);
// Basis of { y : m y^T = 0 }.
Matrix nullspace(const FieldTable& F, const Matrix& m);
Matrix multiply(const FieldTable& F, const Matrix& x, const Matrix& y);
std::vector<Elem> vec_mat(const FieldTable& F, const std::vector<Elem>& v, const Matrix& m);
bool same_row_space(const FieldTable& F, const Matrix& x, const Matrix& y);
// Is every row of y in the row space of x?
bool contains_rows(const FieldTable& F, const Matrix& x, const Matrix& y);
Matrix frobenius(const FieldTable& F, const Matrix& m, uint64_t q);

}  // namespace gc
