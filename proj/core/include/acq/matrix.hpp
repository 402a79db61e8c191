#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "acq/scalar.hpp"

namespace acq {

using Vector = std::vector<Scalar>;

// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_rows(Field field, std::initializer_list<std::initializer_list<long>> rows);
  static Matrix column(Field field, const Vector& v);
  static Matrix row(Field field, const Vector& v);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return entries_.size(); }

  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const std::vector<Scalar>& entries() const { return entries_; }
  std::vector<Scalar>& entries() { return entries_; }

  Matrix transpose() const;
  Vector column_vector(std::size_t j) const;
  bool is_zero() const;
  bool is_identity() const;
  Scalar trace() const;
  std::size_t nonzeros() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Scalar& s);
  bool operator==(const Matrix& other) const;

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
// Index convention: the left factor is the most significant block.
Matrix kron(const Matrix& a, const Matrix& b);
Vector mat_vec(const Matrix& a, const Vector& v);

inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }
Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Scalar& s, Matrix a);

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Reduced row echelon form; pivots are normalized to 1.
RowEchelon rref(Matrix a);
// Basis of {v : A v = 0}. One vector per free column, in increasing column order,
// with a 1 in that column and 0 in the other free columns.
std::vector<Vector> nullspace(const Matrix& a);
std::size_t matrix_rank(const Matrix& a);
// Throws SingularMatrix.
Matrix mat_inverse(const Matrix& a);
// Negative powers go through mat_inverse.
Matrix mat_pow(const Matrix& a, long exponent);

}  // namespace acq
