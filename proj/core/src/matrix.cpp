#include "acq/matrix.hpp"

#include <sstream>

#include "acq/errors.hpp"

namespace acq {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) {
    throw FieldMismatch("matrices over " + a.field().to_string() + " and " +
                        b.field().to_string());
  }
}

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(Field field, std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(field, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionMismatch("ragged row list");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = Scalar(field, v);
    ++i;
  }
  return m;
}

Matrix Matrix::column(Field field, const Vector& v) {
  Matrix m(field, v.size(), 1);
  m.entries_ = v;
  return m;
}

Matrix Matrix::row(Field field, const Vector& v) {
  Matrix m(field, 1, v.size());
  m.entries_ = v;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Vector Matrix::column_vector(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& e = (*this)(i, j);
      if (i == j ? !e.is_one() : !e.is_zero()) return false;
    }
  }
  return true;
}

Scalar Matrix::trace() const {
  if (rows_ != cols_) throw DimensionMismatch("trace of non-square " + shape(*this));
  Scalar t = Scalar::zero(field_);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& e : entries_) n += e.is_zero() ? 0 : 1;
  return n;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_field(*this, other);
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionMismatch("cannot add " + shape(*this) + " and " + shape(other));
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_field(*this, other);
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionMismatch("cannot subtract " + shape(other) + " from " + shape(*this));
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

bool Matrix::operator==(const Matrix& other) const {
  return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ &&
         entries_ == other.entries_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " [");
    for (std::size_t j = 0; j < cols_; ++j) os << (j == 0 ? "" : ", ") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("cannot multiply " + shape(a) + " by " + shape(b));
  }
  Matrix c(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) c(i, j).add_product(aik, bkj);
      }
    }
  }
  return c;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  Matrix c(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Scalar& bkl = b(k, l);
          if (!bkl.is_zero()) c(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
        }
      }
    }
  }
  return c;
}

Vector mat_vec(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) {
    throw DimensionMismatch("cannot apply " + shape(a) + " to a vector of length " +
                            std::to_string(v.size()));
  }
  Vector out(a.rows(), Scalar::zero(a.field()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_zero() && !v[j].is_zero()) out[i].add_product(a(i, j), v[j]);
    }
  }
  return out;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }

RowEchelon rref(Matrix a) {
  RowEchelon out;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a(p, j), a(r, j));
    }
    const Scalar pivot_inv = a(r, c).inverse();
    support.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (!a(r, j).is_zero()) {
        a(r, j) *= pivot_inv;
        support.push_back(j);
      }
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar factor = -a(i, c);
      for (std::size_t j : support) a(i, j).add_product(factor, a(r, j));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(a);
  return out;
}

std::vector<Vector> nullspace(const Matrix& a) {
  const RowEchelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(a.cols(), Scalar::zero(a.field()));
    v[f] = Scalar::one(a.field());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t matrix_rank(const Matrix& a) { return rref(a).pivots.size(); }

Matrix mat_inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("inverse of non-square " + shape(a));
  const std::size_t n = a.rows();
  Matrix aug(a.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = Scalar::one(a.field());
  }
  const RowEchelon e = rref(std::move(aug));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) throw SingularMatrix();
  Matrix inv(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  }
  return inv;
}

Matrix mat_pow(const Matrix& a, long exponent) {
  if (a.rows() != a.cols()) throw DimensionMismatch("power of non-square " + shape(a));
  Matrix base = exponent < 0 ? mat_inverse(a) : a;
  unsigned long e = exponent < 0 ? -static_cast<unsigned long>(exponent) : exponent;
  Matrix result = Matrix::identity(a.field(), a.rows());
  while (e != 0) {
    if (e & 1UL) result = result * base;
    e >>= 1UL;
    if (e != 0) base = base * base;
  }
  return result;
}

}  // namespace acq
