#include "acq/tensor_index.hpp"

#include <string>

#include "acq/errors.hpp"

namespace acq {

namespace {

struct Entry {
  std::size_t row;
  std::size_t col;
  const Scalar* value;
};

std::vector<Entry> nonzero_entries(const Matrix& x) {
  std::vector<Entry> out;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      if (!x(i, j).is_zero()) out.push_back({i, j, &x(i, j)});
    }
  }
  return out;
}

}  // namespace

std::size_t dims_product(const std::vector<std::size_t>& dims) {
  std::size_t n = 1;
  for (std::size_t d : dims) n *= d;
  return n;
}

std::vector<std::size_t> inverse_permutation(const std::vector<std::size_t>& perm) {
  std::vector<std::size_t> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv.at(perm[i]) = i;
  return inv;
}

std::vector<std::size_t> permuted_dims(const std::vector<std::size_t>& dims,
                                       const std::vector<std::size_t>& perm) {
  if (dims.size() != perm.size()) throw DimensionMismatch("permutation length mismatch");
  std::vector<std::size_t> out(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) out.at(perm[i]) = dims[i];
  return out;
}

std::vector<std::size_t> leg_permutation_table(const std::vector<std::size_t>& dims,
                                               const std::vector<std::size_t>& perm) {
  const std::size_t n = dims.size();
  const std::vector<std::size_t> new_dims = permuted_dims(dims, perm);
  // Stride of each source leg inside the permuted layout.
  std::vector<std::size_t> new_stride(n, 1);
  for (std::size_t p = n; p-- > 1;) new_stride[p - 1] = new_stride[p] * new_dims[p];
  std::vector<std::size_t> leg_stride(n);
  for (std::size_t i = 0; i < n; ++i) leg_stride[i] = new_stride[perm[i]];

  const std::size_t total = dims_product(dims);
  std::vector<std::size_t> table(total);
  std::vector<std::size_t> digit(n, 0);
  std::size_t target = 0;
  for (std::size_t flat = 0; flat < total; ++flat) {
    table[flat] = target;
    for (std::size_t i = n; i-- > 0;) {
      if (++digit[i] < dims[i]) {
        target += leg_stride[i];
        break;
      }
      target -= (dims[i] - 1) * leg_stride[i];
      digit[i] = 0;
    }
  }
  return table;
}

Matrix permute_rows(const Matrix& m, const std::vector<std::size_t>& table) {
  if (table.size() != m.rows()) throw DimensionMismatch("row permutation size mismatch");
  Matrix out(m.field(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(table[r], c) = m(r, c);
  }
  return out;
}

Matrix permute_cols(const Matrix& m, const std::vector<std::size_t>& table) {
  if (table.size() != m.cols()) throw DimensionMismatch("column permutation size mismatch");
  Matrix out(m.field(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, table[c]) = m(r, c);
  }
  return out;
}

Matrix apply_left(const Matrix& x, std::size_t pre, std::size_t post, const Matrix& m) {
  if (pre * x.cols() * post != m.rows()) {
    throw DimensionMismatch("local operator with " + std::to_string(x.cols()) +
                            " inputs does not fit " + std::to_string(m.rows()) + " rows");
  }
  const std::size_t cols = m.cols();
  Matrix out(m.field(), pre * x.rows() * post, cols);
  const auto entries = nonzero_entries(x);
  for (std::size_t p = 0; p < pre; ++p) {
    for (const Entry& e : entries) {
      for (std::size_t q = 0; q < post; ++q) {
        const std::size_t src = (p * x.cols() + e.col) * post + q;
        const std::size_t dst = (p * x.rows() + e.row) * post + q;
        for (std::size_t c = 0; c < cols; ++c) {
          const Scalar& v = m(src, c);
          if (!v.is_zero()) out(dst, c).add_product(*e.value, v);
        }
      }
    }
  }
  return out;
}

Matrix apply_right(const Matrix& m, std::size_t pre, std::size_t post, const Matrix& x) {
  if (pre * x.rows() * post != m.cols()) {
    throw DimensionMismatch("local operator with " + std::to_string(x.rows()) +
                            " outputs does not fit " + std::to_string(m.cols()) + " columns");
  }
  Matrix out(m.field(), m.rows(), pre * x.cols() * post);
  const auto entries = nonzero_entries(x);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t p = 0; p < pre; ++p) {
      for (const Entry& e : entries) {
        for (std::size_t q = 0; q < post; ++q) {
          const Scalar& v = m(r, (p * x.rows() + e.row) * post + q);
          if (!v.is_zero()) out(r, (p * x.cols() + e.col) * post + q).add_product(v, *e.value);
        }
      }
    }
  }
  return out;
}

}  // namespace acq
