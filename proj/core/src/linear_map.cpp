#include "acq/linear_map.hpp"

#include "acq/errors.hpp"
#include "acq/tensor_index.hpp"

namespace acq {

namespace {

std::string describe(const ObjectWord& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i == 0 ? "" : ",") + std::to_string(w[i].index);
  return s + ")";
}

}  // namespace

LinearMap identity_map(const Category& c, const ObjectWord& w) {
  return {w, w, Matrix::identity(c.field(), c.carrier(w))};
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
  if (!(g.codomain == f.domain)) {
    throw WordMismatch("cannot compose: codomain " + describe(g.codomain) +
                       " differs from domain " + describe(f.domain));
  }
  return {g.domain, f.codomain, f.matrix * g.matrix};
}

LinearMap tensor(const LinearMap& f, const LinearMap& g) {
  return {f.domain + g.domain, f.codomain + g.codomain, kron(f.matrix, g.matrix)};
}

LinearMap scale(const Scalar& s, LinearMap f) {
  f.matrix *= s;
  return f;
}

LinearMap add(const LinearMap& f, const LinearMap& g) {
  if (!(f.domain == g.domain) || !(f.codomain == g.codomain)) {
    throw WordMismatch("cannot add maps between different words");
  }
  return {f.domain, f.codomain, f.matrix + g.matrix};
}

LinearMap permutation_map(const Category& c, const ObjectWord& w,
                          const std::vector<std::size_t>& perm) {
  const auto table = leg_permutation_table(c.dims(w), perm);
  Matrix m(c.field(), table.size(), table.size());
  for (std::size_t i = 0; i < table.size(); ++i) m(table[i], i) = Scalar::one(c.field());
  return {w, w.permuted(perm), std::move(m)};
}

LinearMap swap(const Category& c, const ObjectWord& w, std::size_t i) {
  if (i + 1 >= w.size()) throw IndexOutOfRange("swap position out of range");
  std::vector<std::size_t> perm(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) perm[k] = k;
  std::swap(perm[i], perm[i + 1]);
  return permutation_map(c, w, perm);
}

LinearMap permute_codomain(const Category& c, const LinearMap& f,
                           const std::vector<std::size_t>& perm) {
  const auto table = leg_permutation_table(c.dims(f.codomain), perm);
  return {f.domain, f.codomain.permuted(perm), permute_rows(f.matrix, table)};
}

LinearMap permute_domain(const Category& c, const LinearMap& f,
                         const std::vector<std::size_t>& perm) {
  const auto table = leg_permutation_table(c.dims(f.domain), perm);
  return {f.domain.permuted(perm), f.codomain, permute_cols(f.matrix, table)};
}

LinearMap cap(const Category& c, SimpleLabel b) {
  const Matrix& l = c.pairing(b);
  return {ObjectWord{b, c.dual(b)}, ObjectWord{}, Matrix::row(c.field(), l.entries())};
}

LinearMap cup(const Category& c, SimpleLabel b) {
  const Matrix& m = c.coform(b);
  return {ObjectWord{}, ObjectWord{c.dual(b), b}, Matrix::column(c.field(), m.entries())};
}

LinearMap word_cap(const Category& c, const ObjectWord& w) {
  // λ_{w1} ∘ (id ⊗ λ_{w2...} ⊗ id): the innermost pair sits in the middle.
  LinearMap out{ObjectWord{}, ObjectWord{}, Matrix::identity(c.field(), 1)};
  for (std::size_t k = w.size(); k-- > 0;) {
    const LinearMap inner = out;
    const LinearMap outer = cap(c, w[k]);
    // (w_k, inner..., w_k*) -> ()
    const std::size_t d = c.dim(w[k]);
    const std::size_t dd = c.dim(c.dual(w[k]));
    const std::size_t n = c.carrier(inner.domain);
    Matrix m(c.field(), 1, d * n * dd);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < dd; ++j) {
        const Scalar& l = outer.matrix(0, i * dd + j);
        if (l.is_zero()) continue;
        for (std::size_t x = 0; x < n; ++x) {
          const Scalar& v = inner.matrix(0, x);
          if (!v.is_zero()) m(0, (i * n + x) * dd + j) = l * v;
        }
      }
    }
    ObjectWord domain = ObjectWord{w[k]} + inner.domain + ObjectWord{c.dual(w[k])};
    out = {std::move(domain), ObjectWord{}, std::move(m)};
  }
  return out;
}

LinearMap word_cup(const Category& c, const ObjectWord& w) {
  // (id ⊗ Λ_{...} ⊗ id) ∘ Λ_{w1}: the pair for w1 sits in the middle.
  LinearMap out{ObjectWord{}, ObjectWord{}, Matrix::identity(c.field(), 1)};
  for (std::size_t k = 0; k < w.size(); ++k) {
    const LinearMap inner = out;  // Λ for w_1..w_k, innermost pair (w_1*, w_1)
    const LinearMap pair = cup(c, w[k]);
    const std::size_t dd = c.dim(c.dual(w[k]));
    const std::size_t d = c.dim(w[k]);
    const std::size_t n = c.carrier(inner.codomain);
    Matrix m(c.field(), dd * n * d, 1);
    for (std::size_t i = 0; i < dd; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const Scalar& l = pair.matrix(i * d + j, 0);
        if (l.is_zero()) continue;
        for (std::size_t x = 0; x < n; ++x) {
          const Scalar& v = inner.matrix(x, 0);
          if (!v.is_zero()) m((i * n + x) * d + j, 0) = l * v;
        }
      }
    }
    ObjectWord codomain = ObjectWord{c.dual(w[k])} + inner.codomain + ObjectWord{w[k]};
    out = {ObjectWord{}, std::move(codomain), std::move(m)};
  }
  return out;
}

LinearMap apply_at(const Category& c, const LinearMap& f, std::size_t first, const LinearMap& g) {
  const std::size_t count = f.domain.size();
  if (first + count > g.codomain.size() || !(g.codomain.slice(first, count) == f.domain)) {
    throw WordMismatch("local map does not match codomain factors");
  }
  const ObjectWord before = g.codomain.slice(0, first);
  const ObjectWord after = g.codomain.slice(first + count, g.codomain.size() - first - count);
  Matrix m = apply_left(f.matrix, c.carrier(before), c.carrier(after), g.matrix);
  return {g.domain, before + f.codomain + after, std::move(m)};
}

}  // namespace acq
