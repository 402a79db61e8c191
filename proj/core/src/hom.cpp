#include "acq/hom.hpp"

#include "acq/errors.hpp"
#include "acq/tensor_index.hpp"
#include "hom_cache.hpp"

namespace acq {

namespace {

// Entries of ρ_W(g) for every symmetry generator.
std::vector<Matrix> actions(const Category& c, const ObjectWord& w) {
  std::vector<Matrix> out;
  for (std::size_t g = 0; g < c.data().generator_count; ++g) out.push_back(c.action(w, g));
  return out;
}

bool grades_match(const Category& c, SimpleLabel a, const ObjectWord& w) {
  return c.grade(w) == c.simple(a).grade;
}

// Solutions X (rows x cols) of A_g X = X B_g for all g.
std::vector<Matrix> intertwiners(Field field, const std::vector<Matrix>& left,
                                 const std::vector<Matrix>& right, std::size_t rows,
                                 std::size_t cols) {
  const std::size_t unknowns = rows * cols;
  Matrix system(field, left.size() * unknowns, unknowns);
  for (std::size_t g = 0; g < left.size(); ++g) {
    const Matrix& a = left[g];
    const Matrix& b = right[g];
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t col = 0; col < cols; ++col) {
        const std::size_t eq = g * unknowns + r * cols + col;
        for (std::size_t s = 0; s < rows; ++s) {
          if (!a(r, s).is_zero()) system(eq, s * cols + col) += a(r, s);
        }
        for (std::size_t t = 0; t < cols; ++t) {
          if (!b(t, col).is_zero()) system(eq, r * cols + t) -= b(t, col);
        }
      }
    }
  }
  std::vector<Matrix> out;
  for (Vector& v : nullspace(system)) {
    Matrix x(field, rows, cols);
    x.entries() = std::move(v);
    out.push_back(std::move(x));
  }
  return out;
}

HomBasis direct_basis(const Category& c, SimpleLabel a, const ObjectWord& w) {
  HomBasis out{a, w, {}, {}};
  if (!grades_match(c, a, w)) return out;
  const std::size_t n = c.carrier(w);
  const std::size_t d = c.dim(a);
  const auto act_w = actions(c, w);
  const auto act_a = actions(c, ObjectWord{a});
  std::vector<Matrix> xs = intertwiners(c.field(), act_w, act_a, n, d);
  std::vector<Matrix> ys = intertwiners(c.field(), act_a, act_w, d, n);
  if (xs.size() != ys.size()) {
    throw SemisimplicityFailure("Hom(a, W) and Hom(W, a) have different dimensions");
  }
  const std::size_t k = xs.size();
  if (k == 0) return out;
  Matrix gram(c.field(), k, k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      const Matrix p = ys[j] * xs[i];
      const Scalar s = p(0, 0);
      if (!(p == s * Matrix::identity(c.field(), d))) {
        throw SemisimplicityFailure("End of '" + c.simple(a).name + "' is not one-dimensional");
      }
      gram(j, i) = s;
    }
  }
  Matrix gram_inv;
  try {
    gram_inv = mat_inverse(gram);
  } catch (const SingularMatrix&) {
    throw SemisimplicityFailure("singular Gram matrix for Hom('" + c.simple(a).name +
                                "', word of length " + std::to_string(w.size()) + ")");
  }
  for (std::size_t i = 0; i < k; ++i) {
    Matrix dual(c.field(), d, n);
    for (std::size_t j = 0; j < k; ++j) {
      if (!gram_inv(i, j).is_zero()) dual += gram_inv(i, j) * ys[j];
    }
    out.duals.push_back(std::move(dual));
  }
  out.maps = std::move(xs);
  return out;
}

HomBasis unit_word_basis(const Category& c, SimpleLabel a) {
  HomBasis out{a, ObjectWord{}, {}, {}};
  if (a == kUnit) {
    out.maps.push_back(Matrix::identity(c.field(), 1));
    out.duals.push_back(Matrix::identity(c.field(), 1));
  }
  return out;
}

HomBasis tree_basis(const Category& c, SimpleLabel a, const ObjectWord& w) {
  HomBasis out{a, w, {}, {}};
  if (w.size() < 2) return w.empty() ? unit_word_basis(c, a) : direct_basis(c, a, w);
  if (!grades_match(c, a, w)) return out;
  const ObjectWord head = w.slice(0, w.size() - 1);
  const SimpleLabel last = w[w.size() - 1];
  const std::size_t d_last = c.dim(last);
  for (SimpleLabel mid : c.labels()) {
    const auto outer = hom_basis(c, mid, head);
    if (outer->size() == 0) continue;
    const auto inner = hom_basis(c, a, ObjectWord{mid, last});
    for (std::size_t i = 0; i < outer->size(); ++i) {
      for (std::size_t k = 0; k < inner->size(); ++k) {
        out.maps.push_back(apply_left(outer->maps[i], 1, d_last, inner->maps[k]));
        out.duals.push_back(apply_right(inner->duals[k], 1, d_last, outer->duals[i]));
      }
    }
  }
  return out;
}

constexpr std::size_t kDirectLimit = 64;

}  // namespace

std::shared_ptr<const HomBasis> hom_basis(const Category& c, SimpleLabel a, const ObjectWord& w,
                                          HomMethod method) {
  (void)c.simple(a);
  for (SimpleLabel b : w) (void)c.simple(b);
  if (method == HomMethod::direct) return std::make_shared<const HomBasis>(direct_basis(c, a, w));
  if (method == HomMethod::fusion_tree) {
    return std::make_shared<const HomBasis>(tree_basis(c, a, w));
  }
  HomCache& cache = c.hom_cache();
  auto key = std::make_pair(a, w);
  {
    std::lock_guard<std::mutex> lock(cache.mutex);
    auto it = cache.bases.find(key);
    if (it != cache.bases.end()) return it->second;
  }
  HomBasis basis;
  if (w.empty()) {
    basis = unit_word_basis(c, a);
  } else if (w.size() <= 2 || c.carrier(w) * c.dim(a) <= kDirectLimit) {
    basis = direct_basis(c, a, w);
  } else {
    basis = tree_basis(c, a, w);
  }
  auto ptr = std::make_shared<const HomBasis>(std::move(basis));
  std::lock_guard<std::mutex> lock(cache.mutex);
  return cache.bases.emplace(std::move(key), std::move(ptr)).first->second;
}

std::size_t hom_dimension(const Category& c, SimpleLabel a, const ObjectWord& w) {
  if (w.size() <= 2) return hom_basis(c, a, w)->size();
  // Fusion counting along the same tree as tree_basis, without building maps.
  std::vector<std::size_t> count(c.size(), 0);
  count[w[0].index] = 1;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::vector<std::size_t> next(c.size(), 0);
    for (SimpleLabel mid : c.labels()) {
      if (count[mid.index] == 0) continue;
      for (SimpleLabel target : c.labels()) {
        next[target.index] += count[mid.index] * hom_basis(c, target, {mid, w[i]})->size();
      }
    }
    count = std::move(next);
  }
  return count[a.index];
}

std::size_t intertwiner_count(const Category& c, SimpleLabel a, const ObjectWord& w) {
  if (!grades_match(c, a, w)) return 0;
  return intertwiners(c.field(), actions(c, w), actions(c, ObjectWord{a}), c.carrier(w),
                      c.dim(a))
      .size();
}

Scalar rank(const Category& c, const LinearMap& f) {
  if (!(f.domain == f.codomain)) throw WordMismatch("rank of a non-endomorphism");
  const ObjectWord& w = f.domain;
  const ObjectWord w_dual = c.dual(w);
  // Λ_W : () -> W* W, then φ on the W legs, then λ_{W*} : W* W -> ().
  const LinearMap coform = word_cup(c, w);
  const Matrix applied = apply_left(f.matrix, c.carrier(w_dual), 1, coform.matrix);
  const LinearMap form = word_cap(c, w_dual);
  return (form.matrix * applied)(0, 0);
}

LinearMap partial_trace(const Category& c, const LinearMap& phi, std::size_t first,
                        std::size_t count, SimpleLabel b) {
  if (first + count > phi.domain.size()) throw IndexOutOfRange("trace range out of range");
  const auto basis = hom_basis(c, b, phi.domain.slice(first, count));
  return partial_trace(c, phi, first, count, b, *basis);
}

LinearMap partial_trace(const Category& c, const LinearMap& phi, std::size_t first,
                        std::size_t count, SimpleLabel b, const HomBasis& basis) {
  if (!(phi.domain == phi.codomain)) throw WordMismatch("partial trace of a non-endomorphism");
  if (first + count > phi.domain.size()) throw IndexOutOfRange("trace range out of range");
  const ObjectWord& w = phi.domain;
  if (!(basis.word == w.slice(first, count)) || !(basis.target == b)) {
    throw WordMismatch("hom basis does not match the traced factors");
  }
  const ObjectWord before = w.slice(0, first);
  const ObjectWord after = w.slice(first + count, w.size() - first - count);
  const ObjectWord result_word = before + ObjectWord{b} + after;
  const std::size_t pre = c.carrier(before);
  const std::size_t post = c.carrier(after);
  const std::size_t n = c.carrier(result_word);
  Matrix sum(c.field(), n, n);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Matrix right = apply_right(phi.matrix, pre, post, basis.maps[i]);
    sum += apply_left(basis.duals[i], pre, post, right);
  }
  return {result_word, result_word, std::move(sum)};
}

LinearMap hat(const Category& c, const LinearMap& f) {
  const ObjectWord a_dual = c.dual(f.domain);
  const ObjectWord b_dual = c.dual(f.codomain);
  // B* -> B* A A* -> B* B A* -> A*.
  LinearMap step = tensor(identity_map(c, b_dual), word_cup(c, a_dual));
  step = apply_at(c, f, b_dual.size(), step);
  return apply_at(c, word_cap(c, b_dual), 0, step);
}

LinearMap cycl(const Category& c, SimpleLabel a, SimpleLabel b, SimpleLabel cc,
               const LinearMap& phi) {
  if (!(phi.domain == ObjectWord{a}) || !(phi.codomain == ObjectWord{b, cc})) {
    throw WordMismatch("cycl expects a map a -> b c");
  }
  const SimpleLabel b_dual = c.dual(b);
  LinearMap step = tensor(identity_map(c, ObjectWord{b_dual}), cup(c, c.dual(a)));
  step = apply_at(c, phi, 1, step);
  return apply_at(c, cap(c, b_dual), 0, step);
}

ZetaBasis zeta_bases(const Category& c, SimpleLabel a, SimpleLabel b, SimpleLabel cc) {
  const Scalar factor = c.rank(cc) * c.rank_inverse(a);
  const auto basis = hom_basis(c, a, ObjectWord{b, cc});
  const SimpleLabel b_dual = c.dual(b);
  ZetaBasis out{{}, {}, factor};
  for (std::size_t i = 0; i < basis->size(); ++i) {
    // ζ̄_i = (λ_{b*} ⊗ id_c)(id_{b*} ⊗ ε_i)
    LinearMap bar = tensor(identity_map(c, ObjectWord{b_dual}), basis->map(i));
    bar = apply_at(c, cap(c, b_dual), 0, bar);
    // ζ_i = (id_{b*} ⊗ ε_i*)(Λ_b ⊗ id_c)
    LinearMap z = tensor(cup(c, b), identity_map(c, ObjectWord{cc}));
    z = apply_at(c, basis->dual(i), 1, z);
    out.zeta.push_back(std::move(z));
    out.zeta_bar.push_back(std::move(bar));
  }
  return out;
}

}  // namespace acq
