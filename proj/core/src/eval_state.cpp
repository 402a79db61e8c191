#include "acq/eval_state.hpp"

#include <algorithm>

#include "acq/errors.hpp"
#include "acq/eval_global.hpp"
#include "acq/hom.hpp"
#include "acq/linear_map.hpp"
#include "acq/tensor_index.hpp"

namespace acq {

namespace {

ObjectWord triple(const Category& c, SimpleLabel b, SimpleLabel x) {
  return ObjectWord{b, x, c.dual(x)};
}

CirculatorMatrix empty_layout(const Category& c, SimpleLabel a, SimpleLabel b) {
  CirculatorMatrix m{a, b, {0}, {}};
  for (SimpleLabel x : c.labels()) {
    m.offsets.push_back(m.offsets.back() + hom_dimension(c, a, triple(c, b, x)));
  }
  const std::size_t n = m.offsets.back();
  m.matrix = Matrix(c.field(), n, n);
  return m;
}

// Writes the coordinates of phi : a -> (b, z, z*) into column `col`.
void store_column(const Category& c, CirculatorMatrix& m, SimpleLabel z, const Matrix& phi,
                  std::size_t col) {
  const auto basis = hom_basis(c, m.a, triple(c, m.b, z));
  for (std::size_t k = 0; k < basis->size(); ++k) {
    m.matrix(m.offsets[z.index] + k, col) = (basis->duals[k] * phi)(0, 0);
  }
}

Matrix column_of(const Vector& v, Field f) { return Matrix::column(f, v); }

std::vector<std::size_t> adjacent_pair_perm(std::size_t legs, std::size_t pair) {
  std::vector<std::size_t> perm(legs);
  for (std::size_t q = 0; q < legs; ++q) perm[q] = q;
  for (std::size_t q = 2; q < 2 * pair; ++q) perm[q] = q + 2;
  perm[2 * pair] = 2;
  perm[2 * pair + 1] = 3;
  return perm;
}

void accumulate(Vector& into, const Matrix& add) {
  if (into.empty()) {
    into = add.entries();
    return;
  }
  for (std::size_t i = 0; i < into.size(); ++i) {
    if (!add.entries()[i].is_zero()) into[i] += add.entries()[i];
  }
}

bool all_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace

ObjectWord pair_word(const Category& c, const std::vector<SimpleLabel>& tuple) {
  ObjectWord w;
  for (SimpleLabel y : tuple) {
    w.push_back(y);
    w.push_back(c.dual(y));
  }
  return w;
}

Vector coordinates(const Category& c, const StateVector& v,
                   const std::vector<SimpleLabel>& tuple) {
  const auto basis = hom_basis(c, kUnit, pair_word(c, tuple));
  Vector out(basis->size(), Scalar::zero(c.field()));
  auto it = v.components.find(tuple);
  if (it == v.components.end()) return out;
  const Matrix col = column_of(it->second, c.field());
  for (std::size_t i = 0; i < basis->size(); ++i) out[i] = (basis->duals[i] * col)(0, 0);
  return out;
}

CirculatorMatrix circulator(const Category& c, SimpleLabel a, SimpleLabel b) {
  CirculatorMatrix m = empty_layout(c, a, b);
  for (SimpleLabel x : c.labels()) {
    const auto source = hom_basis(c, a, triple(c, b, x));
    const SimpleLabel x_dual = c.dual(x);
    for (std::size_t j = 0; j < source->size(); ++j) {
      // (b, x, x*) -> (x, x*, b)
      const LinearMap rotated = permute_codomain(c, source->map(j), {2, 0, 1});
      for (SimpleLabel mid : c.labels()) {
        // ∇^{-1} through F(a, x mid) ⊗ F(mid, x* b); mid = z*.
        const auto split = hom_basis(c, mid, ObjectWord{x_dual, b});
        if (split->size() == 0) continue;
        const SimpleLabel z = c.dual(mid);
        Matrix total(c.field(), c.carrier(triple(c, b, z)), c.dim(a));
        for (std::size_t i = 0; i < split->size(); ++i) {
          const LinearMap head = apply_at(c, split->dual(i), 1, rotated);
          const LinearMap turned = cycl(c, mid, x_dual, b, split->map(i));
          total += apply_at(c, turned, 0, head).matrix;
        }
        store_column(c, m, z, total, m.offsets[x.index] + j);
      }
    }
  }
  return m;
}

CirculatorMatrix circulator_inverse(const Category& c, SimpleLabel a, SimpleLabel b) {
  CirculatorMatrix m = empty_layout(c, a, b);
  const SimpleLabel b_dual = c.dual(b);
  for (SimpleLabel z : c.labels()) {
    const auto source = hom_basis(c, a, triple(c, b, z));
    for (std::size_t k = 0; k < source->size(); ++k) {
      const LinearMap phi = source->map(k);
      for (SimpleLabel x : c.labels()) {
        const auto split = hom_basis(c, x, ObjectWord{b, z});
        if (split->size() == 0) continue;
        const SimpleLabel x_dual = c.dual(x);
        Matrix total(c.field(), c.carrier(ObjectWord{x, x_dual, b}), c.dim(a));
        for (std::size_t i = 0; i < split->size(); ++i) {
          const LinearMap head = apply_at(c, split->dual(i), 0, phi);  // a -> (x, z*)
          const LinearMap once = cycl(c, x, b, z, split->map(i));     // b* -> (z, x*)
          const LinearMap back = cycl(c, b_dual, z, x_dual, once);    // z* -> (x*, b)
          total += apply_at(c, back, 1, head).matrix;
        }
        // (x, x*, b) -> (b, x, x*)
        const LinearMap placed =
            permute_codomain(c, {ObjectWord{a}, ObjectWord{x, x_dual, b}, std::move(total)},
                             {1, 2, 0});
        store_column(c, m, x, placed.matrix, m.offsets[z.index] + k);
      }
    }
  }
  return m;
}

CirculatorMatrix circulator_power(const Category& c, SimpleLabel a, SimpleLabel b, long l) {
  if (l == 0) {
    CirculatorMatrix m = empty_layout(c, a, b);
    m.matrix = Matrix::identity(c.field(), m.matrix.rows());
    return m;
  }
  CirculatorMatrix m = l > 0 ? circulator(c, a, b) : circulator_inverse(c, a, b);
  m.matrix = mat_pow(m.matrix, std::labs(l));
  return m;
}

CirculatorMatrix cr_assembly(const Category& c, SimpleLabel a, SimpleLabel b, long l) {
  if (l == 0) return circulator_power(c, a, b, 0);
  CirculatorMatrix m = empty_layout(c, a, b);
  const LinearMap block = f_block(c, b, l).map;
  const ObjectWord power = relator_word(c, Word{Syllable{0, l}}, b);
  for (SimpleLabel x : c.labels()) {
    const auto source = hom_basis(c, a, triple(c, b, x));
    const SimpleLabel x_dual = c.dual(x);
    for (std::size_t j = 0; j < source->size(); ++j) {
      // (b, x, x*) -> (x*, b, x)
      const LinearMap rotated = permute_codomain(c, source->map(j), {1, 2, 0});
      for (SimpleLabel w : c.labels()) {
        const auto inner = hom_basis(c, c.dual(w), ObjectWord{x_dual} + power);
        if (inner->size() == 0) continue;
        const LinearMap opened = tensor(rotated, cup(c, w));  // (x*, b, x, w*, w)
        Matrix total(c.field(), c.carrier(triple(c, b, w)), c.dim(a));
        for (std::size_t i = 0; i < inner->size(); ++i) {
          LinearMap step = apply_at(c, inner->map(i), 3, opened);  // (x*, b, x, x*, b^l, w)
          step = apply_at(c, cap(c, x), 2, step);                  // (x*, b, b^l, w)
          step = apply_at(c, block, 1, step);                      // (x*, b^l, b, w)
          step = apply_at(c, inner->dual(i), 0, step);             // (w*, b, w)
          total += permute_codomain(c, step, {2, 0, 1}).matrix;    // (b, w, w*)
        }
        store_column(c, m, w, total, m.offsets[x.index] + j);
      }
    }
  }
  return m;
}

std::shared_ptr<const CirculatorMatrix> CirculatorCache::power(SimpleLabel a, SimpleLabel b,
                                                               long l) {
  const auto key = std::make_tuple(a, b, l);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = powers_.find(key);
    if (it != powers_.end()) return it->second;
  }
  std::shared_ptr<const CirculatorMatrix> value;
  if (l == 0 || l == 1 || l == -1) {
    value = std::make_shared<const CirculatorMatrix>(circulator_power(c_, a, b, l));
  } else {
    // Square-and-multiply on top of cached smaller powers.
    const long half = l / 2;
    const auto h = power(a, b, half);
    CirculatorMatrix m = *h;
    m.matrix = h->matrix * h->matrix;
    if (l % 2 != 0) m.matrix = power(a, b, l > 0 ? 1 : -1)->matrix * m.matrix;
    value = std::make_shared<const CirculatorMatrix>(std::move(m));
  }
  std::lock_guard<std::mutex> lock(mutex_);
  return powers_.emplace(key, std::move(value)).first->second;
}

StateVector begin_presentation(const Category& c, std::size_t n) {
  StateVector v;
  v.field = c.field();
  v.level = n;
  v.components[std::vector<SimpleLabel>(n, kUnit)] = Vector{Scalar::one(c.field())};
  return v;
}

StateVector begin_relation(const Category& c, const StateVector& v) {
  if (v.relation_open) throw WordMismatch("a relation is already open");
  StateVector out;
  out.field = v.field;
  out.level = v.level + 1;
  out.relation_open = true;
  for (const auto& [tuple, phi] : v.components) {
    for (SimpleLabel b : c.labels()) {
      const Scalar rb = c.rank(b);
      const Scalar weight = rb * rb;
      const auto& coform = c.coform(b).entries();
      Vector vec;
      vec.reserve(coform.size() * phi.size());
      for (const Scalar& m : coform) {
        for (const Scalar& x : phi) vec.push_back(weight * m * x);
      }
      std::vector<SimpleLabel> key;
      key.push_back(c.dual(b));
      key.insert(key.end(), tuple.begin(), tuple.end());
      out.components[std::move(key)] = std::move(vec);
    }
  }
  return out;
}

StateVector apply_factor(const Category& c, const StateVector& v, std::size_t i, long s,
                         CirculatorCache* cache) {
  if (!v.relation_open) throw WordMismatch("apply_factor needs an open relation");
  if (i + 1 >= v.level) throw IndexOutOfRange("generator index out of range");
  if (s == 0) return v;
  CirculatorCache local(c);
  CirculatorCache& circ = cache != nullptr ? *cache : local;
  const std::size_t pair = i + 1;

  StateVector out;
  out.field = v.field;
  out.level = v.level;
  out.relation_open = true;
  for (const auto& [tuple, phi] : v.components) {
    const SimpleLabel b_dual = tuple[0];
    const SimpleLabel b = c.dual(b_dual);
    const SimpleLabel x = tuple[pair];
    const ObjectWord word = pair_word(c, tuple);
    const auto perm = adjacent_pair_perm(word.size(), pair);
    const auto table = leg_permutation_table(c.dims(word), perm);
    Matrix moved(c.field(), phi.size(), 1);
    for (std::size_t k = 0; k < phi.size(); ++k) moved(table[k], 0) = phi[k];
    const std::size_t pre = c.dim(b_dual);
    const std::size_t rest = phi.size() / (pre * c.carrier(triple(c, b, x)));

    std::map<SimpleLabel, Vector> by_target;
    for (SimpleLabel a : c.labels()) {
      const auto source = hom_basis(c, a, triple(c, b, x));
      if (source->size() == 0) continue;
      const auto cr = circ.power(a, b, s);
      std::vector<Matrix> split;
      for (std::size_t j = 0; j < source->size(); ++j) {
        split.push_back(apply_left(source->duals[j], pre, rest, moved));
      }
      const std::size_t from = cr->offsets[x.index];
      for (SimpleLabel z : c.labels()) {
        const std::size_t nz = cr->block_size(z);
        if (nz == 0) continue;
        const auto target = hom_basis(c, a, triple(c, b, z));
        for (std::size_t k = 0; k < nz; ++k) {
          Matrix eta(c.field(), split.front().rows(), 1);
          bool any = false;
          for (std::size_t j = 0; j < split.size(); ++j) {
            const Scalar& w = cr->matrix(cr->offsets[z.index] + k, from + j);
            if (w.is_zero()) continue;
            eta += w * split[j];
            any = true;
          }
          if (!any) continue;
          accumulate(by_target[z], apply_left(target->maps[k], pre, rest, eta));
        }
      }
    }
    for (auto& [z, adj] : by_target) {
      std::vector<SimpleLabel> key = tuple;
      key[pair] = z;
      const ObjectWord new_word = pair_word(c, key);
      const auto back = leg_permutation_table(c.dims(new_word), perm);
      Vector vec(adj.size(), Scalar::zero(c.field()));
      for (std::size_t k = 0; k < vec.size(); ++k) vec[k] = adj[back[k]];
      auto [it, inserted] = out.components.try_emplace(std::move(key), std::move(vec));
      if (!inserted) {
        Vector& acc = it->second;
        Vector add = std::move(vec);
        for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += add[k];
      }
    }
  }
  for (auto it = out.components.begin(); it != out.components.end();) {
    it = all_zero(it->second) ? out.components.erase(it) : std::next(it);
  }
  return out;
}

StateVector end_relation(const Category& c, const StateVector& v) {
  if (!v.relation_open) throw WordMismatch("no open relation to end");
  StateVector out;
  out.field = v.field;
  out.level = v.level - 1;
  for (const auto& [tuple, phi] : v.components) {
    const SimpleLabel b_dual = tuple[0];
    const Scalar weight = c.rank_inverse(c.dual(b_dual));
    const Matrix& form = c.pairing(b_dual);  // λ_{b*} on (b*, b)
    const std::size_t rest = phi.size() / form.size();
    Vector vec(rest, Scalar::zero(c.field()));
    for (std::size_t u = 0; u < form.size(); ++u) {
      const Scalar& l = form.entries()[u];
      if (l.is_zero()) continue;
      for (std::size_t r = 0; r < rest; ++r) {
        const Scalar& x = phi[u * rest + r];
        if (!x.is_zero()) vec[r].add_product(l, x);
      }
    }
    for (Scalar& x : vec) x *= weight;
    std::vector<SimpleLabel> key(tuple.begin() + 1, tuple.end());
    auto [it, inserted] = out.components.try_emplace(std::move(key), vec);
    if (!inserted) {
      for (std::size_t k = 0; k < vec.size(); ++k) it->second[k] += vec[k];
    }
  }
  for (auto it = out.components.begin(); it != out.components.end();) {
    it = all_zero(it->second) ? out.components.erase(it) : std::next(it);
  }
  return out;
}

Scalar end_presentation(const Category& c, const StateVector& v) {
  if (v.relation_open) throw WordMismatch("a relation is still open");
  auto it = v.components.find(std::vector<SimpleLabel>(v.level, kUnit));
  if (it == v.components.end()) return Scalar::zero(c.field());
  return it->second.at(0);
}

Scalar q_invariant_state(const Presentation& p, const Category& c, const StateOptions& options) {
  const std::size_t n = p.generators.size();
  std::vector<std::size_t> last_use(n, 0);
  std::vector<bool> used(n, false);
  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    for (const Syllable& s : p.relators[j].syllables()) {
      last_use[s.generator] = j;
      used[s.generator] = true;
    }
  }
  CirculatorCache cache(c);
  StateVector v = begin_presentation(c, n);
  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    v = begin_relation(c, v);
    for (const Syllable& s : p.relators[j].syllables()) {
      v = apply_factor(c, v, s.generator, s.exponent, &cache);
      for (const auto& [tuple, phi] : v.components) {
        if (phi.size() > options.max_entries) {
          throw EvaluationGuard("state component of " + std::to_string(phi.size()) +
                                " entries exceeds the limit of " +
                                std::to_string(options.max_entries));
        }
      }
    }
    v = end_relation(c, v);
    if (options.prune) {
      for (auto it = v.components.begin(); it != v.components.end();) {
        bool dead = false;
        for (std::size_t k = 0; k < n && !dead; ++k) {
          dead = used[k] && last_use[k] <= j && !(it->first[k] == kUnit);
        }
        it = dead ? v.components.erase(it) : std::next(it);
      }
    }
  }
  return end_presentation(c, v);
}

}  // namespace acq
