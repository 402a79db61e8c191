#include "acq/eval_global.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "acq/errors.hpp"
#include "acq/hom.hpp"
#include "acq/tensor_index.hpp"

namespace acq {

namespace {

// Permutation sending position `from` to `to` and shifting the legs in between.
std::vector<std::size_t> move_leg(std::size_t n, std::size_t from, std::size_t to) {
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != from) order.push_back(i);
  }
  order.insert(order.begin() + static_cast<long>(to), from);
  return inverse_permutation(order);
}

ObjectWord without(const ObjectWord& w, std::size_t i) {
  return w.slice(0, i) + w.slice(i + 1, w.size() - i - 1);
}

void guard(std::size_t entries, const GlobalOptions& options, const char* what) {
  if (entries > options.max_entries) {
    throw EvaluationGuard(std::string(what) + " needs " + std::to_string(entries) +
                          " entries, above the limit of " + std::to_string(options.max_entries));
  }
}

std::size_t checked_product(std::size_t a, std::size_t b) {
  return a != 0 && b > std::numeric_limits<std::size_t>::max() / a
             ? std::numeric_limits<std::size_t>::max()
             : a * b;
}

std::size_t checked_square(std::size_t n) {
  return n > (std::size_t{1} << 31U) ? std::numeric_limits<std::size_t>::max() : n * n;
}

}  // namespace

OpenBlock f_block(const Category& c, SimpleLabel b, long l) {
  if (l == 0) throw ZeroExponent();
  if (l > 0) {
    const auto n = static_cast<std::size_t>(l);
    return {identity_map(c, ObjectWord::repeat(b, n + 1)), 0, n};
  }
  return reverse_block(c, f_block(c, c.dual(b), -l));
}

OpenBlock reverse_block(const Category& c, const OpenBlock& f) {
  const ObjectWord& a = f.map.domain;
  const ObjectWord& b = f.map.codomain;
  const SimpleLabel x = a[f.in];
  const SimpleLabel y = b[f.out];
  const SimpleLabel y_dual = c.dual(y);
  const SimpleLabel x_dual = c.dual(x);

  // (y*, A) -> (y*, y, B\out) -> B\out
  const LinearMap front = permute_codomain(c, f.map, move_leg(b.size(), f.out, 0));
  LinearMap bent = tensor(identity_map(c, ObjectWord{y_dual}), front);
  bent = apply_at(c, cap(c, y_dual), 0, bent);

  // (y*, A\in, x) then (y*, A\in) -> (y*, A\in, x, x*) -> (B\out, x*)
  const std::size_t in_pos = f.in + 1;
  const LinearMap moved = permute_domain(c, bent, move_leg(bent.domain.size(), in_pos, bent.domain.size() - 1));
  const ObjectWord rest = moved.domain.slice(0, moved.domain.size() - 1);
  const LinearMap opened = tensor(identity_map(c, rest), cup(c, x_dual));
  const LinearMap result = compose(tensor(moved, identity_map(c, ObjectWord{x_dual})), opened);
  return {result, 0, result.codomain.size() - 1};
}

OpenBlock chain(const Category& c, const OpenBlock& f, const OpenBlock& g) {
  const ObjectWord& b = f.map.codomain;
  const ObjectWord& cw = g.map.domain;
  if (!(b[f.out] == cw[g.in])) throw WordMismatch("chained legs carry different objects");
  const ObjectWord c_rest = without(cw, g.in);
  LinearMap joined = tensor(f.map, identity_map(c, c_rest));
  // Send leg out of B to position |B\out| + in, so that it lines up with g's domain.
  const std::size_t n = joined.codomain.size();
  joined = permute_codomain(c, joined, move_leg(n, f.out, b.size() - 1 + g.in));
  joined = apply_at(c, g.map, b.size() - 1, joined);
  return {joined, f.in, b.size() - 1 + g.out};
}

LinearMap close_block(const Category& c, const OpenBlock& f) {
  const ObjectWord& a = f.map.domain;
  const ObjectWord& b = f.map.codomain;
  const SimpleLabel x = a[f.in];
  if (!(b[f.out] == x)) throw WordMismatch("closed legs carry different objects");
  LinearMap m = permute_domain(c, f.map, move_leg(a.size(), f.in, a.size() - 1));
  m = permute_codomain(c, m, move_leg(b.size(), f.out, b.size() - 1));
  // (id ⊗ λ_x)(m ⊗ id_{x*})(id ⊗ Λ_{x*}) contracts the last legs through K = Λ_{x*} λ_x^T.
  const Matrix k = c.coform(c.dual(x)) * c.pairing(x).transpose();
  const ObjectWord a_rest = m.domain.slice(0, a.size() - 1);
  const ObjectWord b_rest = m.codomain.slice(0, b.size() - 1);
  const std::size_t d = c.dim(x);
  const Matrix t = apply_right(m.matrix, c.carrier(a_rest), 1, k);
  Matrix out(c.field(), c.carrier(b_rest), c.carrier(a_rest));
  for (std::size_t r = 0; r < out.rows(); ++r) {
    for (std::size_t col = 0; col < out.cols(); ++col) {
      Scalar s = Scalar::zero(c.field());
      for (std::size_t i = 0; i < d; ++i) s += t(r * d + i, col * d + i);
      out(r, col) = s;
    }
  }
  return {a_rest, b_rest, std::move(out)};
}

ObjectWord relator_word(const Category& c, const Word& r, SimpleLabel b) {
  ObjectWord w;
  for (const Syllable& s : r.syllables()) {
    const SimpleLabel letter = s.exponent > 0 ? b : c.dual(b);
    for (long i = 0; i < std::labs(s.exponent); ++i) w.push_back(letter);
  }
  return w;
}

OpenBlock relator_open(const Category& c, const Word& r, SimpleLabel b) {
  if (r.empty()) throw WordMismatch("the empty relator has no open form");
  const auto& s = r.syllables();
  OpenBlock acc = f_block(c, b, s[0].exponent);
  for (std::size_t i = 1; i < s.size(); ++i) acc = chain(c, acc, f_block(c, b, s[i].exponent));
  acc.map.matrix *= c.rank(b);
  return acc;
}

LinearMap relator_morphism(const Category& c, const Word& r, SimpleLabel b) {
  if (r.empty()) {
    const Scalar rb = c.rank(b);
    Matrix m(c.field(), 1, 1);
    m(0, 0) = rb * rb;
    return {ObjectWord{}, ObjectWord{}, std::move(m)};
  }
  return close_block(c, relator_open(c, r, b));
}

RelatorLetters relator_letters(const Category& c, const Presentation& p,
                               const RelatorAssignment& b) {
  if (b.size() != p.relators.size()) {
    throw DimensionMismatch("assignment length differs from the number of relators");
  }
  RelatorLetters out;
  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    for (const Syllable& s : p.relators[j].syllables()) {
      const SimpleLabel letter = s.exponent > 0 ? b[j] : c.dual(b[j]);
      for (long i = 0; i < std::labs(s.exponent); ++i) {
        out.word.push_back(letter);
        out.generator.push_back(s.generator);
      }
    }
  }
  return out;
}

std::vector<std::size_t> xi_layout(const Presentation& p) {
  std::vector<std::size_t> tags;
  for (const Word& r : p.relators) {
    for (const Syllable& s : r.syllables()) {
      for (long i = 0; i < std::labs(s.exponent); ++i) tags.push_back(s.generator);
    }
  }
  std::vector<std::size_t> offset(p.generators.size() + 1, 0);
  for (std::size_t g : tags) ++offset[g + 1];
  std::partial_sum(offset.begin(), offset.end(), offset.begin());
  std::vector<std::size_t> perm(tags.size());
  for (std::size_t i = 0; i < tags.size(); ++i) perm[i] = offset[tags[i]]++;
  return perm;
}

std::vector<ObjectWord> generator_blocks(const Category& c, const Presentation& p,
                                         const RelatorAssignment& b) {
  const RelatorLetters letters = relator_letters(c, p, b);
  std::vector<ObjectWord> blocks(p.generators.size());
  for (std::size_t i = 0; i < letters.word.size(); ++i) {
    blocks[letters.generator[i]].push_back(letters.word[i]);
  }
  return blocks;
}

LinearMap xi_permutation(const Category& c, const Presentation& p, const RelatorAssignment& b) {
  return permutation_map(c, relator_letters(c, p, b).word, xi_layout(p));
}

namespace {

class RelatorCache {
 public:
  RelatorCache(const Category& c, const Presentation& p, const GlobalOptions& options)
      : c_(c), p_(p), options_(options) {}

  const LinearMap& get(std::size_t j, SimpleLabel b) {
    auto key = std::make_pair(j, b);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const Word& r = p_.relators[j];
    const std::size_t work = c_.carrier(relator_word(c_, r, b)) * c_.dim(b);
    guard(checked_square(work), options_, "relator morphism");
    return cache_.emplace(key, relator_morphism(c_, r, b)).first->second;
  }

 private:
  const Category& c_;
  const Presentation& p_;
  const GlobalOptions& options_;
  std::map<std::pair<std::size_t, SimpleLabel>, LinearMap> cache_;
};

Scalar contract_term(const Category& c, const Presentation& p, const RelatorAssignment& b,
                     const GlobalOptions& options, RelatorCache& cache) {
  const Scalar zero = Scalar::zero(c.field());
  const RelatorLetters letters = relator_letters(c, p, b);
  const std::size_t total = c.carrier(letters.word);
  guard(total, options, "relator carrier");

  const std::vector<ObjectWord> blocks = generator_blocks(c, p, b);
  std::vector<std::shared_ptr<const HomBasis>> bases;
  for (const ObjectWord& g : blocks) {
    guard(checked_product(c.carrier(g), hom_dimension(c, kUnit, g)), options,
          "generator block basis");
    bases.push_back(hom_basis(c, kUnit, g));
    if (bases.back()->size() == 0) return zero;
  }

  std::vector<const Matrix*> morphisms;
  std::vector<std::size_t> carriers;
  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    morphisms.push_back(&cache.get(j, b[j]).matrix);
    carriers.push_back(morphisms.back()->rows());
  }
  // Rel-order index -> grouped index.
  const auto table = leg_permutation_table(c.dims(letters.word), xi_layout(p));

  Scalar sum = zero;
  std::vector<std::size_t> t(bases.size(), 0);
  while (true) {
    // Grouped-order tensor products of the chosen basis vectors and covectors.
    Vector u{Scalar::one(c.field())};
    Vector w{Scalar::one(c.field())};
    for (std::size_t k = 0; k < bases.size(); ++k) {
      const Matrix& e = bases[k]->maps[t[k]];
      const Matrix& f = bases[k]->duals[t[k]];
      Vector nu;
      Vector nw;
      nu.reserve(u.size() * e.rows());
      nw.reserve(w.size() * f.cols());
      for (const Scalar& x : u) {
        for (std::size_t i = 0; i < e.rows(); ++i) nu.push_back(x * e(i, 0));
      }
      for (const Scalar& x : w) {
        for (std::size_t i = 0; i < f.cols(); ++i) nw.push_back(x * f(0, i));
      }
      u = std::move(nu);
      w = std::move(nw);
    }
    Matrix v(c.field(), total, 1);
    for (std::size_t i = 0; i < total; ++i) v(i, 0) = u[table[i]];
    std::size_t pre = 1;
    std::size_t post = total;
    for (std::size_t j = 0; j < morphisms.size(); ++j) {
      post /= carriers[j];
      v = apply_left(*morphisms[j], pre, post, v);
      pre *= carriers[j];
    }
    for (std::size_t i = 0; i < total; ++i) {
      const Scalar& x = v(i, 0);
      if (!x.is_zero()) sum.add_product(w[table[i]], x);
    }
    std::size_t k = bases.size();
    while (k > 0) {
      --k;
      if (++t[k] < bases[k]->size()) break;
      t[k] = 0;
      if (k == 0) return sum;
    }
    if (bases.empty()) return sum;
  }
}

// Depth-first enumeration of assignments in lexicographic order, dropping any
// prefix that already forces some generator block to have no invariants.
void enumerate(const Category& c, const Presentation& p,
               const std::vector<std::vector<std::size_t>>& closing, const GlobalOptions& options,
               RelatorAssignment& prefix, std::vector<RelatorAssignment>& out) {
  const std::size_t j = prefix.size();
  if (j == p.relators.size()) {
    out.push_back(prefix);
    return;
  }
  for (SimpleLabel b : c.labels()) {
    prefix.push_back(b);
    bool alive = true;
    if (!closing[j].empty()) {
      // Blocks of generators whose last relator is j are now complete.
      RelatorAssignment padded = prefix;
      padded.resize(p.relators.size(), kUnit);
      const auto blocks = generator_blocks(c, p, padded);
      for (std::size_t k : closing[j]) {
        guard(c.carrier(blocks[k]), options, "generator block");
        if (hom_dimension(c, kUnit, blocks[k]) == 0) {
          alive = false;
          break;
        }
      }
    }
    if (alive) enumerate(c, p, closing, options, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Scalar global_term(const Category& c, const Presentation& p, const RelatorAssignment& b,
                   const GlobalOptions& options) {
  RelatorCache cache(c, p, options);
  return contract_term(c, p, b, options, cache);
}

Scalar global_term_dense(const Category& c, const Presentation& p, const RelatorAssignment& b,
                         const std::vector<std::size_t>& trace_order,
                         const GlobalOptions& options) {
  const RelatorLetters letters = relator_letters(c, p, b);
  const std::size_t total = c.carrier(letters.word);
  guard(checked_square(total), options, "dense relator product");
  LinearMap phi{ObjectWord{}, ObjectWord{}, Matrix::identity(c.field(), 1)};
  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    phi = tensor(phi, relator_morphism(c, p.relators[j], b[j]));
  }
  const LinearMap xi = xi_permutation(c, p, b);
  const auto perm = xi_layout(p);
  phi = permute_domain(c, permute_codomain(c, phi, perm), perm);
  if (!(phi.domain == xi.codomain)) throw WordMismatch("regrouped word mismatch");

  const std::vector<ObjectWord> blocks = generator_blocks(c, p, b);
  // After tracing, a block occupies exactly one leg (the unit).
  std::vector<std::size_t> width;
  for (const ObjectWord& g : blocks) width.push_back(g.size());
  for (std::size_t k : trace_order) {
    std::size_t first = 0;
    for (std::size_t i = 0; i < k; ++i) first += width[i];
    phi = partial_trace(c, phi, first, width[k], kUnit);
    width[k] = 1;
  }
  if (phi.matrix.rows() != 1 || phi.matrix.cols() != 1) {
    throw DimensionMismatch("trace order did not cover every generator");
  }
  return phi.matrix(0, 0);
}

Scalar q_invariant_global(const Presentation& p, const Category& c,
                          const GlobalOptions& options) {
  std::vector<std::vector<std::size_t>> closing(p.relators.size());
  for (std::size_t k = 0; k < p.generators.size(); ++k) {
    for (std::size_t j = p.relators.size(); j-- > 0;) {
      bool found = false;
      for (const Syllable& s : p.relators[j].syllables()) found = found || s.generator == k;
      if (found) {
        closing[j].push_back(k);
        break;
      }
    }
  }
  std::vector<RelatorAssignment> assignments;
  RelatorAssignment prefix;
  enumerate(c, p, closing, options, prefix, assignments);

  const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, assignments.size()));
  std::vector<Scalar> partial(jobs, Scalar::zero(c.field()));
  std::vector<std::exception_ptr> errors(jobs);
  auto worker = [&](unsigned w) {
    try {
      RelatorCache cache(c, p, options);
      for (std::size_t i = w; i < assignments.size(); i += jobs) {
        partial[w] += contract_term(c, p, assignments[i], options, cache);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (auto& th : threads) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Scalar sum = Scalar::zero(c.field());
  for (const Scalar& s : partial) sum += s;
  return sum;
}

}  // namespace acq
