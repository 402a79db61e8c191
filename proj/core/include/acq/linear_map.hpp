#pragma once

#include <cstddef>
#include <vector>

#include "acq/category.hpp"
#include "acq/matrix.hpp"

namespace acq {

// A morphism between tensor words, as a codomain-carrier x domain-carrier matrix.
struct LinearMap {
  ObjectWord domain;
  ObjectWord codomain;
  Matrix matrix;

  bool operator==(const LinearMap&) const = default;
};

LinearMap identity_map(const Category& c, const ObjectWord& w);
// f ∘ g; WordMismatch unless codomain(g) = domain(f).
LinearMap compose(const LinearMap& f, const LinearMap& g);
LinearMap tensor(const LinearMap& f, const LinearMap& g);
LinearMap scale(const Scalar& s, LinearMap f);
LinearMap add(const LinearMap& f, const LinearMap& g);

// Factor i of w moves to position perm[i].
LinearMap permutation_map(const Category& c, const ObjectWord& w,
                          const std::vector<std::size_t>& perm);
// Exchanges factors i and i+1.
LinearMap swap(const Category& c, const ObjectWord& w, std::size_t i);
// Relabels legs of an existing map without a matrix product.
LinearMap permute_codomain(const Category& c, const LinearMap& f,
                           const std::vector<std::size_t>& perm);
LinearMap permute_domain(const Category& c, const LinearMap& f,
                         const std::vector<std::size_t>& perm);

// λ_b : (b, b*) -> ().
LinearMap cap(const Category& c, SimpleLabel b);
// Λ_b : () -> (b*, b).
LinearMap cup(const Category& c, SimpleLabel b);
// Nested forms for words: λ_W : W W* -> (), Λ_W : () -> W* W.
LinearMap word_cap(const Category& c, const ObjectWord& w);
LinearMap word_cup(const Category& c, const ObjectWord& w);

// id_pre ⊗ f ⊗ id_post applied on the left of g, i.e. (id ⊗ f ⊗ id) ∘ g,
// where f acts on codomain(g) factors [first, first + |dom f|).
LinearMap apply_at(const Category& c, const LinearMap& f, std::size_t first, const LinearMap& g);

}  // namespace acq
