#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "acq/category.hpp"
#include "acq/linear_map.hpp"

namespace acq {

enum class HomMethod {
  automatic,    // direct for small carriers, fusion tree otherwise; cached
  direct,       // nullspace of the intertwiner equations plus Gram correction
  fusion_tree,  // products of bases for F(c, W') and F(a, c w_last)
};

// A basis ε_i : a -> W of F(a, W) with dual basis ε_i* : W -> a,
// normalized so that ε_i* ∘ ε_j = δ_ij id_a.
struct HomBasis {
  SimpleLabel target;
  ObjectWord word;
  std::vector<Matrix> maps;   // carrier(W) x d_a
  std::vector<Matrix> duals;  // d_a x carrier(W)

  std::size_t size() const { return maps.size(); }
  LinearMap map(std::size_t i) const { return {ObjectWord{target}, word, maps.at(i)}; }
  LinearMap dual(std::size_t i) const { return {word, ObjectWord{target}, duals.at(i)}; }
};

// SemisimplicityFailure if the Gram matrix of the two intertwiner spaces is singular.
std::shared_ptr<const HomBasis> hom_basis(const Category& c, SimpleLabel a, const ObjectWord& w,
                                          HomMethod method = HomMethod::automatic);
std::size_t hom_dimension(const Category& c, SimpleLabel a, const ObjectWord& w);
// Dimension of the space of intertwiners a -> W, with no semisimplicity assumption.
std::size_t intertwiner_count(const Category& c, SimpleLabel a, const ObjectWord& w);

// r(φ) = λ_{A*} ∘ (id_{A*} ⊗ φ) ∘ Λ_A for an endomorphism φ of A.
Scalar rank(const Category& c, const LinearMap& f);

// Traces the factors [first, first + count) of an endomorphism down to b.
LinearMap partial_trace(const Category& c, const LinearMap& phi, std::size_t first,
                        std::size_t count, SimpleLabel b);
LinearMap partial_trace(const Category& c, const LinearMap& phi, std::size_t first,
                        std::size_t count, SimpleLabel b, const HomBasis& basis);

// f : A -> B gives f^ : B* -> A*.
LinearMap hat(const Category& c, const LinearMap& f);

// cycl(a,b,c) : F(a, bc) -> F(b*, c a*).
LinearMap cycl(const Category& c, SimpleLabel a, SimpleLabel b, SimpleLabel cc,
               const LinearMap& phi);

// ζ_i : c -> b* a and ζ̄_i : b* a -> c built from a basis of F(a, bc);
// the dual basis of {ζ_i} is {factor · ζ̄_i} with factor = r(c)/r(a).
struct ZetaBasis {
  std::vector<LinearMap> zeta;
  std::vector<LinearMap> zeta_bar;
  Scalar factor;
};
ZetaBasis zeta_bases(const Category& c, SimpleLabel a, SimpleLabel b, SimpleLabel cc);

}  // namespace acq
