#pragma once

#include <cstddef>
#include <vector>

#include "acq/category.hpp"
#include "acq/linear_map.hpp"
#include "acq/presentation.hpp"

namespace acq {

// A morphism with one distinguished domain leg (in) and codomain leg (out).
struct OpenBlock {
  LinearMap map;
  std::size_t in = 0;
  std::size_t out = 0;
};

// l > 0: identity on b^{l+1}, in = first domain leg, out = last codomain leg.
// l < 0: reverse_block(f_block(b*, |l|)), a map (b, b*^{|l|}) -> (b*^{|l|}, b).
// ZeroExponent for l = 0.
OpenBlock f_block(const Category& c, SimpleLabel b, long l);
// Bends the out-leg round to the front of the domain and the in-leg round to the
// back of the codomain; the new in/out legs are the dual objects.
OpenBlock reverse_block(const Category& c, const OpenBlock& f);
// Joins the out-leg of f to the in-leg of g.
OpenBlock chain(const Category& c, const OpenBlock& f, const OpenBlock& g);
// Joins the out-leg to the in-leg.
LinearMap close_block(const Category& c, const OpenBlock& f);

// R(b): the letters b^{l_1} ... b^{l_k}, with b^{-n} meaning (b*)^n.
ObjectWord relator_word(const Category& c, const Word& r, SimpleLabel b);
// r(b) times the chained blocks, before closing; requires a nonempty relator.
OpenBlock relator_open(const Category& c, const Word& r, SimpleLabel b);
// The closed endomorphism [R, b] of R(b); the empty relator gives r(b)^2 on ().
LinearMap relator_morphism(const Category& c, const Word& r, SimpleLabel b);

using RelatorAssignment = std::vector<SimpleLabel>;

// Rel(b) = R_1(b_1) ... R_m(b_m) and the generator owning each letter.
struct RelatorLetters {
  ObjectWord word;
  std::vector<std::size_t> generator;
};
RelatorLetters relator_letters(const Category& c, const Presentation& p,
                               const RelatorAssignment& b);
// perm[i] = position of letter i of Rel(b) once letters are grouped by generator.
std::vector<std::size_t> xi_layout(const Presentation& p);
// G_k(b): the letters of generator k in relator order.
std::vector<ObjectWord> generator_blocks(const Category& c, const Presentation& p,
                                         const RelatorAssignment& b);
LinearMap xi_permutation(const Category& c, const Presentation& p, const RelatorAssignment& b);

struct GlobalOptions {
  // Largest matrix or vector (in entries) any step may build.
  std::size_t max_entries = 1'000'000;
  unsigned jobs = 1;
};

// Contribution of one assignment, by contracting basis vectors of every
// F(1, G_k(b)) against the relator morphisms.
Scalar global_term(const Category& c, const Presentation& p, const RelatorAssignment& b,
                   const GlobalOptions& options = {});
// The same quantity by building ξ [P,b] ξ^{-1} densely and tracing the generator
// blocks to 1 in the given order (a permutation of generator indices).
Scalar global_term_dense(const Category& c, const Presentation& p, const RelatorAssignment& b,
                         const std::vector<std::size_t>& trace_order,
                         const GlobalOptions& options = {});

// Sum of global_term over all assignments. Assignments for which some G_k(b)
// has no invariants contribute zero and are skipped.
Scalar q_invariant_global(const Presentation& p, const Category& c,
                          const GlobalOptions& options = {});

}  // namespace acq
