#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "acq/category.hpp"
#include "acq/presentation.hpp"

namespace acq {

// An element of V(k) = ⊕ F(1, y_1 y_1* ... y_k y_k*). Each component is kept as a
// vector in the carrier of its word; coordinates() converts to hom-basis
// coordinates. While a relation is open, pair 0 holds the relation's b*.
struct StateVector {
  Field field;
  std::size_t level = 0;
  bool relation_open = false;
  std::map<std::vector<SimpleLabel>, Vector> components;
};

ObjectWord pair_word(const Category& c, const std::vector<SimpleLabel>& tuple);
// Coordinates of one component in the basis hom_basis(1, pair_word(tuple)).
Vector coordinates(const Category& c, const StateVector& v, const std::vector<SimpleLabel>& tuple);

// Endomorphism of ⊕_x F(a, b x x*), block (x, j) at offset(x) + j where j
// indexes hom_basis(a, (b, x, x*)).
struct CirculatorMatrix {
  SimpleLabel a;
  SimpleLabel b;
  std::vector<std::size_t> offsets;  // |Σ| + 1 prefix sums of block sizes
  Matrix matrix;

  std::size_t block_size(SimpleLabel x) const { return offsets[x.index + 1] - offsets[x.index]; }
};

CirculatorMatrix circulator(const Category& c, SimpleLabel a, SimpleLabel b);
// Built from cycl^{-1} = cycl(b*, z, x*) ∘ cycl(x, b, z), not by matrix inversion.
CirculatorMatrix circulator_inverse(const Category& c, SimpleLabel a, SimpleLabel b);
// l = 0 gives the identity; negative powers use circulator_inverse.
CirculatorMatrix circulator_power(const Category& c, SimpleLabel a, SimpleLabel b, long l);
// Column (x, j) holds ⊕_w cr(l, b, x, w) ∘ ε_j(a, b x x*), assembled from f(b, l).
CirculatorMatrix cr_assembly(const Category& c, SimpleLabel a, SimpleLabel b, long l);

// Thread-safe memo of circulator powers keyed by (a, b, l).
class CirculatorCache {
 public:
  explicit CirculatorCache(const Category& c) : c_(c) {}
  std::shared_ptr<const CirculatorMatrix> power(SimpleLabel a, SimpleLabel b, long l);

 private:
  const Category& c_;
  std::mutex mutex_;
  std::map<std::tuple<SimpleLabel, SimpleLabel, long>, std::shared_ptr<const CirculatorMatrix>>
      powers_;
};

StateVector begin_presentation(const Category& c, std::size_t n);
StateVector begin_relation(const Category& c, const StateVector& v);
// Generator i (zero-based) raised to s; requires an open relation.
StateVector apply_factor(const Category& c, const StateVector& v, std::size_t i, long s,
                         CirculatorCache* cache = nullptr);
StateVector end_relation(const Category& c, const StateVector& v);
Scalar end_presentation(const Category& c, const StateVector& v);

struct StateOptions {
  // Drop components whose pair for a generator is nontrivial once no later
  // relator touches that generator; they cannot reach the trivial summand.
  bool prune = true;
  std::size_t max_entries = 1'000'000;
};

Scalar q_invariant_state(const Presentation& p, const Category& c,
                         const StateOptions& options = {});

}  // namespace acq
