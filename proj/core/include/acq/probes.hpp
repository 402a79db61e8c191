#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "acq/category.hpp"
#include "acq/linear_map.hpp"
#include "acq/presentation.hpp"
#include "acq/scalar.hpp"

namespace acq {

// Probes report data only. None of them asserts anything about the values.

// table[a][b][c] = dim F(a, b c).
using DimensionTable = std::vector<std::vector<std::vector<std::size_t>>>;
DimensionTable dimension_report(const Category& c);

struct Conjecture1bRow {
  SimpleLabel b;
  Scalar value;  // r(b)^{-1} Σ_c dim F(b, c c*)
};
struct Conjecture1bReport {
  std::vector<Conjecture1bRow> rows;
  std::size_t simple_count = 0;
};
Conjecture1bReport conjecture1b_probe(const Category& c);

struct CirculatorOrder {
  SimpleLabel a;
  SimpleLabel b;
  std::size_t block_dimension = 0;
  std::optional<std::size_t> order;  // empty if no k <= bound gives the identity
};
std::vector<CirculatorOrder> circulator_order_probe(const Category& c, std::size_t bound);

struct CorollaryReport {
  Presentation with_commutator;  // adds y and x_k y x_k^-1 y^-1
  Presentation with_generator;   // adds the relator x_k
  Scalar lhs;                    // Q(with_commutator)
  Scalar rhs;                    // |Σ| Q(with_generator)
  bool equal = false;
};
// Q is evaluated with the state-space method.
CorollaryReport corollary_probe(const Presentation& p, const Category& c, std::size_t k);

struct Conjecture2Row {
  SimpleLabel w;
  LinearMap trace;  // endomorphism of (b, w)
  bool zero = false;
  bool identity = false;
};
// Tr_{b^k -> w} of the cycle (1, 2, ..., k+1) on b^{k+1}, for every w.
std::vector<Conjecture2Row> conjecture2_probe(const Category& c, SimpleLabel b, std::size_t k,
                                              std::size_t max_carrier = 1'000'000);

}  // namespace acq
