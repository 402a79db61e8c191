#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "acq/category.hpp"
#include "acq/presentation.hpp"
#include "acq/scalar.hpp"

namespace acq {

// Exponent sums of each generator (rows) in each relator (columns), read mod n.
struct CongruenceSystem {
  std::uint64_t modulus = 1;
  std::vector<std::vector<long>> E;
};

CongruenceSystem congruence_system(const Presentation& p, std::uint64_t n);

// Number of b in (Z_n)^m with Σ_j E[k][j] b_j ≡ 0 (mod n) for every generator k.
// EnumerationTooLarge if n^m exceeds max_points.
std::uint64_t zn_count(const Presentation& p, std::uint64_t n,
                       std::uint64_t max_points = 10'000'000);

// Trace of the cyclic leg shift on the invariants of b^k, computed from the raw
// action matrices. EvaluationGuard if the carrier of b^k exceeds max_carrier.
Scalar brute_cycle_trace(const Category& c, SimpleLabel b, std::size_t k,
                         std::size_t max_carrier = 4096);

std::size_t selfdual_count(const Category& c);

}  // namespace acq
