#pragma once

#include <cstddef>
#include <vector>

#include "acq/matrix.hpp"

namespace acq {

// Helpers for matrices whose row/column spaces are tensor products of
// smaller spaces, flattened with the leftmost factor most significant.

std::size_t dims_product(const std::vector<std::size_t>& dims);

// perm[i] is the position that leg i moves to. Returns, for every flat index
// of the source layout, the flat index in the permuted layout.
std::vector<std::size_t> leg_permutation_table(const std::vector<std::size_t>& dims,
                                               const std::vector<std::size_t>& perm);
std::vector<std::size_t> inverse_permutation(const std::vector<std::size_t>& perm);
// Dimensions after moving leg i to perm[i].
std::vector<std::size_t> permuted_dims(const std::vector<std::size_t>& dims,
                                       const std::vector<std::size_t>& perm);

// Row r of the input becomes row table[r] of the output (likewise for columns).
Matrix permute_rows(const Matrix& m, const std::vector<std::size_t>& table);
Matrix permute_cols(const Matrix& m, const std::vector<std::size_t>& table);

// (I_pre ⊗ x ⊗ I_post) · m, without forming the Kronecker product.
Matrix apply_left(const Matrix& x, std::size_t pre, std::size_t post, const Matrix& m);
// m · (I_pre ⊗ x ⊗ I_post).
Matrix apply_right(const Matrix& m, std::size_t pre, std::size_t post, const Matrix& x);

}  // namespace acq
