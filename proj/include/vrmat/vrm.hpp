#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "vrmat/ltmatrix.hpp"
#include "vrmat/seq.hpp"

namespace vrmat {

/// Recipe for a vertically-recurrent matrix of order n + 1: a weight
/// sequence plus, optionally, an independent first column.
///
/// In the strict shape the first column IS the weight sequence and the
/// leading weight must be 1. The general shape supplies its own first
/// column (the weights then only drive the recurrence), which covers
/// triangles whose first column differs from their weights.
struct VrmSpec {
    Seq weights;
    std::optional<std::vector<Integer>> first_column;  // engaged => general

    static VrmSpec strict(Seq weights);
    static VrmSpec general(Seq weights, std::vector<Integer> first_column);

    bool is_strict() const { return !first_column.has_value(); }
};

/// Builds the order-(n+1) matrix column by column from the hockey-stick
/// recurrence
///
///   a[r][k] = sum_{l = k-1}^{r-1} w[r-1-l] * a[l][k-1]    (r >= k >= 1),
///
/// with column 0 given by the spec. Strict specs require w[0] == 1
/// (std::domain_error otherwise); general first columns must have exactly
/// n + 1 entries (std::invalid_argument).
LTMatrix build_vrm(const VrmSpec& spec, std::size_t n);

/// Lower-triangular Toeplitz matrix of order n + 1: entry (i, j) = w[i - j].
LTMatrix toeplitz(const Seq& weights, std::size_t n);

/// Identity block of size k in the upper-left corner, Toeplitz block of
/// order n + 1 - k in the lower-right: I_k (+) T[w]. k == 0 gives the full
/// Toeplitz matrix, k == n the order-(n+1) identity. Pre: k <= n.
LTMatrix toeplitz_block(const Seq& weights, std::size_t n, std::size_t k);

/// One factorization step: V = T * ([1] (+) V'), returned as the pair
/// (T, [1] (+) V'). The product is checked against the built matrix before
/// returning. Pre: strict-buildable weights; n >= 1.
std::pair<LTMatrix, LTMatrix> decompose_step(const Seq& weights, std::size_t n);

/// Full factorization into block-Toeplitz factors, leftmost factor first:
/// V = F_0 * F_1 * ... * F_{n-1} with F_k = toeplitz_block(w, n, k).
/// n == 0 yields an empty list (the order-1 matrix is [1]).
/// The product is checked against the built matrix before returning.
std::vector<LTMatrix> decompose_chain(const Seq& weights, std::size_t n);

/// Inverse of the strict-shape matrix, assembled as the reversed chain of
/// block-Toeplitz inverses; each block inverse is the Toeplitz matrix of the
/// convolution inverse of the weights. The product against the forward
/// matrix is checked to be the identity before returning.
/// Pre: w[0] is 1 or -1 (std::domain_error otherwise).
LTMatrix vrm_inverse(const Seq& weights, std::size_t n);

/// Binomial coefficient matrix: entry (i, j) = C(i, j).
LTMatrix pascal(std::size_t n);

/// One-parameter Pascal family: entry (i, j) = C(i, j) * x^(i-j).
/// pascal_func(n, x) * pascal_func(n, y) == pascal_func(n, x + y).
LTMatrix pascal_func(std::size_t n, const Integer& x);

/// Shifted-index Pascal variant: entry (i, j) = C(i+1, j+1) * x^(i-j).
LTMatrix pascal_kelim(std::size_t n, const Integer& x);

/// Geometric shift matrix: entry (i, j) = x^(i-j). Satisfies
/// s_matrix(n, x) == pascal_kelim(n, x) * pascal_func(n, -x).
LTMatrix s_matrix(std::size_t n, const Integer& x);

}  // namespace vrmat
