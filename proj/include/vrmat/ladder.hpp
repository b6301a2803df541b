#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vrmat/analysis.hpp"
#include "vrmat/ltmatrix.hpp"
#include "vrmat/poly.hpp"

namespace vrmat {

/// Transfer polynomials of the resistive ladder two-port:
/// T[0] = 1, T[1] = 1 + x, T[k+1] = (2 + x) * T[k] - T[k-1].
/// Returns T[0..n]; T[k] has degree k and constant term 1.
std::vector<Poly> transfer_polys(std::size_t n);

/// Coefficient triangle of the transfer polynomials: row i holds the
/// coefficients of T[i], ascending degree. This is the recurrence-built
/// ground truth the closed forms are compared against.
LTMatrix mnt(std::size_t n);

/// Closed-form candidates for the triangle entries.
enum class MntVariant {
    two_k,         // C(i + j, 2j)   -- matches the triangle
    two_k_plus_1,  // C(i + j, 2j + 1), mismatching variant
};
LTMatrix mnt_formula(std::size_t n, MntVariant variant);

/// Entrywise comparison of both closed forms against the triangle. The
/// first mismatch is located scanning the interior cells (k >= 1)
/// row-major first, then the k = 0 column.
struct MntCompareReport {
    std::size_t n = 0;
    bool two_k_matches = true;
    std::optional<CellFailure> two_k_mismatch;
    bool two_k_plus_1_matches = true;
    std::optional<CellFailure> two_k_plus_1_mismatch;

    std::string to_json() const;
};
MntCompareReport compare_mnt(std::size_t n);

/// Companion triangle with entries C(i + 2j, 3j + 1). Its first column is
/// 0, 1, 2, ... (entry (0,0) is 0), so weight inference on it is
/// underdetermined; verification against C(j + 2, 2) is the supported path.
LTMatrix mnt2(std::size_t n);

/// Column-recurrence identity sweeps: each triangle's closed form satisfies
/// the hockey-stick recurrence with its detected weights,
///
///   C(n+k, 2k+1)  = sum_{l=k-1}^{n-1} C(n-l, 1)   * C(l+k-1, 2k-1),
///   C(n+2k, 3k+1) = sum_{l=k-1}^{n-1} C(n-l+1, 2) * C(l+2k-2, 3k-2),
///
/// checked for all 1 <= k <= n <= max_n.
struct IdentitySweepReport {
    bool pass = true;
    std::size_t max_n = 0;
    std::optional<CellFailure> first_failure;

    std::string to_json() const;
};
IdentitySweepReport mnt_vertical_identity_check(std::size_t max_n);
IdentitySweepReport mnt2_vertical_identity_check(std::size_t max_n);

/// General-mode weight detection on the triangle (expected weights
/// 1, 2, 3, ...). Pre: n >= 2.
DetectionReport mnt_lambda_check(std::size_t n);

/// Weight verification of the companion triangle against C(j + 2, 2).
DetectionReport mnt2_lambda_check(std::size_t n);

}  // namespace vrmat
