#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vrmat/ltmatrix.hpp"
#include "vrmat/seq.hpp"

namespace vrmat {

/// Triangle driven by a diagonal parameter sequence s:
///
///   a[0][0] = 1,  a[0][k] = 0 for k > 0,
///   a[r][k] = a[r-1][k-1] + s[k] * a[r-1][k] + a[r-1][k+1]   (r >= 1),
///
/// reading out-of-triangle entries as zero. Rows r >= 1 use s[0..r-1].
LTMatrix build_admissible(const Seq& s, std::size_t n);

/// Row inner-product test: unit diagonal, and rows (zero-padded) satisfy
/// r_m . r_n == a[m+n][0] whenever m + n < order. The first violation is
/// reported; inner products are scanned by ascending m + n, then m.
struct AdmissibleReport {
    enum class Violation { none, diagonal, inner_product };

    bool pass = true;
    Violation violation = Violation::none;
    std::size_t m = 0;  // diagonal: unused; inner_product: first row index
    std::size_t n = 0;  // diagonal row, or second row index
    Integer expected;
    Integer actual;

    std::string to_json() const;
};
AdmissibleReport check_admissible(const LTMatrix& a);

/// Recovers the parameter sequence from the first subdiagonal:
/// s[0] = a[1][0], s[k] = a[k+1][k] - a[k][k-1]. Pre: order >= 2; returns
/// order - 1 values.
std::vector<Integer> sequence_from_admissible(const LTMatrix& a);

/// The first subdiagonal of the built triangle carries the partial sums:
/// a[k+1][k] == s[0] + ... + s[k] for all k < n.
bool subdiagonal_check(const Seq& s, std::size_t n);

}  // namespace vrmat
