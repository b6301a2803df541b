#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vrmat/ltmatrix.hpp"
#include "vrmat/seq.hpp"
#include "vrmat/vrm.hpp"

namespace vrmat {

enum class Verdict { pass, fail, underdetermined };
enum class DetectMode { strict, general, verify };

std::string to_string(Verdict v);
std::string to_string(DetectMode m);

/// First cell where a checked relation breaks, with both sides of the
/// equation. Values are rationals because inferred weights may be.
struct CellFailure {
    std::size_t row = 0;
    std::size_t col = 0;
    Rational expected;
    Rational actual;
};

/// Outcome of weight detection or verification on a triangle.
struct DetectionReport {
    Verdict verdict = Verdict::pass;
    DetectMode mode = DetectMode::general;
    std::vector<Rational> lambda;  // candidate / inferred / supplied weights
    bool lambda_integral = true;
    std::optional<CellFailure> first_failure;

    std::string to_json() const;
};
DetectionReport detection_report_from_json(const std::string& text);

/// Weight detection.
///
/// strict: the candidate weights are the first column (requires entry
/// (0,0) == 1); the recurrence is then verified at every interior cell.
///
/// general: the weights are solved from column 1 -- for r >= 1,
/// a[r][1] = sum_{l=0}^{r-1} w[r-1-l] * a[l][0] -- then columns k >= 2 are
/// verified. Solving is exact over the rationals; non-integer weights are
/// reported with lambda_integral == false. When leading zeros in column 0
/// leave some weight unconstrained the verdict is underdetermined and
/// lambda holds the determined prefix (verify_lambda is the supported path
/// for such matrices).
///
/// Pre: order >= 2 (std::invalid_argument otherwise).
DetectionReport infer_lambda(const LTMatrix& a, DetectMode mode);

/// Checks the recurrence at every interior cell with the supplied weights;
/// when first_col_is_lambda is set, also checks column 0 against them.
DetectionReport verify_lambda(const LTMatrix& a, const Seq& weights,
                              bool first_col_is_lambda);

/// Least-squares-free exact fit of the two-term recurrence
/// a[r][k] = alpha * a[r-1][k-1] + beta * a[r-1][k] over all cells
/// r >= k >= 1. alpha comes from cell (1,1); beta from the first cell
/// that constrains it (underdetermined verdict when none does).
/// Pre: order >= 3 and entry (0,0) != 0.
struct FitReport {
    Verdict verdict = Verdict::pass;
    Rational alpha;
    Rational beta;
    bool coefficients_integral = true;
    std::optional<CellFailure> first_failure;

    std::string to_json() const;
};
FitReport fit_pascal_recurrence(const LTMatrix& a);

/// Array with unit first column driven by the two-term recurrence above.
LTMatrix two_term_array(const Integer& alpha, const Integer& beta, std::size_t n);

/// Product law for two-term arrays with unit first columns: C = A * B obeys
/// the same recurrence with coefficients (alpha*alpha2, beta + alpha*beta2),
/// and its first column is the row sums of A. Returns whether both hold.
/// Pre: n >= 2.
bool two_term_product_check(const Integer& alpha, const Integer& beta,
                            const Integer& alpha2, const Integer& beta2,
                            std::size_t n);

/// First column of the m-th power together with a general-mode detection
/// report for it. Pre: m >= 1.
std::pair<std::vector<Integer>, DetectionReport>
power_sequence(const VrmSpec& spec, std::size_t n, unsigned long m);

/// Power law for the constant-weight matrix (first column and weights all
/// lambda). With mu = geom_sum(lambda, m), the m-th power's first column
/// should be lambda^m * mu^j and the two-term fit should yield
/// (lambda^m, mu). The row-indexed variant replaces the second coefficient
/// by mu^row; its outcome is recorded, not asserted.
struct ConstantPowerReport {
    Integer lambda;
    std::size_t n = 0;
    unsigned long m = 1;
    std::vector<Integer> first_column;
    bool first_column_matches = false;
    std::optional<FitReport> fit;  // engaged when order >= 3
    bool fit_matches = false;
    bool row_indexed_variant_fits = false;

    bool pass() const { return first_column_matches && (!fit || fit_matches); }
    std::string to_json() const;
};
ConstantPowerReport constant_power_check(const Integer& lambda, std::size_t n,
                                         unsigned long m);

/// Power law for geometric weights: the m-th power of the strict matrix
/// with weights lambda^j equals pascal_func(n, m * lambda), and strict
/// detection on the power infers the weights (m * lambda)^j.
/// Pre: n >= 1, m >= 1.
bool geometric_power_check(const Integer& lambda, std::size_t n, unsigned long m);

}  // namespace vrmat
