#pragma once

#include <string>
#include <vector>

namespace vrmat::selftest {

/// One acceptance check: a named desk-scale sweep with a one-line outcome.
/// detail carries counts on success and the first failure on failure.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

CheckResult known_matrix_reproduction();
CheckResult toeplitz_step_decomposition();
CheckResult block_chain_and_inverse();
CheckResult shift_matrix_factorization();
CheckResult geometric_weight_powers();
CheckResult constant_weight_powers();
CheckResult two_term_product_law();
CheckResult admissible_matrices();
CheckResult ladder_triangles();
CheckResult modular_tools();
CheckResult oracle_agreement();

/// All checks, in the order above.
std::vector<CheckResult> run_all();

}  // namespace vrmat::selftest
