#include "vrmat/selftest.hpp"

#include <random>
#include <sstream>

#include "vrmat/admissible.hpp"
#include "vrmat/analysis.hpp"
#include "vrmat/kernel.hpp"
#include "vrmat/lab.hpp"
#include "vrmat/ladder.hpp"
#include "vrmat/ltmatrix.hpp"
#include "vrmat/poly.hpp"
#include "vrmat/seq.hpp"
#include "vrmat/vrm.hpp"

namespace vrmat::selftest {

namespace {

std::string cell(const CellFailure& f) {
    return "(" + std::to_string(f.row) + "," + std::to_string(f.col) + "): expected " +
           f.expected.get_str() + ", actual " + f.actual.get_str();
}

CheckResult fail(const std::string& name, const std::string& detail) {
    return CheckResult{name, false, detail};
}

CheckResult ok(const std::string& name, const std::string& detail) {
    return CheckResult{name, true, detail};
}

struct Family {
    std::string label;
    Seq weights;
    bool general;  // build with an explicit first column equal to the weights
    std::size_t max_n;
};

VrmSpec family_spec(const Family& fam, std::size_t n) {
    if (fam.general) {
        return VrmSpec::general(fam.weights, fam.weights.terms(n + 1));
    }
    return VrmSpec::strict(fam.weights);
}

std::vector<Family> step_families() {
    return {
        {"ones", Seq::ones(), false, 12},
        {"const:2", Seq::constant(2), true, 12},
        {"geom:2", Seq::geometric(2), false, 12},
        {"geom:3", Seq::geometric(3), false, 12},
        {"nat", Seq::binomial(1), false, 12},
        {"binom:2", Seq::binomial(2), false, 12},
        {"catalan", Seq::catalan(), false, 12},
        {"list:1,1,2,4,9", Seq::list({1, 1, 2, 4, 9}), false, 4},
    };
}

// Independent per-cell evaluation of the vertical recurrence, recursive
// and memo-free, used as the oracle against the column-major builder.
Integer brute_cell(const std::vector<Integer>& lam, const std::vector<Integer>& col0,
                   std::size_t i, std::size_t k) {
    if (k == 0) {
        return col0[i];
    }
    if (k > i) {
        return 0;
    }
    Integer sum = 0;
    for (std::size_t l = k - 1; l <= i - 1; ++l) {
        sum += lam[i - 1 - l] * brute_cell(lam, col0, l, k - 1);
    }
    return sum;
}

}  // namespace

CheckResult known_matrix_reproduction() {
    const std::string name = "known-matrix-reproduction";

    if (build_vrm(VrmSpec::strict(Seq::ones()), 3) !=
        LTMatrix({{1}, {1, 1}, {1, 2, 1}, {1, 3, 3, 1}})) {
        return fail(name, "4x4 Pascal matrix not reproduced from weights 1,1,1,1");
    }
    if (build_vrm(VrmSpec::strict(Seq::geometric(2)), 3) !=
        LTMatrix({{1}, {2, 1}, {4, 4, 1}, {8, 12, 6, 1}})) {
        return fail(name, "4x4 matrix for weights 2^j not reproduced");
    }
    if (build_admissible(Seq::ones(), 4) !=
        LTMatrix({{1}, {1, 1}, {2, 2, 1}, {4, 5, 3, 1}, {9, 12, 9, 4, 1}})) {
        return fail(name, "admissible matrix for s = 1,1,1,... not reproduced");
    }
    if (build_admissible(Seq::list({1, 2, 2, 2}), 4) !=
        LTMatrix({{1}, {1, 1}, {2, 3, 1}, {5, 9, 5, 1}, {14, 28, 20, 7, 1}})) {
        return fail(name, "admissible matrix with Catalan first column not reproduced");
    }
    if (mnt(3) != LTMatrix({{1}, {1, 1}, {1, 3, 1}, {1, 6, 5, 1}})) {
        return fail(name, "4x4 transfer-coefficient triangle not reproduced");
    }
    const std::vector<std::vector<Integer>> expected_polys = {
        {1}, {1, 1}, {1, 3, 1}, {1, 6, 5, 1}, {1, 10, 15, 7, 1}, {1, 15, 35, 28, 9, 1}};
    const std::vector<Poly> t = transfer_polys(5);
    for (std::size_t k = 0; k < expected_polys.size(); ++k) {
        if (t[k].coeffs() != expected_polys[k]) {
            return fail(name, "transfer polynomial T_" + std::to_string(k) + " is " + t[k].pretty());
        }
    }
    return ok(name, "Pascal and geometric 4x4 matrices, both admissible matrices, the 4x4 triangle, and T_0..T_5 reproduced");
}

CheckResult toeplitz_step_decomposition() {
    const std::string name = "toeplitz-step-decomposition";
    std::size_t checked = 0;
    for (const Family& fam : step_families()) {
        for (std::size_t n = 1; n <= fam.max_n; ++n) {
            const LTMatrix whole = build_vrm(family_spec(fam, n), n);
            const LTMatrix smaller = build_vrm(family_spec(fam, n - 1), n - 1);
            if (whole != toeplitz(fam.weights, n) * direct_sum_1(smaller)) {
                return fail(name, fam.label + ", n=" + std::to_string(n) +
                                      ": Toeplitz * ([1] (+) smaller) does not reproduce the matrix");
            }
            ++checked;
        }
    }
    return ok(name, std::to_string(checked) + " single-step factorizations verified across 8 weight families");
}

CheckResult block_chain_and_inverse() {
    const std::string name = "block-chain-and-inverse";
    std::size_t chains = 0;
    std::size_t inverses = 0;
    for (const Family& fam : step_families()) {
        if (fam.general) {
            continue;  // chain and inverse need leading weight 1
        }
        for (std::size_t n = 1; n <= fam.max_n; ++n) {
            const LTMatrix whole = build_vrm(VrmSpec::strict(fam.weights), n);
            LTMatrix product = LTMatrix::identity(n + 1);
            for (const LTMatrix& factor : decompose_chain(fam.weights, n)) {
                product = product * factor;
            }
            if (product != whole) {
                return fail(name, fam.label + ", n=" + std::to_string(n) + ": ordered block chain mismatch");
            }
            ++chains;
            if (whole * vrm_inverse(fam.weights, n) != LTMatrix::identity(n + 1)) {
                return fail(name, fam.label + ", n=" + std::to_string(n) + ": inverse check failed");
            }
            ++inverses;
        }
    }
    // Order matters: the descending chain (blocks n..1) must NOT reproduce
    // the matrix; the verified ordering is ascending from the full Toeplitz
    // factor.
    const Seq g2 = Seq::geometric(2);
    LTMatrix literal = toeplitz_block(g2, 3, 3);
    for (std::size_t k = 2; k >= 1; --k) {
        literal = literal * toeplitz_block(g2, 3, k);
    }
    if (literal == build_vrm(VrmSpec::strict(g2), 3)) {
        return fail(name, "descending block chain unexpectedly reproduces the weights-2^j matrix at n=3");
    }
    return ok(name, std::to_string(chains) + " chains and " + std::to_string(inverses) +
                        " inverses verified; descending block order confirmed non-reproducing");
}

CheckResult shift_matrix_factorization() {
    const std::string name = "shift-matrix-factorization";
    std::size_t checked = 0;
    for (std::size_t n = 0; n <= 10; ++n) {
        for (long x = -3; x <= 3; ++x) {
            if (s_matrix(n, x) != pascal_kelim(n, x) * pascal_func(n, -x)) {
                return fail(name, "n=" + std::to_string(n) + ", x=" + std::to_string(x) +
                                      ": shifted-power matrix factorization failed");
            }
            ++checked;
        }
    }
    return ok(name, std::to_string(checked) + " factorizations of x^(i-j) matrices verified");
}

CheckResult geometric_weight_powers() {
    const std::string name = "geometric-weight-powers";
    std::size_t checked = 0;
    for (long lambda = 1; lambda <= 3; ++lambda) {
        for (unsigned long m = 1; m <= 4; ++m) {
            for (std::size_t n = 1; n <= 8; ++n) {
                if (!geometric_power_check(lambda, n, m)) {
                    return fail(name, "lambda=" + std::to_string(lambda) + ", m=" + std::to_string(m) +
                                          ", n=" + std::to_string(n) + ": power law failed");
                }
                ++checked;
            }
        }
    }
    return ok(name, std::to_string(checked) +
                        " power checks verified (m-th power has binomial entries with scale m*lambda)");
}

CheckResult constant_weight_powers() {
    const std::string name = "constant-weight-powers";
    std::size_t checked = 0;
    std::size_t fits = 0;
    std::size_t row_variant_fits = 0;
    const long lambdas[] = {1, 2, 3, 5};
    for (long lambda : lambdas) {
        for (unsigned long m = 1; m <= 4; ++m) {
            for (std::size_t n = 0; n <= 8; ++n) {
                const ConstantPowerReport report = constant_power_check(lambda, n, m);
                if (!report.pass()) {
                    return fail(name, "lambda=" + std::to_string(lambda) + ", m=" + std::to_string(m) +
                                          ", n=" + std::to_string(n) + ": power column or fit failed");
                }
                ++checked;
                if (report.fit) {
                    ++fits;
                    if (report.row_indexed_variant_fits) {
                        ++row_variant_fits;
                    }
                }
            }
        }
    }
    return ok(name, std::to_string(checked) + " column checks and " + std::to_string(fits) +
                        " two-term fits verified; row-indexed variant fits " +
                        std::to_string(row_variant_fits) + "/" + std::to_string(fits) + " cases");
}

CheckResult two_term_product_law() {
    const std::string name = "two-term-product-law";
    std::size_t checked = 0;
    for (long a = -3; a <= 3; ++a) {
        for (long b = -3; b <= 3; ++b) {
            for (long a2 = -3; a2 <= 3; ++a2) {
                for (long b2 = -3; b2 <= 3; ++b2) {
                    if (!two_term_product_check(a, b, a2, b2, 8)) {
                        return fail(name, "alpha=" + std::to_string(a) + ", beta=" + std::to_string(b) +
                                              ", alpha'=" + std::to_string(a2) + ", beta'=" +
                                              std::to_string(b2) + ": product law failed");
                    }
                    ++checked;
                }
            }
        }
    }
    return ok(name, std::to_string(checked) + " products fit (alpha*alpha', beta + alpha*beta') with row-sum first column");
}

CheckResult admissible_matrices() {
    const std::string name = "admissible-matrices";
    std::vector<Integer> ones_then_twos(12, Integer(2));
    ones_then_twos[0] = 1;
    const std::vector<std::pair<Seq, std::size_t>> families = {
        {Seq::ones(), 12},
        {Seq::list(ones_then_twos), 12},
        {Seq::constant(0), 12},
        {Seq::list({3, 1, 4, 1}), 4},
    };
    std::size_t checked = 0;
    for (const auto& [s, n] : families) {
        const LTMatrix a = build_admissible(s, n);
        const AdmissibleReport report = check_admissible(a);
        if (!report.pass) {
            return fail(name, s.to_spec() + ": inner-product property fails at (m,n)=(" +
                                  std::to_string(report.m) + "," + std::to_string(report.n) + ")");
        }
        if (!subdiagonal_check(s, n)) {
            return fail(name, s.to_spec() + ": subdiagonal partial-sum property fails");
        }
        if (sequence_from_admissible(a) != s.terms(n)) {
            return fail(name, s.to_spec() + ": sequence extraction does not round-trip");
        }
        ++checked;
    }

    const DetectionReport first = verify_lambda(build_admissible(Seq::ones(), 4),
                                                Seq::list({1, 1, 2, 4, 9}), true);
    if (first.verdict != Verdict::pass) {
        return fail(name, "strict detection on the s=1,1,1,... matrix fails");
    }
    const DetectionReport second = infer_lambda(build_admissible(Seq::list({1, 2, 2, 2}), 4),
                                                DetectMode::strict);
    if (second.verdict != Verdict::pass) {
        std::string detail =
            "strict detection with weights = first column fails on the Catalan-column matrix";
        if (second.first_failure) {
            detail += " at " + cell(*second.first_failure);
        }
        detail += "; its weight sequence is the first column shifted by one, and general-mode "
                  "inference passes with weights 1,2,5,14";
        return fail(name, detail);
    }
    return ok(name, std::to_string(checked) +
                        " admissible families verified; strict detection passes on both example matrices");
}

CheckResult ladder_triangles() {
    const std::string name = "ladder-triangles";
    if (mnt(16) != mnt_formula(16, MntVariant::two_k)) {
        return fail(name, "triangle differs from C(i+j,2j) somewhere at order 17");
    }
    for (std::size_t n = 1; n <= 16; ++n) {
        const MntCompareReport report = compare_mnt(n);
        if (!report.two_k_matches) {
            return fail(name, "C(i+j,2j) mismatch at n=" + std::to_string(n));
        }
        if (report.two_k_plus_1_matches || !report.two_k_plus_1_mismatch ||
            report.two_k_plus_1_mismatch->row != 1 || report.two_k_plus_1_mismatch->col != 1) {
            return fail(name, "C(i+j,2j+1) variant should first mismatch at (1,1) for n=" + std::to_string(n));
        }
    }
    const IdentitySweepReport id13 = mnt_vertical_identity_check(20);
    if (!id13.pass) {
        return fail(name, "column-sum identity for C(n+k,2k+1) fails at " + cell(*id13.first_failure));
    }
    const IdentitySweepReport id15 = mnt2_vertical_identity_check(20);
    if (!id15.pass) {
        return fail(name, "column-sum identity for C(n+2k,3k+1) fails at " + cell(*id15.first_failure));
    }
    const DetectionReport det = mnt_lambda_check(10);
    if (det.verdict != Verdict::pass) {
        return fail(name, "weight inference on the order-11 triangle fails");
    }
    for (std::size_t i = 0; i < det.lambda.size(); ++i) {
        if (det.lambda[i] != Rational(Integer(i + 1))) {
            return fail(name, "inferred triangle weight " + std::to_string(i) + " is " +
                                  det.lambda[i].get_str() + ", expected " + std::to_string(i + 1));
        }
    }
    if (mnt2_lambda_check(10).verdict != Verdict::pass) {
        return fail(name, "companion triangle does not verify against weights C(j+2,2)");
    }
    return ok(name, "triangle matches C(i+j,2j) to order 17; the 2j+1 variant mismatches at (1,1); "
                    "both column identities hold to 20; weights 1,2,3,... and C(j+2,2) confirmed");
}

CheckResult modular_tools() {
    const std::string name = "modular-tools";
    const Poly g = minpoly_mod_p(pascal(4), 5);
    if (g.coeffs() != std::vector<Integer>{4, 0, 0, 0, 0, 1}) {
        return fail(name, "minimal polynomial of the 5x5 Pascal matrix mod 5 is " + g.pretty() +
                              ", expected x^5 + 4");
    }
    // g(A) == 0 mod 5 with exact integer matrices, independent of the
    // Krylov construction.
    {
        const LTMatrix a = pascal(4);
        std::vector<std::vector<Integer>> acc(5);
        for (std::size_t r = 0; r < 5; ++r) {
            acc[r].assign(r + 1, Integer(0));
        }
        for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
            const LTMatrix p_i = a.pow(i);
            for (std::size_t r = 0; r < 5; ++r) {
                for (std::size_t c = 0; c <= r; ++c) {
                    acc[r][c] += g.coeff(i) * p_i.at(r, c);
                }
            }
        }
        for (std::size_t r = 0; r < 5; ++r) {
            for (std::size_t c = 0; c <= r; ++c) {
                if (mod_p(acc[r][c], 5) != 0) {
                    return fail(name, "g(A) != 0 mod 5 at (" + std::to_string(r) + "," +
                                          std::to_string(c) + ")");
                }
            }
        }
    }
    const long primes[] = {2, 3, 5, 7, 11, 13};
    std::size_t orders = 0;
    for (long p : primes) {
        for (std::size_t n = 0; n <= 12; ++n) {
            if (!pascal_order_mod_p_check(n, p)) {
                return fail(name, "Pascal^p != I mod p at n=" + std::to_string(n) + ", p=" + std::to_string(p));
            }
            ++orders;
        }
    }
    for (long c = 1; c <= 3; ++c) {
        const ConjectureReport report = conjecture1_explore(1, Seq::constant(c), 10);
        const DetectionReport& det = report.instances.at(0).detection;
        if (det.verdict != Verdict::pass) {
            return fail(name, "two-term array with ratio " + std::to_string(c) + " is not vertically recurrent");
        }
        Integer power = 1;
        for (std::size_t i = 0; i < det.lambda.size(); ++i) {
            if (det.lambda[i] != Rational(power)) {
                return fail(name, "ratio " + std::to_string(c) + ": inferred weights are not geometric");
            }
            power *= c;
        }
    }
    const ConjectureReport c2 = conjecture2_explore(6);
    const DetectionReport& ballot = c2.instances.at(0).detection;
    const DetectionReport& aigner = c2.instances.at(1).detection;
    if (aigner.verdict != Verdict::pass) {
        return fail(name, "admissible Catalan-column candidate unexpectedly fails inference");
    }
    if (ballot.verdict != Verdict::fail || !ballot.first_failure || ballot.first_failure->row != 2 ||
        ballot.first_failure->col != 2) {
        return fail(name, "ballot-triangle candidate should fail inference at (2,2)");
    }
    return ok(name, "minimal polynomial x^5+4 mod 5 and its annihilation re-verified; " + std::to_string(orders) +
                        " Pascal-order checks; geometric weights for constant ratios; Catalan candidates "
                        "split pass/fail as expected");
}

CheckResult oracle_agreement() {
    const std::string name = "oracle-agreement";
    std::mt19937_64 rng(20240815);
    auto rint = [&rng](long lo, long hi) {
        return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
    };

    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rint(1, 8));
        std::vector<Integer> w(n + 1);
        for (Integer& v : w) {
            v = rint(-5, 5);
        }
        const bool strict = rint(0, 1) == 1;
        std::vector<Integer> col0;
        if (strict) {
            w[0] = 1;
            col0 = w;
        } else {
            col0.resize(n + 1);
            for (Integer& v : col0) {
                v = rint(-6, 6);
            }
        }
        const VrmSpec spec = strict ? VrmSpec::strict(Seq::list(w)) : VrmSpec::general(Seq::list(w), col0);
        const LTMatrix built = build_vrm(spec, n);
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t k = 0; k <= i; ++k) {
                if (built.at(i, k) != brute_cell(w, col0, i, k)) {
                    return fail(name, "trial " + std::to_string(trial) + ": builder disagrees with the "
                                          "per-cell evaluator at (" + std::to_string(i) + "," +
                                          std::to_string(k) + ")");
                }
            }
        }
    }

    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t order = static_cast<std::size_t>(rint(1, 6));
        std::vector<std::vector<Integer>> rows(order);
        for (std::size_t i = 0; i < order; ++i) {
            rows[i].resize(i + 1);
            for (Integer& v : rows[i]) {
                v = rint(-9, 9);
            }
        }
        const LTMatrix a(std::move(rows));
        LTMatrix expected = LTMatrix::identity(order);
        for (unsigned long m = 0; m <= 5; ++m) {
            if (a.pow(m) != expected) {
                return fail(name, "trial " + std::to_string(trial) + ": pow(" + std::to_string(m) +
                                      ") disagrees with naive repeated multiplication");
            }
            expected = expected * a;
        }
    }
    return ok(name, "50 random builds match the per-cell evaluator; 20 random matrices match naive powers up to 5");
}

std::vector<CheckResult> run_all() {
    return {
        known_matrix_reproduction(),
        toeplitz_step_decomposition(),
        block_chain_and_inverse(),
        shift_matrix_factorization(),
        geometric_weight_powers(),
        constant_weight_powers(),
        two_term_product_law(),
        admissible_matrices(),
        ladder_triangles(),
        modular_tools(),
        oracle_agreement(),
    };
}

}  // namespace vrmat::selftest
