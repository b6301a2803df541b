#include "vrmat/ladder.hpp"

#include <json.hpp>

#include <utility>

#include "vrmat/kernel.hpp"
#include "vrmat/seq.hpp"

namespace vrmat {

namespace {

nlohmann::json failure_to_json(const std::optional<CellFailure>& f) {
    if (!f) {
        return nullptr;
    }
    nlohmann::json j;
    j["n"] = f->row;
    j["k"] = f->col;
    j["expected"] = f->expected.get_str();
    j["actual"] = f->actual.get_str();
    return j;
}

// First cell where cand differs from truth, scanning the interior
// (k >= 1) row-major before the first column. expected = truth entry,
// actual = candidate entry.
std::optional<CellFailure> first_mismatch(const LTMatrix& truth, const LTMatrix& cand) {
    const std::size_t order = truth.order();
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t k = 1; k <= i; ++k) {
            if (truth.at(i, k) != cand.at(i, k)) {
                return CellFailure{i, k, Rational(truth.at(i, k)), Rational(cand.at(i, k))};
            }
        }
    }
    for (std::size_t i = 0; i < order; ++i) {
        if (truth.at(i, 0) != cand.at(i, 0)) {
            return CellFailure{i, 0, Rational(truth.at(i, 0)), Rational(cand.at(i, 0))};
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<Poly> transfer_polys(std::size_t n) {
    std::vector<Poly> t;
    t.reserve(n + 1);
    t.push_back(Poly::constant(1));
    if (n == 0) {
        return t;
    }
    t.push_back(Poly(std::vector<Integer>{1, 1}));
    const Poly step(std::vector<Integer>{2, 1});  // 2 + x
    for (std::size_t k = 2; k <= n; ++k) {
        t.push_back(step * t[k - 1] - t[k - 2]);
    }
    return t;
}

LTMatrix mnt(std::size_t n) {
    const std::vector<Poly> t = transfer_polys(n);
    std::vector<std::vector<Integer>> rows;
    rows.reserve(n + 1);
    for (const Poly& p : t) {
        rows.push_back(p.coeffs());  // deg T_i = i, so row i has i+1 entries
    }
    return LTMatrix(std::move(rows));
}

LTMatrix mnt_formula(std::size_t n, MntVariant variant) {
    std::vector<std::vector<Integer>> rows(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        rows[i].reserve(i + 1);
        for (std::size_t j = 0; j <= i; ++j) {
            const long bottom =
                variant == MntVariant::two_k ? static_cast<long>(2 * j) : static_cast<long>(2 * j + 1);
            rows[i].push_back(binom(i + j, bottom));
        }
    }
    return LTMatrix(std::move(rows));
}

MntCompareReport compare_mnt(std::size_t n) {
    const LTMatrix truth = mnt(n);
    MntCompareReport report;
    report.n = n;
    report.two_k_mismatch = first_mismatch(truth, mnt_formula(n, MntVariant::two_k));
    report.two_k_matches = !report.two_k_mismatch.has_value();
    report.two_k_plus_1_mismatch = first_mismatch(truth, mnt_formula(n, MntVariant::two_k_plus_1));
    report.two_k_plus_1_matches = !report.two_k_plus_1_mismatch.has_value();
    return report;
}

std::string MntCompareReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["two_k_matches"] = two_k_matches;
    j["two_k_mismatch"] = failure_to_json(two_k_mismatch);
    j["two_k_plus_1_matches"] = two_k_plus_1_matches;
    j["two_k_plus_1_mismatch"] = failure_to_json(two_k_plus_1_mismatch);
    return j.dump();
}

LTMatrix mnt2(std::size_t n) {
    std::vector<std::vector<Integer>> rows(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        rows[i].reserve(i + 1);
        for (std::size_t j = 0; j <= i; ++j) {
            rows[i].push_back(binom(i + 2 * j, static_cast<long>(3 * j + 1)));
        }
    }
    return LTMatrix(std::move(rows));
}

std::string IdentitySweepReport::to_json() const {
    nlohmann::json j;
    j["pass"] = pass;
    j["max_n"] = max_n;
    j["first_failure"] = failure_to_json(first_failure);
    return j.dump();
}

IdentitySweepReport mnt_vertical_identity_check(std::size_t max_n) {
    IdentitySweepReport report;
    report.max_n = max_n;
    for (std::size_t n = 1; n <= max_n && report.pass; ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
            const Integer lhs = binom(n + k, static_cast<long>(2 * k + 1));
            Integer rhs = 0;
            for (std::size_t l = k - 1; l <= n - 1; ++l) {
                rhs += binom(n - l, 1) * binom(l + k - 1, static_cast<long>(2 * k - 1));
            }
            if (lhs != rhs) {
                report.pass = false;
                report.first_failure = CellFailure{n, k, Rational(lhs), Rational(rhs)};
                break;
            }
        }
    }
    return report;
}

IdentitySweepReport mnt2_vertical_identity_check(std::size_t max_n) {
    IdentitySweepReport report;
    report.max_n = max_n;
    for (std::size_t n = 1; n <= max_n && report.pass; ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
            const Integer lhs = binom(n + 2 * k, static_cast<long>(3 * k + 1));
            Integer rhs = 0;
            for (std::size_t l = k - 1; l <= n - 1; ++l) {
                rhs += binom(n - l + 1, 2) * binom(l + 2 * k - 2, static_cast<long>(3 * k - 2));
            }
            if (lhs != rhs) {
                report.pass = false;
                report.first_failure = CellFailure{n, k, Rational(lhs), Rational(rhs)};
                break;
            }
        }
    }
    return report;
}

DetectionReport mnt_lambda_check(std::size_t n) {
    return infer_lambda(mnt(n), DetectMode::general);
}

DetectionReport mnt2_lambda_check(std::size_t n) {
    return verify_lambda(mnt2(n), Seq::binomial(2), false);
}

}  // namespace vrmat
