#include "vrmat/analysis.hpp"

#include <json.hpp>

#include <stdexcept>

namespace vrmat {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass:
            return "pass";
        case Verdict::fail:
            return "fail";
        case Verdict::underdetermined:
            return "underdetermined";
    }
    throw std::logic_error("unreachable verdict");
}

std::string to_string(DetectMode m) {
    switch (m) {
        case DetectMode::strict:
            return "strict";
        case DetectMode::general:
            return "general";
        case DetectMode::verify:
            return "verify";
    }
    throw std::logic_error("unreachable mode");
}

namespace {

Verdict verdict_from_string(const std::string& s) {
    if (s == "pass") return Verdict::pass;
    if (s == "fail") return Verdict::fail;
    if (s == "underdetermined") return Verdict::underdetermined;
    throw std::runtime_error("unknown verdict '" + s + "'");
}

DetectMode mode_from_string(const std::string& s) {
    if (s == "strict") return DetectMode::strict;
    if (s == "general") return DetectMode::general;
    if (s == "verify") return DetectMode::verify;
    throw std::runtime_error("unknown mode '" + s + "'");
}

Rational parse_rational(const std::string& s) {
    Rational q(s);
    q.canonicalize();
    return q;
}

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

std::optional<CellFailure> failure_from_json(const nlohmann::json& j) {
    if (j.is_null()) {
        return std::nullopt;
    }
    CellFailure f;
    f.row = j.at("n").get<std::size_t>();
    f.col = j.at("k").get<std::size_t>();
    f.expected = parse_rational(j.at("expected").get<std::string>());
    f.actual = parse_rational(j.at("actual").get<std::string>());
    return f;
}

bool all_integral(const std::vector<Rational>& xs) {
    for (const Rational& x : xs) {
        if (!is_integral(x)) {
            return false;
        }
    }
    return true;
}

// Checks the hockey-stick recurrence at every cell (r, k), k in
// [k_from, r], r >= 1, scanning row-major. w must cover indices up to
// order - 2. Returns the first failing cell.
std::optional<CellFailure> scan_recurrence(const LTMatrix& a,
                                           const std::vector<Rational>& w,
                                           std::size_t k_from) {
    for (std::size_t r = 1; r < a.order(); ++r) {
        for (std::size_t k = std::max<std::size_t>(k_from, 1); k <= r; ++k) {
            Rational expect = 0;
            for (std::size_t l = k - 1; l < r; ++l) {
                expect += w[r - 1 - l] * Rational(a.at(l, k - 1));
            }
            if (expect != a.at(r, k)) {
                return CellFailure{r, k, expect, Rational(a.at(r, k))};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::string DetectionReport::to_json() const {
    nlohmann::json j;
    j["verdict"] = vrmat::to_string(verdict);
    j["mode"] = vrmat::to_string(mode);
    nlohmann::json lam = nlohmann::json::array();
    for (const Rational& x : lambda) {
        lam.push_back(x.get_str());
    }
    j["lambda"] = std::move(lam);
    j["lambda_integral"] = lambda_integral;
    j["first_failure"] = failure_to_json(first_failure);
    return j.dump();
}

DetectionReport detection_report_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    DetectionReport r;
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    r.mode = mode_from_string(j.at("mode").get<std::string>());
    for (const auto& item : j.at("lambda")) {
        r.lambda.push_back(parse_rational(item.get<std::string>()));
    }
    r.lambda_integral = j.at("lambda_integral").get<bool>();
    r.first_failure = failure_from_json(j.at("first_failure"));
    return r;
}

std::string FitReport::to_json() const {
    nlohmann::json j;
    j["verdict"] = vrmat::to_string(verdict);
    j["alpha"] = alpha.get_str();
    j["beta"] = beta.get_str();
    j["coefficients_integral"] = coefficients_integral;
    j["first_failure"] = failure_to_json(first_failure);
    return j.dump();
}

DetectionReport infer_lambda(const LTMatrix& a, DetectMode mode) {
    if (a.order() < 2) {
        throw std::invalid_argument("weight detection needs order >= 2");
    }
    DetectionReport report;
    report.mode = mode;

    if (mode == DetectMode::strict) {
        if (a.at(0, 0) != 1) {
            throw std::domain_error("strict detection requires entry (0,0) == 1, found " +
                                    a.at(0, 0).get_str());
        }
        for (const Integer& x : a.first_column()) {
            report.lambda.emplace_back(x);
        }
        report.first_failure = scan_recurrence(a, report.lambda, 1);
        report.verdict = report.first_failure ? Verdict::fail : Verdict::pass;
        return report;
    }
    if (mode != DetectMode::general) {
        throw std::invalid_argument("inference mode must be strict or general");
    }

    // Solve column 1 for the weights. The system is triangular in the
    // weights with constant diagonal a[0][0]; leading zeros in column 0
    // shift it and leave the trailing weights unconstrained.
    std::size_t count = a.order() - 1;  // w[0..count-1]
    std::vector<Integer> col0 = a.first_column();
    std::size_t shift = 0;
    while (shift < a.order() && col0[shift] == 0) {
        ++shift;
    }
    if (shift > 0) {
        // Equations for r <= shift have an empty weight sum; column 1 must
        // vanish there for the system to be consistent at all.
        for (std::size_t r = 1; r <= std::min(shift, a.order() - 1); ++r) {
            if (a.at(r, 1) != 0) {
                report.verdict = Verdict::fail;
                report.first_failure = CellFailure{r, 1, Rational(0), Rational(a.at(r, 1))};
                return report;
            }
        }
    }
    if (shift >= a.order()) {
        // All of column 0 is zero; nothing constrains any weight.
        report.verdict = Verdict::underdetermined;
        return report;
    }

    std::size_t determined = count - std::min(shift, count);
    Rational pivot = Rational(col0[shift]);
    for (std::size_t t = 0; t < determined; ++t) {
        // Equation r = t + shift + 1 determines w[t]:
        //   a[r][1] = sum_{l=0}^{r-1} w[r-1-l] * a[l][0]
        std::size_t r = t + shift + 1;
        Rational acc = Rational(a.at(r, 1));
        for (std::size_t u = 0; u < t; ++u) {
            acc -= report.lambda[u] * Rational(col0[r - 1 - u]);
        }
        report.lambda.push_back(acc / pivot);
    }
    report.lambda_integral = all_integral(report.lambda);

    if (shift > 0) {
        report.verdict = Verdict::underdetermined;
        return report;
    }
    report.first_failure = scan_recurrence(a, report.lambda, 2);
    report.verdict = report.first_failure ? Verdict::fail : Verdict::pass;
    return report;
}

DetectionReport verify_lambda(const LTMatrix& a, const Seq& weights,
                              bool first_col_is_lambda) {
    DetectionReport report;
    report.mode = DetectMode::verify;
    std::size_t need = a.order() >= 2 ? a.order() - 1 : 0;
    if (first_col_is_lambda) {
        need = a.order();
    }
    for (const Integer& x : weights.terms(need)) {
        report.lambda.emplace_back(x);
    }
    if (first_col_is_lambda) {
        for (std::size_t i = 0; i < a.order(); ++i) {
            if (report.lambda[i] != a.at(i, 0)) {
                report.verdict = Verdict::fail;
                report.first_failure =
                    CellFailure{i, 0, report.lambda[i], Rational(a.at(i, 0))};
                return report;
            }
        }
    }
    report.first_failure = scan_recurrence(a, report.lambda, 1);
    report.verdict = report.first_failure ? Verdict::fail : Verdict::pass;
    return report;
}

FitReport fit_pascal_recurrence(const LTMatrix& a) {
    if (a.order() < 3) {
        throw std::invalid_argument("two-term fit needs order >= 3");
    }
    if (a.at(0, 0) == 0) {
        throw std::invalid_argument("two-term fit needs entry (0,0) != 0");
    }
    FitReport report;
    // Cell (1,1) pins alpha: a[1][1] = alpha * a[0][0] (the beta term
    // multiplies the zero above the diagonal).
    report.alpha = make_rational(a.at(1, 1), a.at(0, 0));

    // First cell with a nonzero beta multiplier pins beta.
    bool beta_found = false;
    for (std::size_t r = 2; r < a.order() && !beta_found; ++r) {
        for (std::size_t k = 1; k < r; ++k) {
            if (a.at(r - 1, k) != 0) {
                Rational num = Rational(a.at(r, k)) - report.alpha * Rational(a.at(r - 1, k - 1));
                report.beta = num / Rational(a.at(r - 1, k));
                beta_found = true;
                break;
            }
        }
    }
    report.coefficients_integral = is_integral(report.alpha) && is_integral(report.beta);

    for (std::size_t r = 1; r < a.order(); ++r) {
        for (std::size_t k = 1; k <= r; ++k) {
            Rational above = (k <= r - 1) ? Rational(a.at(r - 1, k)) : Rational(0);
            Rational expect = report.alpha * Rational(a.at(r - 1, k - 1)) +
                              report.beta * above;
            if (expect != a.at(r, k)) {
                report.verdict = Verdict::fail;
                report.first_failure = CellFailure{r, k, expect, Rational(a.at(r, k))};
                return report;
            }
        }
    }
    report.verdict = beta_found ? Verdict::pass : Verdict::underdetermined;
    return report;
}

LTMatrix two_term_array(const Integer& alpha, const Integer& beta, std::size_t n) {
    std::vector<std::vector<Integer>> rows(n + 1);
    rows[0] = {Integer(1)};
    for (std::size_t r = 1; r <= n; ++r) {
        rows[r].assign(r + 1, Integer(0));
        rows[r][0] = 1;
        for (std::size_t k = 1; k <= r; ++k) {
            Integer above = (k <= r - 1) ? rows[r - 1][k] : Integer(0);
            rows[r][k] = alpha * rows[r - 1][k - 1] + beta * above;
        }
    }
    return LTMatrix(std::move(rows));
}

bool two_term_product_check(const Integer& alpha, const Integer& beta,
                            const Integer& alpha2, const Integer& beta2,
                            std::size_t n) {
    if (n < 2) {
        throw std::invalid_argument("two-term product check needs n >= 2");
    }
    LTMatrix a = two_term_array(alpha, beta, n);
    LTMatrix b = two_term_array(alpha2, beta2, n);
    LTMatrix c = a * b;

    // First-column law: c[r][0] is the r-th row sum of a.
    for (std::size_t r = 0; r <= n; ++r) {
        Integer sum = 0;
        for (std::size_t j = 0; j <= r; ++j) {
            sum += a.at(r, j);
        }
        if (c.at(r, 0) != sum) {
            return false;
        }
    }

    Rational want_alpha(alpha * alpha2);
    Rational want_beta(beta + alpha * beta2);
    FitReport fit = fit_pascal_recurrence(c);
    if (fit.verdict == Verdict::fail || fit.alpha != want_alpha) {
        return false;
    }
    // An underdetermined beta means no cell constrains it, so the predicted
    // value fits vacuously.
    return fit.verdict == Verdict::underdetermined || fit.beta == want_beta;
}

std::pair<std::vector<Integer>, DetectionReport>
power_sequence(const VrmSpec& spec, std::size_t n, unsigned long m) {
    if (m < 1) {
        throw std::invalid_argument("power needs m >= 1");
    }
    LTMatrix p = build_vrm(spec, n).pow(m);
    DetectionReport report = infer_lambda(p, DetectMode::general);
    return {p.first_column(), std::move(report)};
}

ConstantPowerReport constant_power_check(const Integer& lambda, std::size_t n,
                                         unsigned long m) {
    if (m < 1) {
        throw std::invalid_argument("power needs m >= 1");
    }
    ConstantPowerReport report;
    report.lambda = lambda;
    report.n = n;
    report.m = m;

    std::size_t order = n + 1;
    LTMatrix v = build_vrm(
        VrmSpec::general(Seq::constant(lambda), std::vector<Integer>(order, lambda)), n);
    LTMatrix p = v.pow(m);
    report.first_column = p.first_column();

    Integer lam_m = ipow(lambda, m);
    Integer mu = geom_sum(lambda, m);
    report.first_column_matches = true;
    for (std::size_t j = 0; j < order; ++j) {
        if (report.first_column[j] != lam_m * ipow(mu, static_cast<unsigned long>(j))) {
            report.first_column_matches = false;
            break;
        }
    }

    if (order >= 3) {
        report.fit = fit_pascal_recurrence(p);
        report.fit_matches = report.fit->verdict == Verdict::pass &&
                             report.fit->alpha == lam_m && report.fit->beta == mu;
    }

    // Row-indexed variant: second coefficient mu^row instead of mu.
    report.row_indexed_variant_fits = true;
    for (std::size_t r = 1; r <= n && report.row_indexed_variant_fits; ++r) {
        Integer mu_r = ipow(mu, static_cast<unsigned long>(r));
        for (std::size_t k = 1; k <= r; ++k) {
            Integer above = (k <= r - 1) ? p.at(r - 1, k) : Integer(0);
            if (p.at(r, k) != lam_m * p.at(r - 1, k - 1) + mu_r * above) {
                report.row_indexed_variant_fits = false;
                break;
            }
        }
    }
    return report;
}

std::string ConstantPowerReport::to_json() const {
    nlohmann::json j;
    j["lambda"] = lambda.get_str();
    j["n"] = n;
    j["m"] = m;
    nlohmann::json col = nlohmann::json::array();
    for (const Integer& x : first_column) {
        col.push_back(x.get_str());
    }
    j["first_column"] = std::move(col);
    j["first_column_matches"] = first_column_matches;
    j["fit"] = fit ? nlohmann::json::parse(fit->to_json()) : nlohmann::json(nullptr);
    j["fit_matches"] = fit_matches;
    j["row_indexed_variant_fits"] = row_indexed_variant_fits;
    return j.dump();
}

bool geometric_power_check(const Integer& lambda, std::size_t n, unsigned long m) {
    if (n < 1 || m < 1) {
        throw std::invalid_argument("geometric power check needs n >= 1 and m >= 1");
    }
    LTMatrix p = build_vrm(VrmSpec::strict(Seq::geometric(lambda)), n).pow(m);
    if (p != pascal_func(n, Integer(m) * lambda)) {
        return false;
    }
    DetectionReport det = infer_lambda(p, DetectMode::strict);
    if (det.verdict != Verdict::pass) {
        return false;
    }
    Integer ratio = Integer(m) * lambda;
    for (std::size_t j = 0; j <= n; ++j) {
        if (det.lambda[j] != ipow(ratio, static_cast<unsigned long>(j))) {
            return false;
        }
    }
    return true;
}

}  // namespace vrmat
