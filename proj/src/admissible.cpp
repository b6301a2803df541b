#include "vrmat/admissible.hpp"

#include <json.hpp>

#include <stdexcept>
#include <utility>

namespace vrmat {

LTMatrix build_admissible(const Seq& s, std::size_t n) {
    std::vector<Integer> sv;  // s[0..n-1]; only fetched when needed
    if (n >= 1) {
        sv = s.terms(n);
    }
    std::vector<std::vector<Integer>> rows(n + 1);
    rows[0] = {Integer(1)};
    for (std::size_t r = 1; r <= n; ++r) {
        rows[r].assign(r + 1, Integer(0));
        for (std::size_t k = 0; k <= r; ++k) {
            Integer acc = 0;
            if (k >= 1) {
                acc += rows[r - 1][k - 1];
            }
            if (k <= r - 1) {
                acc += sv[k] * rows[r - 1][k];
            }
            if (k + 1 <= r - 1) {
                acc += rows[r - 1][k + 1];
            }
            rows[r][k] = acc;
        }
    }
    return LTMatrix(std::move(rows));
}

AdmissibleReport check_admissible(const LTMatrix& a) {
    AdmissibleReport report;
    for (std::size_t i = 0; i < a.order(); ++i) {
        if (a.at(i, i) != 1) {
            report.pass = false;
            report.violation = AdmissibleReport::Violation::diagonal;
            report.n = i;
            report.expected = 1;
            report.actual = a.at(i, i);
            return report;
        }
    }
    for (std::size_t sum = 0; sum < a.order(); ++sum) {
        for (std::size_t m = 0; 2 * m <= sum; ++m) {
            std::size_t n = sum - m;
            Integer dot = 0;
            for (std::size_t j = 0; j <= std::min(m, n); ++j) {
                dot += a.at(m, j) * a.at(n, j);
            }
            if (dot != a.at(sum, 0)) {
                report.pass = false;
                report.violation = AdmissibleReport::Violation::inner_product;
                report.m = m;
                report.n = n;
                report.expected = a.at(sum, 0);
                report.actual = dot;
                return report;
            }
        }
    }
    return report;
}

std::string AdmissibleReport::to_json() const {
    nlohmann::json j;
    j["pass"] = pass;
    switch (violation) {
        case Violation::none:
            j["violation"] = nullptr;
            break;
        case Violation::diagonal:
            j["violation"] = {{"kind", "diagonal"},
                              {"n", n},
                              {"expected", expected.get_str()},
                              {"actual", actual.get_str()}};
            break;
        case Violation::inner_product:
            j["violation"] = {{"kind", "inner_product"},
                              {"m", m},
                              {"n", n},
                              {"expected", expected.get_str()},
                              {"actual", actual.get_str()}};
            break;
    }
    return j.dump();
}

std::vector<Integer> sequence_from_admissible(const LTMatrix& a) {
    if (a.order() < 2) {
        throw std::invalid_argument("sequence extraction needs order >= 2");
    }
    std::vector<Integer> s;
    s.reserve(a.order() - 1);
    s.push_back(a.at(1, 0));
    for (std::size_t k = 1; k + 1 < a.order(); ++k) {
        s.push_back(a.at(k + 1, k) - a.at(k, k - 1));
    }
    return s;
}

bool subdiagonal_check(const Seq& s, std::size_t n) {
    if (n < 1) {
        return true;  // no subdiagonal to check
    }
    LTMatrix a = build_admissible(s, n);
    Integer partial = 0;
    for (std::size_t k = 0; k + 1 <= n; ++k) {
        partial += s.term(k);
        if (a.at(k + 1, k) != partial) {
            return false;
        }
    }
    return true;
}

}  // namespace vrmat
