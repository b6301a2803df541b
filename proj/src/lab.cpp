#include "vrmat/lab.hpp"

#include <json.hpp>

#include <stdexcept>
#include <utility>

#include "vrmat/admissible.hpp"
#include "vrmat/kernel.hpp"
#include "vrmat/vrm.hpp"

namespace vrmat {

namespace {

void require_prime(long p) {
    if (p < 2 || !is_prime(p)) {
        throw std::domain_error("p must be prime, got " + std::to_string(p));
    }
}

// Dense residue matrices over F_p. Entries live in [0, p); p fits in 32
// bits after the primality check (trial division makes anything larger
// impractical anyway), so long arithmetic never overflows.
using ModMatrix = std::vector<std::vector<long>>;

ModMatrix residue_matrix(const LTMatrix& a, long p) {
    const std::size_t d = a.order();
    ModMatrix m(d, std::vector<long>(d, 0));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            m[i][j] = mod_p(a.at(i, j), p);
        }
    }
    return m;
}

ModMatrix identity_matrix(std::size_t d) {
    ModMatrix m(d, std::vector<long>(d, 0));
    for (std::size_t i = 0; i < d; ++i) {
        m[i][i] = 1;
    }
    return m;
}

ModMatrix mul_mod(const ModMatrix& x, const ModMatrix& y, long p) {
    const std::size_t d = x.size();
    ModMatrix r(d, std::vector<long>(d, 0));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            if (x[i][k] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < d; ++j) {
                r[i][j] = (r[i][j] + x[i][k] * y[k][j]) % p;
            }
        }
    }
    return r;
}

void verify_annihilates(const Poly& g, const ModMatrix& base, long p) {
    const std::size_t d = base.size();
    ModMatrix acc(d, std::vector<long>(d, 0));
    for (long i = g.degree(); i >= 0; --i) {
        acc = mul_mod(acc, base, p);
        const long c = mod_p(g.coeff(static_cast<std::size_t>(i)), p);
        for (std::size_t t = 0; t < d; ++t) {
            acc[t][t] = (acc[t][t] + c) % p;
        }
    }
    for (const auto& row : acc) {
        for (long v : row) {
            if (v != 0) {
                throw std::logic_error("minimal polynomial re-verification failed: g(A) != 0 mod p");
            }
        }
    }
}

// Array of the first conjecture: unit first column, zero above the
// diagonal, a[r][k] = alpha*a[r-1][k-1] + alpha_seq(r-1)*a[r-1][k].
LTMatrix conjecture1_array(const Integer& alpha, const Seq& alpha_seq, std::size_t n) {
    const std::vector<Integer> mult = alpha_seq.terms(n);
    std::vector<std::vector<Integer>> rows(n + 1);
    rows[0] = {Integer(1)};
    for (std::size_t r = 1; r <= n; ++r) {
        rows[r].assign(r + 1, Integer(0));
        rows[r][0] = 1;
        for (std::size_t k = 1; k <= r; ++k) {
            Integer v = alpha * rows[r - 1][k - 1];
            if (k <= r - 1) {
                v += mult[r - 1] * rows[r - 1][k];
            }
            rows[r][k] = std::move(v);
        }
    }
    return LTMatrix(std::move(rows));
}

// Ballot triangle B(i,j) = C(i+j,j)*(i-j+1)/(i+1); the division is exact.
LTMatrix ballot_triangle(std::size_t n) {
    std::vector<std::vector<Integer>> rows(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        rows[i].reserve(i + 1);
        for (std::size_t j = 0; j <= i; ++j) {
            const Integer num = binom(i + j, static_cast<long>(j)) * Integer(static_cast<unsigned long>(i - j + 1));
            rows[i].push_back(num / Integer(static_cast<unsigned long>(i + 1)));
        }
    }
    return LTMatrix(std::move(rows));
}

std::string verdict_note(const DetectionReport& d) {
    switch (d.verdict) {
        case Verdict::pass:
            return "vertical recurrence holds";
        case Verdict::fail:
            return "vertical recurrence fails at the reported cell";
        case Verdict::underdetermined:
            return "weight system underdetermined";
    }
    return {};
}

}  // namespace

std::string to_string(ConjectureOutcome o) {
    switch (o) {
        case ConjectureOutcome::supported:
            return "supported";
        case ConjectureOutcome::refuted:
            return "refuted";
        case ConjectureOutcome::mixed:
            return "mixed";
    }
    return {};
}

std::string ConjectureReport::to_json() const {
    nlohmann::json j;
    j["id"] = id;
    j["parameters"] = parameters;
    j["outcome"] = vrmat::to_string(outcome);
    j["counterexample"] = counterexample ? nlohmann::json(*counterexample) : nlohmann::json(nullptr);
    nlohmann::json arr = nlohmann::json::array();
    for (const ConjectureInstance& inst : instances) {
        nlohmann::json ji;
        ji["name"] = inst.name;
        ji["detection"] = nlohmann::json::parse(inst.detection.to_json());
        ji["notes"] = inst.notes;
        arr.push_back(std::move(ji));
    }
    j["instances"] = std::move(arr);
    return j.dump();
}

ConjectureReport conjecture1_explore(const Integer& alpha, const Seq& alpha_seq, std::size_t n) {
    if (n < 3) {
        throw std::invalid_argument("conjecture 1 exploration needs n >= 3");
    }
    ConjectureReport report;
    report.id = "conjecture1";
    report.parameters =
        "alpha=" + alpha.get_str() + ", alpha_seq=" + alpha_seq.to_spec() + ", n=" + std::to_string(n);

    ConjectureInstance inst;
    inst.name = "two-term array, order " + std::to_string(n + 1);
    inst.detection = infer_lambda(conjecture1_array(alpha, alpha_seq, n), DetectMode::general);
    inst.notes = verdict_note(inst.detection);

    bool literal_matches = false;
    if (inst.detection.verdict == Verdict::pass) {
        const std::vector<Rational>& lam = inst.detection.lambda;
        const std::vector<Integer> t = alpha_seq.terms(n);

        bool ascending = true;
        Integer prod = alpha;
        for (std::size_t i = 0; i < lam.size() && ascending; ++i) {
            if (i > 0) {
                prod *= t[i];
            }
            ascending = lam[i] == Rational(prod);
        }

        std::string literal_note;
        try {
            const std::vector<Integer> full = alpha_seq.terms(n + 1);
            bool ok = true;
            for (std::size_t i = 0; i < lam.size() && ok; ++i) {
                Integer q = 1;
                for (std::size_t j = i; j <= n; ++j) {
                    q *= full[j];
                }
                ok = lam[i] == Rational(q);
            }
            literal_matches = ok;
            literal_note = literal_matches ? "the order-dependent descending products fit as well"
                                           : "the order-dependent descending products do not fit";
        } catch (const SeqExhausted&) {
            literal_note = "the order-dependent descending products need term " + std::to_string(n) +
                           ", which the sequence does not have";
        }

        inst.notes += ascending ? "; inferred weights are the ascending products alpha*alpha_seq(1)*...*alpha_seq(i); "
                                : "; inferred weights match neither product form; ";
        inst.notes += literal_note;
    }

    switch (inst.detection.verdict) {
        case Verdict::pass:
            report.outcome = literal_matches ? ConjectureOutcome::supported : ConjectureOutcome::mixed;
            break;
        case Verdict::fail:
            report.outcome = ConjectureOutcome::refuted;
            report.counterexample = 0;
            break;
        case Verdict::underdetermined:
            report.outcome = ConjectureOutcome::mixed;
            break;
    }
    report.instances.push_back(std::move(inst));
    return report;
}

ConjectureReport conjecture2_explore(std::size_t n) {
    if (n < 4) {
        throw std::invalid_argument("conjecture 2 exploration needs n >= 4");
    }
    ConjectureReport report;
    report.id = "conjecture2";
    report.parameters = "n=" + std::to_string(n);

    ConjectureInstance ballot;
    ballot.name = "ballot triangle";
    ballot.detection = infer_lambda(ballot_triangle(n), DetectMode::general);
    ballot.notes = verdict_note(ballot.detection);

    ConjectureInstance aigner;
    aigner.name = "admissible matrix with Catalan first column";
    std::vector<Integer> s(n, Integer(2));
    s[0] = 1;
    aigner.detection = infer_lambda(build_admissible(Seq::list(std::move(s)), n), DetectMode::general);
    aigner.notes = verdict_note(aigner.detection);
    if (aigner.detection.verdict == Verdict::pass) {
        aigner.notes += "; inferred weights are the Catalan numbers shifted by one";
    }

    const bool ballot_ok = ballot.detection.verdict == Verdict::pass;
    const bool aigner_ok = aigner.detection.verdict == Verdict::pass;
    if (ballot_ok && aigner_ok) {
        report.outcome = ConjectureOutcome::supported;
    } else if (!ballot_ok && !aigner_ok) {
        report.outcome = ConjectureOutcome::refuted;
        report.counterexample = 0;
    } else {
        report.outcome = ConjectureOutcome::mixed;
        report.counterexample = ballot_ok ? 1 : 0;
    }
    report.instances.push_back(std::move(ballot));
    report.instances.push_back(std::move(aigner));
    return report;
}

Poly minpoly_mod_p(const LTMatrix& a, long p) {
    require_prime(p);
    const std::size_t d = a.order();
    const ModMatrix base = residue_matrix(a, p);
    ModMatrix power = identity_matrix(d);

    // Echelon basis of vectorized powers, pivots normalized to 1, plus
    // the polynomial combination that produced each reduced row.
    std::vector<std::vector<long>> rows;
    std::vector<std::size_t> pivots;
    std::vector<std::vector<long>> combos;

    for (std::size_t k = 0; k <= d; ++k) {
        std::vector<long> v;
        v.reserve(d * d);
        for (const auto& row : power) {
            v.insert(v.end(), row.begin(), row.end());
        }
        std::vector<long> combo(k + 1, 0);
        combo[k] = 1;

        for (std::size_t b = 0; b < rows.size(); ++b) {
            const long c = v[pivots[b]];
            if (c == 0) {
                continue;
            }
            for (std::size_t t = 0; t < v.size(); ++t) {
                v[t] = (v[t] + (p - c) * rows[b][t]) % p;
            }
            for (std::size_t t = 0; t < combos[b].size(); ++t) {
                combo[t] = (combo[t] + (p - c) * combos[b][t]) % p;
            }
        }

        std::size_t piv = v.size();
        for (std::size_t t = 0; t < v.size(); ++t) {
            if (v[t] != 0) {
                piv = t;
                break;
            }
        }
        if (piv == v.size()) {
            // First dependency: combo is monic of degree k (the earlier
            // combos all have strictly smaller degree).
            std::vector<Integer> coeffs(combo.begin(), combo.end());
            Poly g{std::move(coeffs)};
            verify_annihilates(g, base, p);
            return g;
        }

        const long inv = modp_inverse(v[piv], p);
        for (long& t : v) {
            t = t * inv % p;
        }
        for (long& t : combo) {
            t = t * inv % p;
        }
        rows.push_back(std::move(v));
        pivots.push_back(piv);
        combos.push_back(std::move(combo));
        power = mul_mod(power, base, p);
    }
    throw std::logic_error("no dependency among matrix powers up to the order; elimination is inconsistent");
}

bool pascal_order_mod_p_check(std::size_t n, long p) {
    require_prime(p);
    ModMatrix acc = identity_matrix(n + 1);
    ModMatrix sq = residue_matrix(pascal(n), p);
    for (long e = p; e > 0; e >>= 1) {
        if (e & 1) {
            acc = mul_mod(acc, sq, p);
        }
        sq = mul_mod(sq, sq, p);
    }
    return acc == identity_matrix(n + 1);
}

}  // namespace vrmat
