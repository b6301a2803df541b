#include "vrmat/vrm.hpp"

#include <stdexcept>
#include <utility>

namespace vrmat {

VrmSpec VrmSpec::strict(Seq weights) {
    return VrmSpec{std::move(weights), std::nullopt};
}

VrmSpec VrmSpec::general(Seq weights, std::vector<Integer> first_column) {
    return VrmSpec{std::move(weights), std::move(first_column)};
}

namespace {

// Column-by-column fill of the hockey-stick recurrence over a given first
// column. w must supply terms 0..n-1 (only used when n >= 1).
LTMatrix build_from_column(const Seq& w, std::vector<Integer> col0, std::size_t n) {
    std::size_t order = n + 1;
    if (col0.size() != order) {
        throw std::invalid_argument("first column must have " + std::to_string(order) +
                                    " entries, found " + std::to_string(col0.size()));
    }
    std::vector<std::vector<Integer>> rows(order);
    for (std::size_t i = 0; i < order; ++i) {
        rows[i].assign(i + 1, Integer(0));
        rows[i][0] = col0[i];
    }
    std::vector<Integer> wt;  // w[0..n-1], fetched once
    if (n >= 1) {
        wt = w.terms(n);
    }
    for (std::size_t k = 1; k < order; ++k) {
        for (std::size_t r = k; r < order; ++r) {
            Integer acc = 0;
            for (std::size_t l = k - 1; l < r; ++l) {
                acc += wt[r - 1 - l] * rows[l][k - 1];
            }
            rows[r][k] = acc;
        }
    }
    return LTMatrix(std::move(rows));
}

Seq seq_from_values(const std::vector<Integer>& values) {
    return Seq::list(values);
}

}  // namespace

LTMatrix build_vrm(const VrmSpec& spec, std::size_t n) {
    if (spec.is_strict()) {
        if (spec.weights.term(0) != 1) {
            throw std::domain_error("strict build requires leading weight 1, found " +
                                    spec.weights.term(0).get_str());
        }
        return build_from_column(spec.weights, spec.weights.terms(n + 1), n);
    }
    return build_from_column(spec.weights, *spec.first_column, n);
}

LTMatrix toeplitz(const Seq& weights, std::size_t n) {
    std::vector<Integer> wt = weights.terms(n + 1);
    std::vector<std::vector<Integer>> rows(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        rows[i].reserve(i + 1);
        for (std::size_t j = 0; j <= i; ++j) {
            rows[i].push_back(wt[i - j]);
        }
    }
    return LTMatrix(std::move(rows));
}

LTMatrix toeplitz_block(const Seq& weights, std::size_t n, std::size_t k) {
    if (k > n) {
        throw std::invalid_argument("block index " + std::to_string(k) +
                                    " exceeds n = " + std::to_string(n));
    }
    LTMatrix block = toeplitz(weights, n - k);
    std::vector<std::vector<Integer>> rows(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        rows[i].assign(i + 1, Integer(0));
        if (i < k) {
            rows[i][i] = 1;
        } else {
            for (std::size_t j = k; j <= i; ++j) {
                rows[i][j] = block.at(i - k, j - k);
            }
        }
    }
    return LTMatrix(std::move(rows));
}

std::pair<LTMatrix, LTMatrix> decompose_step(const Seq& weights, std::size_t n) {
    if (n < 1) {
        throw std::invalid_argument("decomposition step needs n >= 1");
    }
    if (weights.term(0) != 1) {
        throw std::domain_error("decomposition requires leading weight 1");
    }
    LTMatrix t = toeplitz(weights, n);
    LTMatrix rest = direct_sum_1(build_vrm(VrmSpec::strict(weights), n - 1));
    if (t * rest != build_vrm(VrmSpec::strict(weights), n)) {
        throw std::logic_error("decomposition step failed to reproduce the matrix");
    }
    return {std::move(t), std::move(rest)};
}

std::vector<LTMatrix> decompose_chain(const Seq& weights, std::size_t n) {
    if (weights.term(0) != 1) {
        throw std::domain_error("decomposition requires leading weight 1");
    }
    std::vector<LTMatrix> factors;
    factors.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        factors.push_back(toeplitz_block(weights, n, k));
    }
    LTMatrix product = LTMatrix::identity(n + 1);
    for (const LTMatrix& f : factors) {
        product = product * f;
    }
    if (product != build_vrm(VrmSpec::strict(weights), n)) {
        throw std::logic_error("factor chain failed to reproduce the matrix");
    }
    return factors;
}

LTMatrix vrm_inverse(const Seq& weights, std::size_t n) {
    Integer w0 = weights.term(0);
    if (w0 != 1 && w0 != -1) {
        throw std::domain_error("matrix is not invertible over the integers: "
                                "leading weight " + w0.get_str() + " is not 1 or -1");
    }
    Seq mu = seq_from_values(conv_inverse(weights, n + 1));
    // Reversed chain: the forward matrix is F_0 * ... * F_n with
    // F_k = I_k (+) T[w], so the inverse is the product of the block
    // inverses I_k (+) T[mu] taken from k = n down to 0. The k = n factor
    // is I_n (+) [mu_0]; it only matters when the leading weight is -1.
    LTMatrix inv = LTMatrix::identity(n + 1);
    for (std::size_t k = n + 1; k-- > 0;) {
        inv = inv * toeplitz_block(mu, n, k);
    }
    LTMatrix forward = build_from_column(weights, weights.terms(n + 1), n);
    if (forward * inv != LTMatrix::identity(n + 1)) {
        throw std::logic_error("inverse chain failed the identity check");
    }
    return inv;
}

LTMatrix pascal(std::size_t n) {
    std::vector<std::vector<Integer>> rows(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        rows[i].reserve(i + 1);
        for (std::size_t j = 0; j <= i; ++j) {
            rows[i].push_back(binom(i, static_cast<long>(j)));
        }
    }
    return LTMatrix(std::move(rows));
}

LTMatrix pascal_func(std::size_t n, const Integer& x) {
    std::vector<std::vector<Integer>> rows(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        rows[i].reserve(i + 1);
        for (std::size_t j = 0; j <= i; ++j) {
            rows[i].push_back(binom(i, static_cast<long>(j)) *
                              ipow(x, static_cast<unsigned long>(i - j)));
        }
    }
    return LTMatrix(std::move(rows));
}

LTMatrix pascal_kelim(std::size_t n, const Integer& x) {
    std::vector<std::vector<Integer>> rows(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        rows[i].reserve(i + 1);
        for (std::size_t j = 0; j <= i; ++j) {
            rows[i].push_back(binom(i + 1, static_cast<long>(j + 1)) *
                              ipow(x, static_cast<unsigned long>(i - j)));
        }
    }
    return LTMatrix(std::move(rows));
}

LTMatrix s_matrix(std::size_t n, const Integer& x) {
    std::vector<std::vector<Integer>> rows(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        rows[i].reserve(i + 1);
        for (std::size_t j = 0; j <= i; ++j) {
            rows[i].push_back(ipow(x, static_cast<unsigned long>(i - j)));
        }
    }
    return LTMatrix(std::move(rows));
}

}  // namespace vrmat
