#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "vrmat/vrm.hpp"

using vrmat::Integer;
using vrmat::LTMatrix;
using vrmat::Seq;
using vrmat::VrmSpec;

namespace {

LTMatrix make(std::vector<std::vector<long>> rows) {
    std::vector<std::vector<Integer>> exact;
    exact.reserve(rows.size());
    for (const auto& row : rows) {
        exact.emplace_back(row.begin(), row.end());
    }
    return LTMatrix(std::move(exact));
}

}  // namespace

TEST_SUITE("vrm") {

TEST_CASE("unit weights give the binomial matrix") {
    const LTMatrix v = vrmat::build_vrm(VrmSpec::strict(Seq::ones()), 3);
    CHECK(v == make({{1}, {1, 1}, {1, 2, 1}, {1, 3, 3, 1}}));
    CHECK(v == vrmat::pascal(3));
    for (std::size_t n = 0; n <= 10; ++n) {
        CHECK(vrmat::build_vrm(VrmSpec::strict(Seq::ones()), n) == vrmat::pascal(n));
    }
}

TEST_CASE("doubling weights") {
    CHECK(vrmat::build_vrm(VrmSpec::strict(Seq::geometric(2)), 3) ==
          make({{1}, {2, 1}, {4, 4, 1}, {8, 12, 6, 1}}));
}

TEST_CASE("strict shape validation") {
    CHECK_THROWS_AS(vrmat::build_vrm(VrmSpec::strict(Seq::constant(2)), 2),
                    std::domain_error);
    CHECK_THROWS_AS(
        vrmat::build_vrm(VrmSpec::general(Seq::ones(), {Integer(1), Integer(1)}), 2),
        std::invalid_argument);
}

TEST_CASE("general shape decouples the first column") {
    const VrmSpec spec =
        VrmSpec::general(Seq::constant(2), {Integer(3), Integer(1), Integer(4)});
    const LTMatrix v = vrmat::build_vrm(spec, 2);
    CHECK(v.first_column() == std::vector<Integer>{3, 1, 4});
    // a[1][1] = w0 * a[0][0] = 2 * 3, a[2][1] = w1*a[0][0] + w0*a[1][0],
    // a[2][2] = w0 * a[1][1].
    CHECK(v == make({{3}, {1, 6}, {4, 8, 12}}));
}

TEST_CASE("hockey stick recurrence against binomial column sums") {
    // For unit weights the recurrence collapses to the classic identity
    // C(r, k) = sum_{l=k-1}^{r-1} C(l, k-1).
    const LTMatrix v = vrmat::build_vrm(VrmSpec::strict(Seq::ones()), 9);
    for (std::size_t r = 1; r <= 9; ++r) {
        for (std::size_t k = 1; k <= r; ++k) {
            Integer acc = 0;
            for (std::size_t l = k - 1; l < r; ++l) {
                acc += v.entry(l, k - 1);
            }
            CHECK(v.entry(r, k) == acc);
        }
    }
}

TEST_CASE("toeplitz forms") {
    CHECK(vrmat::toeplitz(Seq::geometric(2), 2) == make({{1}, {2, 1}, {4, 2, 1}}));
    CHECK(vrmat::toeplitz_block(Seq::geometric(2), 3, 0) ==
          vrmat::toeplitz(Seq::geometric(2), 3));
    CHECK(vrmat::toeplitz_block(Seq::geometric(2), 3, 1) ==
          make({{1}, {0, 1}, {0, 2, 1}, {0, 4, 2, 1}}));
    CHECK(vrmat::toeplitz_block(Seq::geometric(2), 3, 2) ==
          make({{1}, {0, 1}, {0, 0, 1}, {0, 0, 2, 1}}));
    // k == n leaves only the 1x1 block w0 in the corner; with a unit
    // leading weight that is the identity.
    CHECK(vrmat::toeplitz_block(Seq::geometric(2), 3, 3) == LTMatrix::identity(4));
    CHECK(vrmat::toeplitz_block(Seq::list({5, 1}), 1, 1) == make({{1}, {0, 5}}));
    CHECK_THROWS_AS(vrmat::toeplitz_block(Seq::ones(), 2, 3), std::invalid_argument);
}

TEST_CASE("single factorization step") {
    const auto [t, rest] = vrmat::decompose_step(Seq::geometric(2), 2);
    CHECK(t == make({{1}, {2, 1}, {4, 2, 1}}));
    CHECK(rest == make({{1}, {0, 1}, {0, 2, 1}}));
    CHECK(t * rest == vrmat::build_vrm(VrmSpec::strict(Seq::geometric(2)), 2));
    CHECK_THROWS_AS(vrmat::decompose_step(Seq::ones(), 0), std::invalid_argument);
}

TEST_CASE("full block chain") {
    CHECK(vrmat::decompose_chain(Seq::ones(), 0).empty());

    const Seq families[] = {Seq::ones(), Seq::geometric(2), Seq::geometric(-1),
                            Seq::catalan(), Seq::list({1, 0, -3, 7, 2, 2, 2})};
    for (const Seq& w : families) {
        for (std::size_t n = 1; n <= 6; ++n) {
            const auto chain = vrmat::decompose_chain(w, n);
            REQUIRE(chain.size() == n);
            LTMatrix product = chain[0];
            for (std::size_t k = 1; k < chain.size(); ++k) {
                CHECK(chain[k] == vrmat::toeplitz_block(w, n, k));
                product = product * chain[k];
            }
            CHECK(product == vrmat::build_vrm(VrmSpec::strict(w), n));
        }
    }

    // Reversing the factor order breaks the product; the chain only
    // composes left to right.
    const auto chain = vrmat::decompose_chain(Seq::geometric(2), 3);
    const LTMatrix reversed = chain[2] * chain[1] * chain[0];
    CHECK(reversed != vrmat::build_vrm(VrmSpec::strict(Seq::geometric(2)), 3));
}

TEST_CASE("inverse through the reversed chain") {
    const Seq families[] = {Seq::ones(), Seq::geometric(3), Seq::catalan(),
                            Seq::list({1, -2, 0, 5, 5, 5, 5})};
    for (const Seq& w : families) {
        for (std::size_t n = 0; n <= 6; ++n) {
            const LTMatrix v = vrmat::build_vrm(VrmSpec::strict(w), n);
            const LTMatrix inv = vrmat::vrm_inverse(w, n);
            CHECK(v * inv == LTMatrix::identity(n + 1));
            CHECK(inv == v.inverse());
        }
    }

    // A leading weight of -1 is a unit too; the forward matrix is then the
    // general shape whose first column is the weight sequence itself.
    const Seq neg = Seq::list({-1, 2, 3});
    const LTMatrix v = vrmat::build_vrm(VrmSpec::general(neg, neg.terms(3)), 2);
    CHECK(v * vrmat::vrm_inverse(neg, 2) == LTMatrix::identity(3));
    CHECK_THROWS_AS(vrmat::vrm_inverse(Seq::constant(2), 2), std::domain_error);
}

TEST_CASE("pascal family exponential law") {
    for (long x = -3; x <= 3; ++x) {
        for (long y = -3; y <= 3; ++y) {
            CHECK(vrmat::pascal_func(5, x) * vrmat::pascal_func(5, y) ==
                  vrmat::pascal_func(5, Integer(x + y)));
        }
        CHECK(vrmat::pascal_func(5, x) * vrmat::pascal_func(5, -x) ==
              LTMatrix::identity(6));
    }
    CHECK(vrmat::pascal_func(3, 1) == vrmat::pascal(3));
    CHECK(vrmat::pascal_func(2, 2) == make({{1}, {2, 1}, {4, 4, 1}}));
}

TEST_CASE("shift matrix identity") {
    CHECK(vrmat::s_matrix(3, 2) ==
          make({{1}, {2, 1}, {4, 2, 1}, {8, 4, 2, 1}}));
    CHECK(vrmat::pascal_kelim(2, 3) == make({{1}, {6, 1}, {27, 9, 1}}));
    for (long x = -4; x <= 4; ++x) {
        for (std::size_t n = 0; n <= 6; ++n) {
            CHECK(vrmat::s_matrix(n, x) ==
                  vrmat::pascal_kelim(n, x) * vrmat::pascal_func(n, Integer(-x)));
        }
    }
}

}  // TEST_SUITE
