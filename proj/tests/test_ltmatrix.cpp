#include <doctest.h>

#include <sstream>
#include <stdexcept>
#include <vector>

#include "vrmat/ltmatrix.hpp"

using vrmat::Integer;
using vrmat::LTMatrix;

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

TEST_SUITE("ltmatrix") {

TEST_CASE("construction and access") {
    const LTMatrix m = make({{1}, {2, 1}, {4, 4, 1}});
    CHECK(m.order() == 3);
    CHECK(m.at(2, 1) == 4);
    CHECK(m.entry(2, 1) == 4);
    CHECK(m.entry(0, 2) == 0);  // upper triangle reads as zero
    CHECK(m.first_column() == std::vector<Integer>{1, 2, 4});
    CHECK_THROWS_AS(m.at(0, 2), std::out_of_range);
    CHECK_THROWS_AS(m.entry(3, 0), std::out_of_range);

    CHECK_THROWS_AS(LTMatrix({}), std::invalid_argument);
    CHECK_THROWS_AS(make({{1}, {2, 1, 3}}), std::invalid_argument);

    CHECK(LTMatrix::identity(3) == make({{1}, {0, 1}, {0, 0, 1}}));
}

TEST_CASE("multiplication") {
    const LTMatrix a = make({{1}, {1, 1}, {1, 2, 1}});
    const LTMatrix b = make({{1}, {3, 1}, {0, 3, 1}});
    CHECK(a * b == make({{1}, {4, 1}, {7, 5, 1}}));
    CHECK(a * LTMatrix::identity(3) == a);
    CHECK(LTMatrix::identity(3) * a == a);
    CHECK_THROWS_AS(a * LTMatrix::identity(2), std::invalid_argument);
}

TEST_CASE("powers match iterated products") {
    const LTMatrix a = make({{1}, {-2, 3}, {5, 0, -1}, {1, 7, 2, 4}});
    LTMatrix naive = LTMatrix::identity(4);
    for (unsigned long m = 0; m <= 7; ++m) {
        CHECK(a.pow(m) == naive);
        naive = naive * a;
    }
}

TEST_CASE("inverse by forward substitution") {
    const LTMatrix m = make({{1}, {2, 1}, {4, 4, 1}});
    CHECK(m.inverse() == make({{1}, {-2, 1}, {4, -4, 1}}));
    CHECK(m * m.inverse() == LTMatrix::identity(3));
    CHECK(m.inverse() * m == LTMatrix::identity(3));

    // The binomial matrix inverts to its alternating-sign twin.
    const LTMatrix p = make({{1}, {1, 1}, {1, 2, 1}, {1, 3, 3, 1}});
    CHECK(p.inverse() == make({{1}, {-1, 1}, {1, -2, 1}, {-1, 3, -3, 1}}));

    // Unit diagonals may mix signs.
    const LTMatrix d = make({{-1}, {3, 1}, {2, -5, -1}});
    CHECK(d * d.inverse() == LTMatrix::identity(3));

    CHECK_THROWS_WITH_AS(make({{1}, {0, 2}}).inverse(),
                         "no integer inverse: diagonal entry (1, 1) is 2",
                         std::domain_error);
}

TEST_CASE("direct sum with a leading unit") {
    CHECK(vrmat::direct_sum_1(make({{5}})) == make({{1}, {0, 5}}));
    CHECK(vrmat::direct_sum_1(make({{1}, {2, 1}})) ==
          make({{1}, {0, 1}, {0, 2, 1}}));
}

TEST_CASE("json round trip") {
    const LTMatrix m = make({{1}, {2, 1}, {4, 4, 1}});
    CHECK(LTMatrix::from_json(m.to_json()) == m);

    // Entries beyond any machine word survive the trip.
    LTMatrix big = LTMatrix::identity(2);
    big.at(1, 0) = Integer("10000000000000000000000000000000000000001");
    const LTMatrix back = LTMatrix::from_json(big.to_json());
    CHECK(back == big);
    CHECK(back.at(1, 0).get_str() ==
          "10000000000000000000000000000000000000001");
}

TEST_CASE("json schema errors name the offending path") {
    auto path_of = [](const std::string& text) {
        try {
            LTMatrix::from_json(text);
        } catch (const vrmat::JsonSchemaError& e) {
            return e.path();
        }
        FAIL("expected JsonSchemaError for ", text);
        return std::string();
    };
    CHECK(path_of("not json") == "$");
    CHECK(path_of("[1,2]") == "$");
    CHECK(path_of(R"({"rows": []})") == "order");
    CHECK(path_of(R"({"order": -1, "rows": []})") == "order");
    CHECK(path_of(R"({"order": 0, "rows": []})") == "order");
    CHECK(path_of(R"({"order": 2})") == "rows");
    CHECK(path_of(R"({"order": 2, "rows": [["1"]]})") == "rows");
    CHECK(path_of(R"({"order": 2, "rows": [["1"], ["1"]]})") == "rows[1]");
    CHECK(path_of(R"({"order": 2, "rows": [["1"], 7]})") == "rows[1]");
    CHECK(path_of(R"({"order": 2, "rows": [["1"], [3, "1"]]})") == "rows[1][0]");
    CHECK(path_of(R"({"order": 1, "rows": [["1x"]]})") == "rows[0][0]");

    CHECK_THROWS_WITH_AS(
        LTMatrix::from_json(R"({"order": 1, "rows": [["1x"]]})"),
        "rows[0][0]: '1x' is not a decimal integer", vrmat::JsonSchemaError);
}

TEST_CASE("csv and diagnostic forms") {
    CHECK(make({{1}, {0, 1}}).to_csv() == "1\n0,1\n");
    CHECK(make({{1}, {2, 1}, {4, 4, 1}}).to_csv() == "1\n2,1\n4,4,1\n");

    std::ostringstream os;
    os << make({{1}, {2, 1}, {4, 4, 1}});
    CHECK(os.str() == "[1; 2 1; 4 4 1]");
}

}  // TEST_SUITE
