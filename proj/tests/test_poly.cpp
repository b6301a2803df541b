#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "vrmat/poly.hpp"

using vrmat::Integer;
using vrmat::Poly;

TEST_SUITE("poly") {

TEST_CASE("normalization strips trailing zeros") {
    CHECK(Poly({Integer(1), Integer(2), Integer(0)}) ==
          Poly({Integer(1), Integer(2)}));
    CHECK(Poly({Integer(0)}).is_zero());
    CHECK(Poly().degree() == -1);
    CHECK(Poly({Integer(5)}).degree() == 0);
    CHECK(Poly::indeterminate().degree() == 1);
    CHECK(Poly::constant(7).coeff(0) == 7);
    CHECK(Poly::constant(7).coeff(3) == 0);
}

TEST_CASE("ring operations") {
    const Poly x = Poly::indeterminate();
    const Poly p = Poly::constant(1) + x;      // 1 + x
    const Poly q = p * p;                      // 1 + 2x + x^2
    CHECK(q == Poly({Integer(1), Integer(2), Integer(1)}));
    CHECK(q - p * x ==
          Poly({Integer(1), Integer(1)}));     // 1 + 2x + x^2 - x - x^2
    CHECK((p - p).is_zero());
    CHECK((Poly() * q).is_zero());
    CHECK(vrmat::scale_shift(p, 3, 2) ==
          Poly({Integer(0), Integer(0), Integer(3), Integer(3)}));
    CHECK(vrmat::scale_shift(p, 0, 2).is_zero());
}

TEST_CASE("evaluation by horner") {
    const Poly p({Integer(1), Integer(-3), Integer(0), Integer(2)});  // 1 - 3x + 2x^3
    CHECK(p(0) == 1);
    CHECK(p(1) == 0);
    CHECK(p(2) == 11);
    CHECK(p(-2) == -9);
    CHECK(Poly()(5) == 0);
}

TEST_CASE("human readable form") {
    CHECK(Poly().pretty() == "0");
    CHECK(Poly::constant(-4).pretty() == "-4");
    CHECK(Poly({Integer(1), Integer(1)}).pretty() == "1 + x");
    CHECK(Poly({Integer(0), Integer(-1), Integer(3)}).pretty() == "-x + 3x^2");
    CHECK(Poly({Integer(1), Integer(10), Integer(15), Integer(7), Integer(1)})
              .pretty() == "1 + 10x + 15x^2 + 7x^3 + x^4");
    std::ostringstream os;
    os << Poly({Integer(2), Integer(0), Integer(-1)});
    CHECK(os.str() == "2 - x^2");
}

TEST_CASE("json round trip") {
    const Poly p({Integer("123456789012345678901234567890"), Integer(-7)});
    CHECK(p.to_json() == R"(["123456789012345678901234567890","-7"])");
    CHECK(Poly::from_json(p.to_json()) == p);
    CHECK(Poly::from_json("[]").is_zero());
    CHECK_THROWS_AS(Poly::from_json(R"({"a":1})"), std::runtime_error);
    CHECK_THROWS_AS(Poly::from_json("[1,2]"), std::runtime_error);
}

}  // TEST_SUITE
