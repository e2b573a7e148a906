#include "filiform/rational.hpp"

#include <doctest.h>
#include <stdexcept>

using namespace filiform;

TEST_CASE("rational parse and print") {
    CHECK(rat_to_string(rat_from_string("3/6")) == "1/2");
    CHECK(rat_to_string(rat_from_string("-4/2")) == "-2");
    CHECK(rat_to_string(rat_from_string("7")) == "7");
    CHECK(rat_to_string(rat_from_string("0/5")) == "0");
    CHECK(rat_from_string("123456789012345678901234567890/2") ==
          Rational("61728394506172839450617283945"));
    CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("1/"), std::invalid_argument);
}

TEST_CASE("rational canonical form") {
    CHECK(rat_is_canonical(rat_from_string("2/4")));
    CHECK(rat_is_canonical(Rational(0)));
    Rational sum = Rational(1, 6) + Rational(1, 3);
    CHECK(sum == Rational(1, 2));
    CHECK(rat_is_canonical(sum));
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(-1, -1) == 0);  // the f-family convention is applied per use
    CHECK(binomial(60, 30) == Rational("118264581564861424"));
}
