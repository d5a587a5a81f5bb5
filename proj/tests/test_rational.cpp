#include <catch2/catch_amalgamated.hpp>

#include "mvharm/rational.hpp"

using namespace mvharm;

TEST_CASE("rat builds canonical rationals") {
    CHECK(rat(1, 2) == rat(2, 4));
    CHECK(rat(-1, 2) == rat(1, -2));
    CHECK(rat(0, 7) == Rational(0));
    CHECK(rat(6, 3) == Rational(2));
    CHECK_THROWS_AS(rat(1, 0), error);
}

TEST_CASE("integer membership predicates") {
    CHECK(is_integer(rat(4, 2)));
    CHECK(is_integer(Rational(0)));
    CHECK_FALSE(is_integer(rat(1, 2)));
    CHECK_FALSE(is_integer(rat(-3, 2)));
}

TEST_CASE("negative integer test excludes zero and non-integers") {
    CHECK(is_negative_integer(rat(-1)));
    CHECK(is_negative_integer(rat(-2)));
    CHECK(is_negative_integer(rat(-100)));
    CHECK_FALSE(is_negative_integer(Rational(0)));
    CHECK_FALSE(is_negative_integer(rat(1)));
    CHECK_FALSE(is_negative_integer(rat(-3, 2)));
    CHECK_FALSE(is_negative_integer(rat(-1, 2)));
}

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(-1, 2) == 0);
    CHECK(binomial(6, 3) == 20);
}

TEST_CASE("rational to_string round trips through parse") {
    for (long num = -8; num <= 8; ++num) {
        for (long den = 1; den <= 5; ++den) {
            Rational q = rat(num, den);
            CHECK(parse_rational(to_string(q)) == q);
        }
    }
    CHECK(to_string(rat(1, 2)) == "1/2");
    CHECK(to_string(rat(-3)) == "-3");
    CHECK(to_string(Rational(0)) == "0");
}

TEST_CASE("parse_rational rejects malformed input") {
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("-7/2") == rat(-7, 2));
    CHECK_THROWS_AS(parse_rational(""), parse_error);
    CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
    CHECK_THROWS_AS(parse_rational("abc"), parse_error);
    CHECK_THROWS_AS(parse_rational("1/"), parse_error);
}

TEST_CASE("parse_error carries a position") {
    try {
        parse_rational("3/x");
        FAIL("expected a parse_error");
    } catch (const parse_error& e) {
        CHECK(e.position() == 2);
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}
