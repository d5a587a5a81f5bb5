#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "mvharm/polynomial.hpp"

using namespace mvharm;

namespace {

// Uniformly random polynomial with small terms; fixed seed per call site.
Polynomial random_poly(std::mt19937& rng, Ambient amb, int max_terms,
                       int max_deg) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> vec(1, amb.k);
    std::uniform_int_distribution<int> coord(1, amb.m);
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    Polynomial p(amb);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        Monomial mon = Monomial::one();
        int d = deg(rng);
        for (int f = 0; f < d; ++f)
            mon = mon.times(Monomial::variable({vec(rng), coord(rng)}));
        p.add_term(mon, rat(num(rng), den(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("parse handles the grammar") {
    Ambient amb{1, 2};
    Polynomial zero = Polynomial::parse("0", 1, 2);
    CHECK(zero.is_zero());

    Polynomial p = Polynomial::parse("x1_1^2 - 1/2*x1_2", 1, 2);
    CHECK(p.term_count() == 2);
    CHECK(p.coefficient(Monomial::variable({1, 1}, 2)) == Rational(1));
    CHECK(p.coefficient(Monomial::variable({1, 2})) == rat(-1, 2));

    Polynomial q = Polynomial::parse(" 3 * x2_1 ^ 2 * x1_1 + 2 ", 2, 1);
    CHECK(q.coefficient(Monomial::one()) == Rational(2));
    CHECK(q.coefficient(Monomial::variable({2, 1}, 2)
                            .times(Monomial::variable({1, 1}))) ==
          Rational(3));

    CHECK(Polynomial::parse("-x1_1", 1, 1) ==
          -Polynomial::variable(Ambient{1, 1}, {1, 1}));
    CHECK(Polynomial::parse("7/2", 1, 1) ==
          Polynomial::constant(Ambient{1, 1}, rat(7, 2)));
    CHECK(Polynomial::parse("x1_1 + x1_1", 1, 1) ==
          Polynomial::parse("2*x1_1", 1, 1));
    CHECK(Polynomial::parse("x1_1 - x1_1", 1, 1).is_zero());
}

TEST_CASE("parse rejects out-of-range variables and bad syntax") {
    CHECK_THROWS_AS(Polynomial::parse("x3_1", 2, 2), parse_error);
    CHECK_THROWS_AS(Polynomial::parse("x1_3", 2, 2), parse_error);
    CHECK_THROWS_AS(Polynomial::parse("x1_1^0", 1, 1), parse_error);
    CHECK_THROWS_AS(Polynomial::parse("", 1, 1), parse_error);
    CHECK_THROWS_AS(Polynomial::parse("x1_1 +", 1, 1), parse_error);
    CHECK_THROWS_AS(Polynomial::parse("x1_1 x1_1", 1, 1), parse_error);
    CHECK_THROWS_AS(Polynomial::parse("*x1_1", 1, 1), parse_error);

    try {
        Polynomial::parse("x3_1", 2, 2);
        FAIL("expected a parse_error");
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).find("vector index") != std::string::npos);
    }
}

TEST_CASE("render round trips through parse") {
    Ambient amb{2, 3};
    std::mt19937 rng(20240711);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial p = random_poly(rng, amb, 6, 5);
        Polynomial back = Polynomial::parse(p.str(), amb.k, amb.m);
        CHECK(back == p);
    }
    CHECK(Polynomial::zero(amb).str() == "0");
}

TEST_CASE("ring operations are exact and canonical") {
    Ambient amb{2, 2};
    std::mt19937 rng(987654);
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial p = random_poly(rng, amb, 4, 4);
        Polynomial q = random_poly(rng, amb, 4, 4);
        Polynomial r = random_poly(rng, amb, 4, 4);
        CHECK((p + q) == (q + p));
        CHECK((p * q) == (q * p));
        CHECK(((p + q) + r) == (p + (q + r)));
        CHECK(((p * q) * r) == (p * (q * r)));
        CHECK((p * (q + r)) == (p * q + p * r));
        CHECK((p - p).is_zero());
        CHECK((p * Polynomial::zero(amb)).is_zero());
    }

    Polynomial x = Polynomial::variable(amb, {1, 1});
    Polynomial y = Polynomial::variable(amb, {1, 2});
    CHECK(x * x == Polynomial::parse("x1_1^2", 2, 2));
    CHECK((x + y) * (x - y) == Polynomial::parse("x1_1^2 - x1_2^2", 2, 2));
}

TEST_CASE("ambient mismatch is rejected") {
    Polynomial p = Polynomial::one(Ambient{1, 2});
    Polynomial q = Polynomial::one(Ambient{2, 2});
    CHECK_THROWS_AS(p + q, error);
    CHECK_THROWS_AS(p * q, error);
}

TEST_CASE("derivative is the exact partial derivative") {
    Ambient amb{2, 2};
    CHECK(Polynomial::one(amb).derivative({1, 1}).is_zero());
    CHECK(Polynomial::parse("x1_1^3", 2, 2).derivative({1, 1}) ==
          Polynomial::parse("3*x1_1^2", 2, 2));
    CHECK(Polynomial::parse("x1_1*x2_1", 2, 2).derivative({2, 1}) ==
          Polynomial::parse("x1_1", 2, 2));

    std::mt19937 rng(112233);
    std::vector<VarIndex> vars = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
    for (int trial = 0; trial < 25; ++trial) {
        Polynomial p = random_poly(rng, amb, 5, 5);
        Polynomial q = random_poly(rng, amb, 5, 5);
        for (VarIndex u : vars) {
            // product rule
            CHECK((p * q).derivative(u) ==
                  p.derivative(u) * q + p * q.derivative(u));
            for (VarIndex v : vars)
                CHECK(p.derivative(u).derivative(v) ==
                      p.derivative(v).derivative(u));
        }
    }
}

TEST_CASE("multidegree_split produces homogeneous parts that reassemble") {
    Ambient amb{2, 1};
    Polynomial p = Polynomial::parse("x1_1^2 + x1_1*x2_1", 2, 1);
    auto parts = p.multidegree_split();
    REQUIRE(parts.size() == 2);
    CHECK(parts.at(MultiDegree({2, 0})) == Polynomial::parse("x1_1^2", 2, 1));
    CHECK(parts.at(MultiDegree({1, 1})) ==
          Polynomial::parse("x1_1*x2_1", 2, 1));

    Polynomial sq = Polynomial::parse("x1_1 + x2_1", 2, 1);
    auto sq_parts = (sq * sq).multidegree_split();
    REQUIRE(sq_parts.size() == 3);
    CHECK(sq_parts.at(MultiDegree({1, 1})) ==
          Polynomial::parse("2*x1_1*x2_1", 2, 1));

    CHECK(Polynomial::zero(amb).multidegree_split().empty());

    std::mt19937 rng(3141592);
    Ambient big{2, 3};
    for (int trial = 0; trial < 30; ++trial) {
        Polynomial q = random_poly(rng, big, 6, 5);
        Polynomial sum(big);
        for (const auto& [d, part] : q.multidegree_split()) {
            CHECK(part.is_homogeneous(d));
            sum += part;
        }
        CHECK(sum == q);
    }
}

TEST_CASE("canonical term order is graded lexicographic") {
    // Higher total degree compares greater; ties break toward the earlier
    // variable with the higher exponent.
    Monomial x2 = Monomial::variable({1, 1}, 2);
    Monomial xy = Monomial::variable({1, 1}).times(Monomial::variable({1, 2}));
    Monomial y2 = Monomial::variable({1, 2}, 2);
    Monomial x = Monomial::variable({1, 1});
    CHECK(x2 > xy);
    CHECK(xy > y2);
    CHECK(y2 > x);
    CHECK(x > Monomial::one());

    Polynomial p = Polynomial::parse("x1_2^2 + x1_1^2 + x1_1*x1_2", 1, 2);
    CHECK(p.str() == "x1_1^2 + x1_1*x1_2 + x1_2^2");
}

TEST_CASE("multidegree ordering and helpers") {
    MultiDegree a({2, 0});
    MultiDegree b({1, 1});
    MultiDegree c({0, 1});
    CHECK(c < a);
    CHECK(c < b);
    CHECK(b < a);  // equal totals fall back to lexicographic
    CHECK(a.total() == 2);
    CHECK(a.plus(1, 3) == MultiDegree({2, 3}));
    CHECK(a.str() == "(2,0)");
    CHECK(MultiDegree::of(Monomial::variable({2, 1}, 3), 2) ==
          MultiDegree({0, 3}));
}
