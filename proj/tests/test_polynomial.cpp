#include <doctest.h>

#include <limits>
#include <random>

#include "clarcube/error.hpp"
#include "clarcube/polynomial.hpp"

using namespace clarcube;

TEST_CASE("addition is termwise and keeps canonical form") {
    BivariatePoly a;
    a.add_term(0, 0, 2);
    a.add_term(1, 0, 1);
    BivariatePoly zero;
    CHECK((a + zero) == a);

    BivariatePoly b;
    b.add_term(0, 0, 3);
    b.add_term(1, 0, 2);
    b.add_term(0, 1, 1);
    BivariatePoly c;
    c.add_term(0, 0, 1);
    c.add_term(0, 1, 1);
    BivariatePoly sum = b + c;
    CHECK(sum.coefficient(0, 0) == 4);
    CHECK(sum.coefficient(1, 0) == 2);
    CHECK(sum.coefficient(0, 1) == 2);

    BivariatePoly x2;
    x2.add_term(2, 0, 1);
    CHECK((x2 + x2).coefficient(2, 0) == 2);
}

TEST_CASE("equality compares canonical term maps") {
    BivariatePoly a, b;
    a.add_term(0, 0, 2);
    a.add_term(1, 0, 1);
    b.add_term(1, 0, 1);
    b.add_term(0, 0, 2);
    CHECK(a == b);

    BivariatePoly c;
    c.add_term(0, 0, 2);
    c.add_term(0, 1, 1);
    CHECK(a != c);

    BivariatePoly zero, cancelled;
    cancelled.add_term(3, 1, 5);
    cancelled.add_term(3, 1, -5);
    CHECK(zero == cancelled);
}

TEST_CASE("string format: total degree then l, unit coefficients and exponents omitted") {
    BivariatePoly a;
    a.add_term(0, 0, 2);
    a.add_term(1, 0, 1);
    CHECK(a.to_string() == "2+x");

    BivariatePoly b;
    b.add_term(0, 0, 3);
    b.add_term(1, 0, 2);
    b.add_term(0, 1, 1);
    CHECK(b.to_string() == "3+2x+y");

    CHECK(BivariatePoly{}.to_string() == "0");

    BivariatePoly mixed;
    mixed.add_term(1, 2, 1);
    mixed.add_term(2, 1, 3);
    CHECK(mixed.to_string() == "3x^2y+xy^2");
}

TEST_CASE("worked-example polynomial prints in the documented order") {
    BivariatePoly p;
    p.add_term(0, 0, 34);
    p.add_term(1, 0, 53);
    p.add_term(2, 0, 35);
    p.add_term(3, 0, 12);
    p.add_term(4, 0, 1);
    p.add_term(0, 1, 48);
    p.add_term(0, 2, 7);
    p.add_term(1, 1, 37);
    p.add_term(1, 2, 1);
    p.add_term(2, 1, 3);
    CHECK(p.to_string() == "34+53x+48y+35x^2+37xy+7y^2+12x^3+3x^2y+xy^2+x^4");
    // Same polynomial, source ordering.
    CHECK(BivariatePoly::parse("34+53x+35x^2+12x^3+x^4+48y+7y^2+37xy+xy^2+3x^2y") == p);
}

TEST_CASE("parse round-trips every canonical polynomial") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> exp_dist(0, 5);
    std::uniform_int_distribution<long long> coeff_dist(1, 1000000);
    for (int trial = 0; trial < 200; ++trial) {
        BivariatePoly p;
        int terms = trial % 7;
        for (int t = 0; t < terms; ++t) p.add_term(exp_dist(rng), exp_dist(rng), coeff_dist(rng));
        CHECK(BivariatePoly::parse(p.to_string()) == p);
    }
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(BivariatePoly::parse(""), Error);
    CHECK_THROWS_AS(BivariatePoly::parse("2+"), Error);
    CHECK_THROWS_AS(BivariatePoly::parse("x+3z"), Error);
    CHECK_THROWS_AS(BivariatePoly::parse("4x^"), Error);
}

TEST_CASE("coefficient overflow is detected, not wrapped") {
    BivariatePoly big;
    big.add_term(0, 0, std::numeric_limits<long long>::max());
    CHECK_THROWS_AS(big.add_term(0, 0, 1), Error);

    BivariatePoly huge;
    huge.add_term(5, 5, std::numeric_limits<long long>::max() / 2);
    CHECK_THROWS_AS(huge.evaluate(2, 2), Error);
}

TEST_CASE("json lists terms sorted by (k+l, l, k)") {
    BivariatePoly p;
    p.add_term(0, 1, 2);
    p.add_term(2, 0, 2);
    p.add_term(1, 0, 7);
    p.add_term(0, 0, 6);
    p.add_term(1, 1, 1);
    CHECK(p.to_json() == "[[0,0,6],[1,0,7],[0,1,2],[2,0,2],[1,1,1]]");
}
