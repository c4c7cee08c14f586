#include "doctest.h"

#include <random>

#include "fanobound/rational.hpp"

using fanobound::bigint;
using fanobound::rational;

TEST_CASE("rational is stored in lowest terms with positive denominator") {
    const rational a(bigint(6), bigint(-4));
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 2);
    const rational z(bigint(0), bigint(-7));
    CHECK(z.numerator() == 0);
    CHECK(z.denominator() == 1);
    CHECK(rational(bigint(21), bigint(14)) == rational(bigint(3), bigint(2)));
}

TEST_CASE("rational arithmetic is exact") {
    const rational third(bigint(1), bigint(3));
    CHECK(third + third + third == rational(1));
    CHECK(rational(1) / rational(3) * rational(3) == rational(1));
    CHECK(rational(bigint(1), bigint(2)) - rational(bigint(2), bigint(3)) ==
          rational(bigint(-1), bigint(6)));
    CHECK(-rational(bigint(5), bigint(10)) == rational(bigint(-1), bigint(2)));
    CHECK(rational(bigint(2), bigint(3)).pow(3) == rational(bigint(8), bigint(27)));
    CHECK(rational(-7).pow(0) == rational(1));
}

TEST_CASE("rational comparisons") {
    CHECK(rational(bigint(1), bigint(3)) < rational(bigint(1), bigint(2)));
    CHECK(rational(bigint(-1), bigint(2)) < rational(0));
    CHECK(rational(bigint(7), bigint(7)) == rational(1));
    CHECK(rational(2) > rational(bigint( 3), bigint(2)));
}

TEST_CASE("rational floor and ceil") {
    CHECK(rational(bigint(7), bigint(2)).floor() == 3);
    CHECK(rational(bigint(7), bigint(2)).ceil() == 4);
    CHECK(rational(bigint(-7), bigint(2)).floor() == -4);
    CHECK(rational(bigint(-7), bigint(2)).ceil() == -3);
    CHECK(rational(5).floor() == 5);
    CHECK(rational(5).ceil() == 5);
}

TEST_CASE("rational parse and str round-trip") {
    CHECK(rational::parse("10") == rational(10));
    CHECK(rational::parse("-3/6") == rational(bigint(-1), bigint(2)));
    CHECK(rational::parse("+4/2").str() == "2");
    CHECK(rational(bigint(-1), bigint(2)).str() == "-1/2");
    CHECK(rational(0).str() == "0");
    CHECK_THROWS_AS(rational::parse(""), fanobound::usage_error);
    CHECK_THROWS_AS(rational::parse("1/0"), fanobound::usage_error);
    CHECK_THROWS_AS(rational::parse("1/-2"), fanobound::usage_error);
    CHECK_THROWS_AS(rational::parse("a/b"), fanobound::usage_error);
    CHECK_THROWS_AS(rational::parse("1.5"), fanobound::usage_error);
}

TEST_CASE("rational error cases") {
    CHECK_THROWS_AS(rational(bigint(1), bigint(0)), fanobound::usage_error);
    CHECK_THROWS_AS(rational(1) / rational(0), fanobound::usage_error);
}

TEST_CASE("rational field laws on random small fractions") {
    std::mt19937 rng(20240517);
    std::uniform_int_distribution<long long> num(-30, 30), den(1, 12);
    for (int trial = 0; trial < 300; ++trial) {
        const rational a(bigint(num(rng)), bigint(den(rng)));
        const rational b(bigint(num(rng)), bigint(den(rng)));
        const rational c(bigint(num(rng)), bigint(den(rng)));
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a.denominator() > 0);
        CHECK(boost::multiprecision::gcd(a.numerator(), a.denominator()) == 1);
        if (!b.is_zero()) CHECK(a / b * b == a);
        CHECK(rational::parse(a.str()) == a);
    }
}
