#include "doctest.h"

#include <optional>
#include <random>

#include "fanobound/gaussian.hpp"
#include "fanobound/multipoly.hpp"

using fanobound::exponent_vec;
using fanobound::gaussian_rational;
using fanobound::multipoly;
using fanobound::poly_divides;
using fanobound::rational;

namespace {

multipoly var(std::size_t n, std::size_t i) { return multipoly::variable(n, i); }

multipoly random_poly(std::mt19937& rng, std::size_t nvars, int max_terms) {
    std::uniform_int_distribution<int> coeff(-4, 4), exp(0, 2),
        terms(1, max_terms);
    multipoly p(nvars);
    const int t = terms(rng);
    for (int i = 0; i < t; ++i) {
        exponent_vec e(nvars);
        for (auto& x : e) x = static_cast<unsigned>(exp(rng));
        p.add_term(std::move(e), rational(coeff(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("graded-lex leading terms and canonical rendering") {
    const auto f = var(4, 0) * var(4, 1) - var(4, 2) * var(4, 3);
    CHECK(f.str() == "x0*x1 - x2*x3");
    CHECK(f.leading_term().first == exponent_vec{1, 1, 0, 0});

    const auto g = var(3, 1) * var(3, 1) - var(3, 0) * var(3, 2);
    // x0*x2 beats x1^2 in graded-lex
    CHECK(g.str() == "-x0*x2 + x1^2");
    CHECK(g.degree() == 2);
}

TEST_CASE("exact division: the hyperbolic normal form divides its power pullback") {
    const auto f = var(4, 0) * var(4, 1) - var(4, 2) * var(4, 3);
    const auto g = f.power_substitute(2);  // x0^2 x1^2 - x2^2 x3^2
    const auto q = poly_divides(f, g);
    REQUIRE(q.has_value());
    CHECK(q->str() == "x0*x1 + x2*x3");
    CHECK(*q * f == g);
}

TEST_CASE("exact division: self-division yields 1") {
    const auto f = var(3, 1) * var(3, 1) - var(3, 0) * var(3, 2);
    const auto q = poly_divides(f, f);
    REQUIRE(q.has_value());
    CHECK(*q == multipoly::constant(3, 1));
}

TEST_CASE("non-divisible pair leaves the expected remainder") {
    const auto f = var(4, 0) * var(4, 1) - var(4, 2) * var(4, 3);
    const auto g =
        var(4, 0) * var(4, 0) * var(4, 1) * var(4, 1) + var(4, 2) * var(4, 2) * var(4, 3) * var(4, 3);
    CHECK(!poly_divides(f, g).has_value());
    const auto dr = g.divide_by(f);
    CHECK(dr.remainder.str() == "2*x2^2*x3^2");
    CHECK(dr.quotient * f + dr.remainder == g);
}

TEST_CASE("division errors") {
    const multipoly zero(3);
    CHECK_THROWS_AS(poly_divides(zero, var(3, 0)), fanobound::usage_error);
    CHECK_THROWS_AS(zero.leading_term(), fanobound::usage_error);
    CHECK_THROWS_AS(var(3, 0) + var(2, 0), fanobound::usage_error);
}

TEST_CASE("power substitution scales exponents") {
    const auto f = var(3, 1) * var(3, 1) - var(3, 0) * var(3, 2);
    CHECK(f.power_substitute(3).str() == "-x0^3*x2^3 + x1^6");
    CHECK(f.power_substitute(1) == f);
    CHECK_THROWS_AS(f.power_substitute(0), fanobound::usage_error);
}

TEST_CASE("power substitution composes multiplicatively") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        const auto f = random_poly(rng, 3, 4);
        CHECK(f.power_substitute(6) == f.power_substitute(2).power_substitute(3));
        CHECK(f.power_substitute(6) == f.power_substitute(3).power_substitute(2));
    }
}

TEST_CASE("division invariant: g == q*f + r and no r-term is reducible") {
    std::mt19937 rng(11235);
    int done = 0;
    while (done < 80) {
        const auto f = random_poly(rng, 3, 3);
        const auto g = random_poly(rng, 3, 5);
        if (f.is_zero()) continue;
        ++done;
        const auto dr = g.divide_by(f);
        CHECK(dr.quotient * f + dr.remainder == g);
        for (const auto& [e, c] : dr.remainder.terms())
            CHECK(!fanobound::monomial_divides(f.leading_term().first, e));
    }
}

TEST_CASE("division recovers random quotients exactly") {
    std::mt19937 rng(4242);
    int done = 0;
    while (done < 60) {
        const auto f = random_poly(rng, 3, 3);
        const auto q = random_poly(rng, 3, 3);
        if (f.is_zero() || q.is_zero()) continue;
        ++done;
        const auto recovered = poly_divides(f, f * q);
        REQUIRE(recovered.has_value());
        CHECK(*recovered == q);
    }
}

TEST_CASE("gaussian rational arithmetic") {
    const gaussian_rational i = gaussian_rational::unit_i();
    CHECK(i * i == gaussian_rational(-1));
    const gaussian_rational z(rational(1), rational(2));  // 1 + 2i
    CHECK(z * z.conj() == gaussian_rational(z.norm()));
    CHECK(z / z == gaussian_rational(1));
    CHECK((z - z).is_zero());
    CHECK(z.str() == "1+2i");
    CHECK((gaussian_rational(0) - i).str() == "-i");
    CHECK(gaussian_rational(rational(3), rational(-2)).str() == "3-2i");
    CHECK_THROWS_AS(z / gaussian_rational(0), fanobound::usage_error);
}

TEST_CASE("polynomial arithmetic over the gaussian rationals") {
    using gpoly = fanobound::polynomial<gaussian_rational>;
    const gaussian_rational i = gaussian_rational::unit_i();
    // (x0 + i x1)(x0 - i x1) == x0^2 + x1^2
    gpoly a(2), b(2), expect(2);
    a.add_term({1, 0}, gaussian_rational(1));
    a.add_term({0, 1}, i);
    b.add_term({1, 0}, gaussian_rational(1));
    b.add_term({0, 1}, gaussian_rational(0) - i);
    expect.add_term({2, 0}, gaussian_rational(1));
    expect.add_term({0, 2}, gaussian_rational(1));
    CHECK(a * b == expect);
}
