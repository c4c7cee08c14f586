#include "doctest.h"

#include <random>
#include <vector>

#include "fanobound/quadric.hpp"

using fanobound::bigint;
using fanobound::monomial_map;
using fanobound::multipoly;
using fanobound::quadric_form;
using fanobound::rational;

namespace {

// Independent rank oracle: plain Gaussian elimination over the rationals.
int rational_rank(std::vector<std::vector<rational>> m) {
    const std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
    int rank = 0;
    for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows; ++col) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[static_cast<std::size_t>(rank)], m[pivot]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == static_cast<std::size_t>(rank) || m[r][col].is_zero()) continue;
            const rational f = m[r][col] / m[static_cast<std::size_t>(rank)][col];
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] -= f * m[static_cast<std::size_t>(rank)][c];
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<rational>> random_invertible(std::mt19937& rng, std::size_t size) {
    std::uniform_int_distribution<long long> entry(-3, 3);
    while (true) {
        std::vector<std::vector<rational>> p(size, std::vector<rational>(size));
        for (auto& row : p)
            for (auto& v : row) v = rational(entry(rng));
        if (rational_rank(p) == static_cast<int>(size)) return p;
    }
}

// P^T A P for the congruence-invariance property.
std::vector<std::vector<rational>> congruent(const std::vector<std::vector<rational>>& a,
                                             const std::vector<std::vector<rational>>& p) {
    const std::size_t size = a.size();
    std::vector<std::vector<rational>> ap(size, std::vector<rational>(size)),
        out(size, std::vector<rational>(size));
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            for (std::size_t k = 0; k < size; ++k) ap[i][j] += a[i][k] * p[k][j];
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            for (std::size_t k = 0; k < size; ++k) out[i][j] += p[k][i] * ap[k][j];
    return out;
}

}  // namespace

TEST_CASE("rank parameter of diagonal and hyperbolic forms") {
    CHECK(quadric_form::sum_of_squares(4, 4).rank_k() == 4);

    // x0 x1 - x2 x3 in P^4: matrix rank 4, k = 3
    std::vector<std::vector<rational>> m(5, std::vector<rational>(5));
    m[0][1] = m[1][0] = rational(bigint(1), bigint(2));
    m[2][3] = m[3][2] = rational(bigint(-1), bigint(2));
    const quadric_form hyper(4, m);
    CHECK(hyper.rank_k() == 3);
    CHECK(hyper.form_polynomial().str() == "x0*x1 - x2*x3");
}

TEST_CASE("zero form is degenerate input") {
    const quadric_form zero(3, std::vector<std::vector<rational>>(4, std::vector<rational>(4)));
    CHECK(zero.is_zero());
    CHECK_THROWS_AS(zero.rank_k(), fanobound::degenerate_input_error);
}

TEST_CASE("quadric form validation") {
    std::vector<std::vector<rational>> asym(3, std::vector<rational>(3));
    asym[0][1] = 1;
    CHECK_THROWS_AS(quadric_form(2, asym), fanobound::usage_error);
    CHECK_THROWS_AS(quadric_form(3, asym), fanobound::usage_error);  // wrong size
}

TEST_CASE("fraction-free rank agrees with a rational-elimination oracle") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<long long> entry(-4, 4), den(1, 3);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t size = 2 + trial % 5;
        std::vector<std::vector<rational>> m(size, std::vector<rational>(size));
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = i; j < size; ++j)
                m[i][j] = m[j][i] = rational(bigint(entry(rng)), bigint(den(rng)));
        const quadric_form q(static_cast<int>(size) - 1, m);
        CHECK(q.rank() == rational_rank(m));
    }
}

TEST_CASE("rank of deliberately degenerate forms (column-skipping path)") {
    std::mt19937 rng(90125);
    std::uniform_int_distribution<int> rank_pick(0, 5);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t size = 4 + trial % 3;
        const int target = std::min<int>(rank_pick(rng), static_cast<int>(size));
        std::vector<std::vector<rational>> d(size, std::vector<rational>(size));
        for (int i = 0; i < target; ++i) d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = i + 1;
        const auto p = random_invertible(rng, size);
        const auto m = congruent(d, p);
        const quadric_form q(static_cast<int>(size) - 1, m);
        CHECK(q.rank() == target);
        CHECK(q.rank() == rational_rank(m));
    }
}

TEST_CASE("rank is a congruence invariant") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t size = 3 + trial % 4;
        std::vector<std::vector<rational>> a(size, std::vector<rational>(size));
        std::uniform_int_distribution<long long> entry(-3, 3);
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = i; j < size; ++j) a[i][j] = a[j][i] = rational(entry(rng));
        const auto p = random_invertible(rng, size);
        const quadric_form qa(static_cast<int>(size) - 1, a);
        const quadric_form qb(static_cast<int>(size) - 1, congruent(a, p));
        CHECK(qa.rank() == qb.rank());
    }
}

TEST_CASE("decision: smooth quadrics of rank parameter >= 4 admit nothing") {
    const auto smooth_p5 = decide(quadric_form::sum_of_squares(5, 5));
    CHECK(!smooth_p5.admits);
    CHECK(smooth_p5.rank_k == 5);
    CHECK(!smooth_p5.witness.has_value());
    CHECK(smooth_p5.rule_id == "quadric-endo-rank");
    CHECK(smooth_p5.within_scope);
}

TEST_CASE("decision: low-rank cones admit power-map witnesses") {
    const auto cone = decide(quadric_form::sum_of_squares(5, 3), 2);
    CHECK(cone.admits);
    REQUIRE(cone.witness.has_value());
    CHECK(cone.witness->normal_form.str() == "x0*x1 - x2*x3");
    CHECK(cone.witness->quotient.str() == "x0*x1 + x2*x3");
    CHECK(cone.witness->component_degree == bigint(16));  // 2^(5-1)
    CHECK(!cone.witness->reducible);

    const auto pair_of_planes = decide(quadric_form::sum_of_squares(3, 1), 2);
    CHECK(pair_of_planes.admits);
    REQUIRE(pair_of_planes.witness.has_value());
    CHECK(pair_of_planes.witness->reducible);
    CHECK(pair_of_planes.witness->normal_form.str() == "x0*x1");
}

TEST_CASE("decision matches the rank criterion across small diagonal forms") {
    for (int n = 3; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) {
            const auto v = decide(quadric_form::sum_of_squares(n, k));
            CHECK(v.admits == (k <= 3));
            CHECK(v.witness.has_value() == v.admits);
        }
}

TEST_CASE("ambient dimension below 3 is flagged as out of scope") {
    const auto v = decide(quadric_form::sum_of_squares(2, 1));
    CHECK(!v.within_scope);
    CHECK(v.rule_id == "quadric-low-dimension-context");
    CHECK(v.admits);  // constructive direction only
}

TEST_CASE("witness degrees") {
    CHECK(fanobound::witness_for_k(3, 4, 2).component_degree == bigint(8));
    CHECK(fanobound::witness_for_k(2, 3, 3).component_degree == bigint(9));
    const auto w = fanobound::witness_for_k(1, 6, 2);
    CHECK(w.component_degree == bigint(32));
    CHECK(w.reducible);
    CHECK_THROWS_AS(fanobound::witness_for_k(4, 6, 2), fanobound::usage_error);
    CHECK_THROWS_AS(fanobound::witness_for_k(3, 2, 2), fanobound::usage_error);
}

TEST_CASE("invariance certificates for the three normal forms") {
    for (int k : {1, 2, 3}) {
        for (long long q : {2LL, 3LL, 5LL}) {
            const auto w = fanobound::witness_for_k(k, 4, q);
            const auto chk = verify_invariance(w.normal_form, w.map);
            REQUIRE(chk.invariant);
            REQUIRE(chk.quotient.has_value());
            CHECK(*chk.quotient * w.normal_form == w.map.pull_back(w.normal_form));
            CHECK(*chk.quotient == w.quotient);
        }
    }
    // the square-difference shape of the k = 2 quotient at q = 2
    const auto w2 = fanobound::witness_for_k(2, 4, 2);
    CHECK(w2.quotient.str() == "x0*x2 + x1^2");
    const auto w3 = fanobound::witness_for_k(3, 4, 2);
    CHECK(w3.quotient.str() == "x0*x1 + x2*x3");
}

TEST_CASE("diagonal forms of rank parameter >= 4 are never power-map invariant") {
    for (int n = 4; n <= 8; ++n) {
        for (int k = 4; k <= n; ++k) {
            // all sign patterns +-1 on the k+1 active diagonal entries, up to
            // flipping the overall sign
            for (int plus = 0; plus <= k + 1; ++plus) {
                std::vector<rational> diag(static_cast<std::size_t>(n) + 1);
                for (int idx = 0; idx <= k; ++idx)
                    diag[static_cast<std::size_t>(idx)] = idx < plus ? 1 : -1;
                const quadric_form q = quadric_form::diagonal(n, diag);
                REQUIRE(q.rank_k() == k);
                for (long long e : {2LL, 3LL}) {
                    const auto chk =
                        verify_invariance(q.form_polynomial(), monomial_map(e, n + 1));
                    CHECK(!chk.invariant);
                    REQUIRE(chk.remainder.has_value());
                    CHECK(!chk.remainder->is_zero());
                }
            }
        }
    }
}

TEST_CASE("verify_invariance usage errors") {
    CHECK_THROWS_AS(verify_invariance(multipoly(4), monomial_map(2, 4)), fanobound::usage_error);
    CHECK_THROWS_AS(monomial_map(1, 4), fanobound::usage_error);
}

TEST_CASE("pencil projection fixtures") {
    const std::vector<rational> lam{0, 1, 2, 3, 4, 5, 6};
    const auto q0 = pencil_projection(lam, 0);
    CHECK(q0.ambient_dim() == 5);
    CHECK(q0.rank() == 6);
    for (int idx = 0; idx < 6; ++idx)
        CHECK(q0.matrix()[static_cast<std::size_t>(idx)][static_cast<std::size_t>(idx)] ==
              rational(idx + 1));

    const auto q3 = pencil_projection(lam, 3);
    CHECK(q3.rank() == 6);
    const std::vector<rational> expect{-3, -2, -1, 1, 2, 3};
    for (std::size_t idx = 0; idx < 6; ++idx)
        CHECK(q3.matrix()[idx][idx] == expect[idx]);

    CHECK_THROWS_AS(fanobound::pencil_projection({0, 0, 1, 2}, 0), fanobound::usage_error);
    CHECK_THROWS_AS(fanobound::pencil_projection({0, 1, 2}, 0), fanobound::usage_error);
    CHECK_THROWS_AS(pencil_projection(lam, 9), fanobound::usage_error);
}

TEST_CASE("pencil projections of random distinct parameters have full rank") {
    std::mt19937 rng(2718);
    std::uniform_int_distribution<long long> num(-40, 40), den(1, 6), len(4, 9);
    int done = 0;
    while (done < 20) {
        const long long size = len(rng);
        std::vector<rational> lam;
        for (long long i = 0; i < size; ++i)
            lam.emplace_back(bigint(num(rng)), bigint(den(rng)));
        bool distinct = true;
        for (std::size_t i = 0; i < lam.size() && distinct; ++i)
            for (std::size_t j = i + 1; j < lam.size(); ++j)
                if (lam[i] == lam[j]) {
                    distinct = false;
                    break;
                }
        if (!distinct) continue;
        ++done;
        const std::size_t drop = static_cast<std::size_t>(num(rng) + 40) % lam.size();
        const auto q = pencil_projection(lam, drop);
        CHECK(q.rank() == static_cast<int>(lam.size()) - 1);
    }
}

TEST_CASE("gaussian substitutions carry the diagonal form to the normal forms") {
    for (int k : {1, 2, 3}) {
        const auto sub = fanobound::diagonal_to_normal_form(k);
        CHECK(sub.verified);
        CHECK(sub.matrix.size() == static_cast<std::size_t>(k) + 1);
        CHECK(sub.rules.size() == static_cast<std::size_t>(k) + 1);
    }
    CHECK(fanobound::diagonal_to_normal_form(1).target == "u0*u1");
    CHECK(fanobound::diagonal_to_normal_form(2).target == "u1^2 - u0*u2");
    CHECK(fanobound::diagonal_to_normal_form(3).target == "u0*u1 - u2*u3");
    CHECK_THROWS_AS(fanobound::diagonal_to_normal_form(0), fanobound::usage_error);
    CHECK_THROWS_AS(fanobound::diagonal_to_normal_form(4), fanobound::usage_error);
}
