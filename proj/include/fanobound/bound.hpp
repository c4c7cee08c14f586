#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fanobound/errors.hpp"
#include "fanobound/invariants.hpp"
#include "fanobound/rational.hpp"

namespace fanobound {

// Degree bounds for finite morphisms f : Y -> X between n-folds of Picard
// number 1, driven by the twisted-cotangent inequality
//
//   deg(f) c_n(Omega_X(u H_X)) <= c_n(Omega_Y(u m H_Y)),   f^* H_X == m H_Y.
//
// Writing both sides through the Whitney twist sums and cancelling the i = n
// term turns feasibility of m into comparing a degree-n polynomial (left)
// against a degree-(n-1) polynomial (right); the left side has positive
// leading coefficient exactly when the positivity quantity below is > 0, so
// the feasible m form a finite set.

/// The positivity quantity c_n(Omega_X(u H_X)) - u^n H_X^n, computed as the
/// truncated sum over i = 0..n-1 of c_(n-i)(Omega_X) . H^i . u^i.
inline rational lhs_constant(const variety_invariants& x, long long u) {
    if (u < 0) throw usage_error("lhs_constant: u must be >= 0");
    const int n = x.dimension;
    rational acc, up = 1;
    for (int i = 0; i <= n - 1; ++i) {
        acc += x.chern_number(n - i) * up;
        up *= rational(u);
    }
    return acc;
}

/// c_n(Omega_X(u H)) as an intersection number: the full Whitney twist sum
/// over i = 0..n, whose i = n term is H^n u^n.
inline rational twisted_top_chern(const variety_invariants& x, const rational& u) {
    const int n = x.dimension;
    rational acc, up = 1;
    for (int i = 0; i <= n; ++i) {
        acc += (i < n ? x.chern_number(n - i) : x.h_power) * up;
        up *= u;
    }
    return acc;
}

enum class bound_status {
    bounded,
    no_compatible_morphism,  // m = 1 already infeasible under these hypotheses
};

struct bound_audit_row {
    long long m = 0;
    rational lhs;  // m^n H_Y^n (c_n(Omega_X(u H_X)) - u^n H_X^n)
    rational rhs;  // H_X^n sum_{i<n} c_(n-i)(Omega_Y) . H_Y^i (u m)^i
    bool feasible = false;
};

struct bound_result {
    bound_status status = bound_status::no_compatible_morphism;
    rational lhs_const;                 // > 0 by hypothesis
    bool gg_asserted = false;           // caller-asserted global generation flag
    long long m_max = 0;                // largest feasible pullback multiple
    bigint degree_bound;                // floor(m_max^n H_Y^n / H_X^n)
    std::vector<long long> feasible;    // the whole feasible set up to the cap
    std::vector<bound_audit_row> audit; // both polynomial evaluations per m
    long long scan_cap = 0;             // Cauchy-style bound on candidate m
};

/// Largest integer m >= 1 satisfying the inequality, found by exhaustive
/// integer scan up to an explicit Cauchy-style root bound of the difference
/// polynomial (no floating point anywhere).  The caller asserts that
/// Omega_X(u H_X) is globally generated outside finitely many points; the
/// flag is recorded, not verified.
inline bound_result degree_bound(const variety_invariants& x, const variety_invariants& y,
                                 long long u, bool gg_asserted) {
    if (x.dimension != y.dimension)
        throw usage_error("degree_bound: X and Y must have the same dimension");
    if (u < 1) throw usage_error("degree_bound: u must be >= 1");
    const int n = x.dimension;

    bound_result out;
    out.gg_asserted = gg_asserted;
    out.lhs_const = lhs_constant(x, u);
    if (!(out.lhs_const > rational(0)))
        throw hypothesis_error(
            "degree_bound: hypothesis violated: c_n(Omega_X(u H_X)) - u^n H_X^n > 0 required "
            "(got " + out.lhs_const.str() + ")");

    // LHS(m) = lead m^n, RHS(m) = sum rhs_coeff[i] m^i.
    const rational lead = y.h_power * out.lhs_const;
    std::vector<rational> rhs_coeff(static_cast<std::size_t>(n));
    {
        rational up = 1;
        for (int i = 0; i <= n - 1; ++i) {
            rhs_coeff[static_cast<std::size_t>(i)] = x.h_power * y.chern_number(n - i) * up;
            up *= rational(u);
        }
    }

    // Cauchy bound: every root of LHS - RHS has |m| <= 1 + max_i |rhs_coeff[i]| / lead.
    rational max_ratio;
    for (const rational& b : rhs_coeff) {
        const rational ratio = b.abs() / lead;
        if (ratio > max_ratio) max_ratio = ratio;
    }
    const bigint cap_big = (rational(1) + max_ratio).ceil() + 1;
    if (cap_big > 1000000)
        throw usage_error("degree_bound: scan cap " + cap_big.str() +
                          " exceeds the supported exhaustive-search range");
    const long long cap = cap_big.convert_to<long long>();
    out.scan_cap = cap < 2 ? 2 : cap;

    for (long long m = 1; m <= out.scan_cap; ++m) {
        bound_audit_row row;
        row.m = m;
        row.lhs = rational(m).pow(static_cast<unsigned long long>(n)) * lead;
        rational up = 1;
        for (int i = 0; i <= n - 1; ++i) {
            row.rhs += rhs_coeff[static_cast<std::size_t>(i)] * up;
            up *= rational(m);
        }
        row.feasible = row.lhs <= row.rhs;
        if (row.feasible) out.feasible.push_back(m);
        out.audit.push_back(std::move(row));
    }

    if (out.feasible.empty()) {
        out.status = bound_status::no_compatible_morphism;
        return out;
    }
    out.status = bound_status::bounded;
    out.m_max = out.feasible.back();
    const rational nb =
        rational(bigint(out.m_max)).pow(static_cast<unsigned long long>(n)) * y.h_power /
        x.h_power;
    out.degree_bound = nb.floor();
    return out;
}

struct arv_check {
    bool holds = false;
    rational lhs;  // deg(f) c_n(Omega_X(u H_X))
    rational rhs;  // c_n(Omega_Y(u m H_Y))
};

/// Evaluates deg(f) c_n(Omega_X(u H_X)) <= c_n(Omega_Y(u m H_Y)) for a
/// hypothetical morphism with pullback multiple m and degree deg.  The pair
/// must satisfy deg . H_X^n == m^n . H_Y^n.
inline arv_check arv_inequality_check(const variety_invariants& x, const variety_invariants& y,
                                      long long u, long long m, const bigint& deg) {
    if (x.dimension != y.dimension)
        throw usage_error("arv_inequality_check: X and Y must have the same dimension");
    if (u < 1 || m < 1 || deg < 1)
        throw usage_error("arv_inequality_check: u, m and deg must be >= 1");
    const int n = x.dimension;
    if (rational(deg) * x.h_power !=
        rational(bigint(m)).pow(static_cast<unsigned long long>(n)) * y.h_power)
        throw usage_error(
            "arv_inequality_check: incompatible (deg, m): deg * H_X^n must equal m^n * H_Y^n");
    arv_check out;
    out.lhs = rational(deg) * twisted_top_chern(x, rational(u));
    out.rhs = twisted_top_chern(y, rational(u) * rational(m));
    out.holds = out.lhs <= out.rhs;
    return out;
}

}  // namespace fanobound
