#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fanobound/errors.hpp"
#include "fanobound/rational.hpp"
#include "fanobound/trunc_series.hpp"
#include "fanobound/weighted_hypersurface.hpp"

namespace fanobound {

// Chern data of the twisted cotangent sheaf Omega_X(a) of a smooth weighted
// hypersurface, computed two independent ways: a truncated-series expansion
// of the defining quotient of linear factors, and a residue closed form for
// the top coefficient.  Everything is an exact rational multiple of powers
// of the hyperplane class h.

/// Total Chern class of Omega_X(twist) as a series in h modulo h^(n+1):
///
///   prod_i (1 + (twist - a_i) h)  /  ((1 + (twist - d) h) (1 + twist h)).
///
/// The series path is a total function of the input: it is defined for any
/// positive weight vector and any integer twist.
inline trunc_series total_chern_series(const weighted_hypersurface& x, long long twist) {
    if (twist < -weighted_hypersurface::max_weight || twist > weighted_hypersurface::max_weight)
        throw usage_error("total_chern_series: twist must be in [-10^9, 10^9]");
    const std::size_t n = static_cast<std::size_t>(x.dim());
    trunc_series s = trunc_series::one(n);
    for (long long w : x.weights())
        s = s * trunc_series::linear_unit(n, rational(twist - w));
    s = s * trunc_series::linear_unit(n, rational(twist - x.degree())).inverse();
    s = s * trunc_series::linear_unit(n, rational(twist)).inverse();
    return s;
}

namespace detail {

inline void require_coprime_pair_shape(const weighted_hypersurface& x, const char* what) {
    const validation_report v = validate(x, false);
    if (!v.well_formed)
        throw hypothesis_error(std::string(what) + ": hypothesis violated: X must be well-formed");
    if (!v.dimension_ok)
        throw hypothesis_error(std::string(what) + ": hypothesis violated: dim(X) >= 2 required");
    if (!v.coprime_pair_weights)
        throw hypothesis_error(std::string(what) +
                               ": hypothesis violated: weights must be (a_0, a_1, 1, ..., 1) "
                               "with gcd(a_0, a_1) = 1");
}

}  // namespace detail

/// Top Chern coefficient of Omega_X(a) in closed form, valid for d != a and
/// a != 0 (the three simple poles of the residue form must exist):
///
///   [d prod(a - a_i) - a prod(d - a_i) + (-1)^(n+1) (d - a) prod(a_i)] / [a d (a - d)].
///
/// Returns the coefficient of h^n; multiply by the hyperplane power to get
/// the Chern number.  The formula is deliberately rejected (rather than
/// patched by limits) outside its stated range; the series path is the
/// total function.
inline rational top_chern_residue(const weighted_hypersurface& x, long long twist) {
    detail::require_coprime_pair_shape(x, "top_chern_residue");
    if (twist < -weighted_hypersurface::max_weight || twist > weighted_hypersurface::max_weight)
        throw usage_error("top_chern_residue: twist must be in [-10^9, 10^9]");
    const long long d = x.degree();
    if (twist == 0)
        throw formula_inapplicable_error(
            "top_chern_residue: closed form requires twist != 0; use the series path");
    if (twist == d)
        throw formula_inapplicable_error(
            "top_chern_residue: closed form requires degree != twist; use the series path");
    const int n = x.dim();
    bigint prod_a = 1, prod_d = 1, prod_w = 1;
    for (long long w : x.weights()) {
        prod_a *= twist - w;
        prod_d *= d - w;
        prod_w *= w;
    }
    const bigint sign = (n % 2 == 0) ? -1 : 1;  // (-1)^(n+1)
    const bigint num = d * prod_a - twist * prod_d + sign * (d - twist) * prod_w;
    const bigint den = bigint(twist) * d * (twist - d);
    return rational(num, den);
}

/// The four residues of the Chern quotient form: three in closed form plus
/// the residue at 0, which is the h^n series coefficient computed on the
/// independent series path.  Their sum is exactly zero.
struct residue_decomposition {
    rational at_infinity;         // prod(a - a_i) / ((d - a) a)
    rational at_inv_d_minus_a;    // prod(d - a_i) / ((a - d) d)
    rational at_minus_inv_a;      // (-1)^(n+1) prod(a_i) / (a d)
    rational at_zero;             // h^n coefficient of the series
    rational sum() const { return at_infinity + at_inv_d_minus_a + at_minus_inv_a + at_zero; }
};

inline residue_decomposition residue_sum_check(const weighted_hypersurface& x, long long twist) {
    detail::require_coprime_pair_shape(x, "residue_sum_check");
    if (twist < -weighted_hypersurface::max_weight || twist > weighted_hypersurface::max_weight)
        throw usage_error("residue_sum_check: twist must be in [-10^9, 10^9]");
    const long long d = x.degree();
    if (twist == 0 || twist == d)
        throw formula_inapplicable_error(
            "residue_sum_check: requires twist != 0 and degree != twist");
    const int n = x.dim();
    bigint prod_a = 1, prod_d = 1, prod_w = 1;
    for (long long w : x.weights()) {
        prod_a *= twist - w;
        prod_d *= d - w;
        prod_w *= w;
    }
    const bigint sign = (n % 2 == 0) ? -1 : 1;  // (-1)^(n+1)
    residue_decomposition r;
    r.at_infinity = rational(prod_a, bigint(d - twist) * twist);
    r.at_inv_d_minus_a = rational(prod_d, bigint(twist - d) * d);
    r.at_minus_inv_a = rational(sign * prod_w, bigint(twist) * d);
    r.at_zero = total_chern_series(x, twist).coeff(static_cast<std::size_t>(n));
    return r;
}

/// Hyperplane self-intersection O_X(1)^n = d / prod(a_i); turns h^n
/// coefficients into intersection numbers.
inline rational hyperplane_power(const weighted_hypersurface& x) {
    if (!x.well_formed())
        throw hypothesis_error(
            "hyperplane_power: hypothesis violated: X must be well-formed");
    bigint prod_w = 1;
    for (long long w : x.weights()) prod_w *= w;
    return rational(bigint(x.degree()), prod_w);
}

/// Chern numbers c_j(Omega_X) . H^(n-j) for j = 1..n (untwisted cotangent
/// sheaf), from the a = 0 series times the hyperplane power.
inline std::vector<rational> chern_numbers(const weighted_hypersurface& x) {
    const rational hn = hyperplane_power(x);
    const trunc_series s = total_chern_series(x, 0);
    std::vector<rational> out;
    out.reserve(static_cast<std::size_t>(x.dim()));
    for (int j = 1; j <= x.dim(); ++j)
        out.push_back(s.coeff(static_cast<std::size_t>(j)) * hn);
    return out;
}

/// Chern data of Omega_X(twist) packaged for reporting.
struct chern_report {
    long long twist = 0;
    trunc_series series{0};
    rational top_coefficient;  // coefficient of h^n (equals series.coeff(n))
    rational h_power;          // O_X(1)^n, > 0
    rational top_number;       // top_coefficient * h_power
};

inline chern_report make_chern_report(const weighted_hypersurface& x, long long twist) {
    chern_report r;
    r.twist = twist;
    r.series = total_chern_series(x, twist);
    r.top_coefficient = r.series.coeff(static_cast<std::size_t>(x.dim()));
    r.h_power = hyperplane_power(x);
    r.top_number = r.top_coefficient * r.h_power;
    return r;
}

/// Positivity criterion at the distinguished twist a = a_0 + a_1: the
/// margin is the h^n coefficient minus (a_0 + a_1)^n, and it is strictly
/// positive whenever d >= a_0 + a_1 + 1 holds together with the coprime-pair
/// weight shape.
struct positivity_result {
    long long twist = 0;       // a_0 + a_1
    rational top_coefficient;  // h^n coefficient of the twisted class
    rational margin;           // top_coefficient - twist^n
    bool holds = false;        // margin > 0
};

inline positivity_result wps_positivity(const weighted_hypersurface& x) {
    detail::require_coprime_pair_shape(x, "wps_positivity");
    const long long a = x.weight(0) + x.weight(1);
    if (x.degree() < a + 1)
        throw hypothesis_error(
            "wps_positivity: hypothesis violated: d >= a_0 + a_1 + 1 required (d = " +
            std::to_string(x.degree()) + ", a_0 + a_1 + 1 = " + std::to_string(a + 1) + ")");
    positivity_result r;
    r.twist = a;
    r.top_coefficient = top_chern_residue(x, a);
    r.margin = r.top_coefficient - rational(a).pow(static_cast<unsigned long long>(x.dim()));
    r.holds = r.margin > rational(0);
    return r;
}

/// g(x) = a (x-1)^n - x (a-1)^n - (x - a); strictly increasing for
/// x >= a + 1 and positive at x = a + 1 (drives the positivity proof).
inline rational g_value(long long a, long long n, long long x) {
    if (a < 2 || a > 1000000000) throw usage_error("g_value: a must be in [2, 10^9]");
    if (n < 2 || n > 1000000) throw usage_error("g_value: n must be in [2, 10^6]");
    if (x < -1000000000 || x > 1000000000)
        throw usage_error("g_value: x must be in [-10^9, 10^9]");
    const bigint first = bigint(a) * int_pow(bigint(x - 1), static_cast<unsigned long long>(n));
    const bigint second = bigint(x) * int_pow(bigint(a - 1), static_cast<unsigned long long>(n));
    return rational(first - second - (x - a));
}

enum class gg_status {
    globally_generated,
    gg_away_from_finite_points,
};

inline const char* to_string(gg_status s) {
    return s == gg_status::globally_generated ? "globally-generated"
                                              : "globally-generated-away-from-finite-points";
}

/// Global generation of Omega_X(a_0 + a_1): globally generated iff a_1 = 1,
/// otherwise globally generated away from finitely many points.
inline gg_status gg_classify(const weighted_hypersurface& x) {
    detail::require_coprime_pair_shape(x, "gg_classify");
    return x.weight(1) == 1 ? gg_status::globally_generated
                            : gg_status::gg_away_from_finite_points;
}

}  // namespace fanobound
