#pragma once

#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "fanobound/chern.hpp"
#include "fanobound/errors.hpp"
#include "fanobound/rational.hpp"
#include "fanobound/trunc_series.hpp"
#include "fanobound/weighted_hypersurface.hpp"

namespace fanobound {

// Exhaustive desk-scale verification of the engine identities over the
// coprime-pair grid: residue closed form vs. series coefficient, the
// four-residue sum, series structure (constant term, h^1 coefficient),
// the Whitney twist identity, positivity margins, and the g-function
// inequalities.  Everything is exact; a single mismatch is a counterexample.

struct grid_options {
    int max_a0 = 6;   // weights (a_0, a_1, 1^n) with a_1 <= a_0, gcd(a_0, a_1) = 1
    int max_n = 10;   // dimension 2..max_n
    int min_d = 1;
    int max_d = 12;
    int max_twist = 6;            // twist set {1..max_twist}
    bool include_sum_twist = true;  // also twist a_0 + a_1
    bool run_g = true;
    int g_max_a = 20;
    int g_max_n = 10;
    int g_max_x = 50;
};

struct identity_summary {
    long long hypersurfaces = 0;
    long long oracle_checked = 0;
    long long oracle_skipped = 0;  // formula-inapplicable points (d == twist)
    long long oracle_mismatches = 0;
    long long residue_checked = 0;
    long long residue_failures = 0;
    long long structure_checked = 0;
    long long structure_failures = 0;
    long long whitney_checked = 0;
    long long whitney_failures = 0;
    long long positivity_checked = 0;
    long long positivity_failures = 0;
    long long g_points = 0;
    long long g_failures = 0;
    std::vector<std::string> counterexamples;  // at most a handful, for reports

    long long total_failures() const {
        return oracle_mismatches + residue_failures + structure_failures + whitney_failures +
               positivity_failures + g_failures;
    }
    bool all_passed() const { return total_failures() == 0; }
};

namespace detail {

inline void record(identity_summary& s, std::string what) {
    if (s.counterexamples.size() < 10) s.counterexamples.push_back(std::move(what));
}

}  // namespace detail

inline identity_summary run_identity_suite(const grid_options& opt) {
    identity_summary s;
    // documented caps: the grid must stay at desk scale
    if (opt.max_a0 < 1 || opt.max_a0 > 100 || opt.max_n < 2 || opt.max_n > 100 ||
        opt.min_d < 1 || opt.max_d < opt.min_d || opt.max_d > 1000 || opt.max_twist < 0 ||
        opt.max_twist > 1000)
        throw usage_error("run_identity_suite: grid bounds outside the documented caps "
                          "(a_0 <= 100, n <= 100, d <= 1000, twist <= 1000)");
    if (opt.run_g && (opt.g_max_a < 2 || opt.g_max_a > 1000 || opt.g_max_n < 2 ||
                      opt.g_max_n > 1000 || opt.g_max_x < 0 || opt.g_max_x > 10000))
        throw usage_error("run_identity_suite: g grid bounds outside the documented caps "
                          "(a <= 1000, n <= 1000, x <= 10^4)");

    for (int a0 = 1; a0 <= opt.max_a0; ++a0) {
        for (int a1 = 1; a1 <= a0; ++a1) {
            if (std::gcd(a0, a1) != 1) continue;
            for (int n = 2; n <= opt.max_n; ++n) {
                std::vector<long long> w{a0, a1};
                w.insert(w.end(), static_cast<std::size_t>(n), 1);
                for (long long d = opt.min_d; d <= opt.max_d; ++d) {
                    const weighted_hypersurface x(w, d);
                    ++s.hypersurfaces;
                    const trunc_series base = total_chern_series(x, 0);
                    const std::size_t nn = static_cast<std::size_t>(n);

                    // Structure: constant term 1, h^1 coefficient d - sum(a_i).
                    ++s.structure_checked;
                    if (base.coeff(0) != rational(1) ||
                        base.coeff(1) != rational(d - x.weight_sum())) {
                        ++s.structure_failures;
                        detail::record(s, x.str() + ": series structure check failed");
                    }

                    std::set<long long> twists;
                    if (opt.include_sum_twist) twists.insert(a0 + a1);
                    for (long long t = 1; t <= opt.max_twist; ++t) twists.insert(t);

                    for (long long a : twists) {
                        if (a == d || a == 0) {
                            ++s.oracle_skipped;
                            continue;
                        }
                        const trunc_series tw = total_chern_series(x, a);

                        // Oracle agreement: closed form == series coefficient.
                        ++s.oracle_checked;
                        const rational closed = top_chern_residue(x, a);
                        if (closed != tw.coeff(nn)) {
                            ++s.oracle_mismatches;
                            detail::record(s, x.str() + " twist " + std::to_string(a) +
                                                  ": residue " + closed.str() + " != series " +
                                                  tw.coeff(nn).str());
                        }

                        // Residue-theorem identity: the four residues sum to 0.
                        ++s.residue_checked;
                        if (!residue_sum_check(x, a).sum().is_zero()) {
                            ++s.residue_failures;
                            detail::record(s, x.str() + " twist " + std::to_string(a) +
                                                  ": residue sum nonzero");
                        }

                        // Whitney twist: [h^n] series(a) == sum_i [h^(n-i)] series(0) a^i.
                        ++s.whitney_checked;
                        rational acc, up = 1;
                        for (std::size_t i = 0; i <= nn; ++i) {
                            acc += base.coeff(nn - i) * up;
                            up *= rational(a);
                        }
                        if (acc != tw.coeff(nn)) {
                            ++s.whitney_failures;
                            detail::record(s, x.str() + " twist " + std::to_string(a) +
                                                  ": Whitney twist identity failed");
                        }
                    }

                    // Positivity on the qualifying part of the grid.
                    if (d >= a0 + a1 + 1) {
                        ++s.positivity_checked;
                        if (!wps_positivity(x).holds) {
                            ++s.positivity_failures;
                            detail::record(s, x.str() + ": positivity margin not > 0");
                        }
                    }
                }
            }
        }
    }

    if (opt.run_g) {
        for (long long a = 2; a <= opt.g_max_a; ++a) {
            for (long long n = 2; n <= opt.g_max_n; ++n) {
                // g(a+1) = a^(n+1) - (a+1)(a-1)^n - 1, and it is positive.
                ++s.g_points;
                const rational at_a1 = g_value(a, n, a + 1);
                const rational expected =
                    rational(int_pow(bigint(a), static_cast<unsigned long long>(n) + 1) -
                             (a + 1) * int_pow(bigint(a - 1), static_cast<unsigned long long>(n)) -
                             1);
                if (at_a1 != expected || !(at_a1 > rational(0))) {
                    ++s.g_failures;
                    detail::record(s, "g(a=" + std::to_string(a) + ", n=" + std::to_string(n) +
                                          ", a+1) check failed");
                }
                // Strict monotonicity for x >= a + 1.
                rational prev = at_a1;
                for (long long x = a + 2; x <= opt.g_max_x; ++x) {
                    ++s.g_points;
                    const rational cur = g_value(a, n, x);
                    if (!(cur > prev)) {
                        ++s.g_failures;
                        detail::record(s, "g not increasing at a=" + std::to_string(a) +
                                              ", n=" + std::to_string(n) +
                                              ", x=" + std::to_string(x));
                    }
                    prev = cur;
                }
            }
        }
    }
    return s;
}

}  // namespace fanobound
