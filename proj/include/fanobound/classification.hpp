#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fanobound/chern.hpp"
#include "fanobound/errors.hpp"
#include "fanobound/rational.hpp"
#include "fanobound/rules.hpp"
#include "fanobound/weighted_hypersurface.hpp"

namespace fanobound {

// Classification tables and the arithmetic facts around them, embedded as
// code-reviewed static data with one rule citation per row.  Rows whose
// backing proofs have no computational content are pure citations and are
// marked "cited, not computed"; the weighted-hypersurface rows are instead
// cross-checked against the chern engine.

// ---------------------------------------------------------------------------
// del Pezzo table

struct del_pezzo_entry {
    int n = 0;
    int d = 0;  // degree H^n, 1..7
    std::string description;
    std::optional<weighted_hypersurface> wps_model;  // present for d in {1,2,3}
    std::optional<std::string> ci_model;             // present for d = 4
    bool picard_one = false;   // iff d <= 5
    bool very_ample_h = false; // iff d >= 3
    std::string rule_id = "del-pezzo-classification";
};

inline del_pezzo_entry del_pezzo_lookup(int n, int d) {
    if (n < 3 || n > 10000)
        throw usage_error("del_pezzo_lookup: dimension must be in [3, 10^4]");
    if (d < 1 || d > 7) throw usage_error("del_pezzo_lookup: degree must be in 1..7");
    if (d == 5 && n > 6)
        throw table_error("del_pezzo_lookup: degree 5 requires n <= 6");
    if (d == 6 && n > 4)
        throw table_error("del_pezzo_lookup: degree 6 requires n <= 4");
    if (d == 7 && n != 3)
        throw table_error("del_pezzo_lookup: degree 7 requires n = 3 (blow-up of a point on P^3)");

    del_pezzo_entry e;
    e.n = n;
    e.d = d;
    e.picard_one = d <= 5;
    e.very_ample_h = d >= 3;
    const std::string np1 = std::to_string(n + 1);
    switch (d) {
        case 1: {
            std::vector<long long> w{3, 2};
            w.insert(w.end(), static_cast<std::size_t>(n), 1);
            e.wps_model = weighted_hypersurface(std::move(w), 6);
            e.description = "smooth weighted hypersurface of degree 6 in P(3,2,1^" +
                            std::to_string(n) + ")";
            break;
        }
        case 2: {
            std::vector<long long> w{2};
            w.insert(w.end(), static_cast<std::size_t>(n) + 1, 1);
            e.wps_model = weighted_hypersurface(std::move(w), 4);
            e.description =
                "smooth weighted hypersurface of degree 4 in P(2,1^" + np1 + ")";
            break;
        }
        case 3:
            e.wps_model = weighted_hypersurface::projective_hypersurface(n, 3);
            e.description = "smooth cubic hypersurface in P^" + np1;
            break;
        case 4:
            e.ci_model = "two smooth quadrics in P^" + std::to_string(n + 2);
            e.description =
                "smooth complete intersection of two quadrics in P^" + std::to_string(n + 2);
            break;
        case 5:
            e.description = "linear section of the Pluecker-embedded Gr(2,5) in P^9";
            break;
        case 6:
            e.description = n == 4 ? "P^2 x P^2"
                                   : "P(T_P^2) or P^1 x P^1 x P^1";
            break;
        default:  // d == 7, n == 3
            e.description = "blow-up of P^3 at one point";
            break;
    }
    return e;
}

/// Cross-check of a weighted-hypersurface table row against the chern
/// engine: coprimality and degree hypotheses, then the positivity margin.
struct wps_consistency_report {
    del_pezzo_entry entry;
    bool coprime_ok = false;
    bool degree_ok = false;  // d >= a_0 + a_1 + 1
    positivity_result positivity;
};

inline wps_consistency_report del_pezzo_wps_consistency(int n, int d) {
    if (d < 1 || d > 3)
        throw usage_error("del_pezzo_wps_consistency: only the weighted-hypersurface rows "
                          "d in {1, 2, 3} are checkable");
    wps_consistency_report r{del_pezzo_lookup(n, d), false, false, {}};
    const weighted_hypersurface& x = *r.entry.wps_model;
    r.coprime_ok = std::gcd(x.weight(0), x.weight(1)) == 1;
    r.degree_ok = x.degree() >= x.weight(0) + x.weight(1) + 1;
    r.positivity = wps_positivity(x);
    return r;
}

// ---------------------------------------------------------------------------
// Lines and normal bundles

struct splitting_types {
    int n = 0;
    std::vector<std::vector<int>> types;  // non-increasing, entries in [-1, 1], sum n-3
    std::string context = "degree >= 3, so the fundamental divisor is very ample and lines "
                          "are projective lines";
    std::string rule_id = "del-pezzo-lines-two-kinds";
};

namespace detail {

inline void enumerate_non_increasing(int length, int lo, int hi, int target_sum,
                                     std::vector<int>& prefix,
                                     std::vector<std::vector<int>>& out) {
    if (length == 0) {
        if (target_sum == 0) out.push_back(prefix);
        return;
    }
    // remaining entries are bounded by [lo, hi], so prune on the achievable sum
    for (int v = std::min(hi, prefix.empty() ? hi : prefix.back()); v >= lo; --v) {
        const int rest = target_sum - v;
        if (rest > (length - 1) * std::min(hi, v) || rest < (length - 1) * lo) continue;
        prefix.push_back(v);
        enumerate_non_increasing(length - 1, lo, std::min(hi, v), rest, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace detail

/// Normal-bundle splitting types of lines on a del Pezzo n-fold of degree
/// >= 3: non-increasing integer vectors of length n-1 with entries <= 1 and
/// sum n-3.  The conormal-sequence argument also bounds entries below by
/// -1; with both bounds the enumeration returns exactly the two kinds
/// O^2 + O(1)^(n-3) and O(-1) + O(1)^(n-2).
inline splitting_types splitting_types_del_pezzo(int n) {
    if (n < 3 || n > 10000)
        throw usage_error("splitting_types_del_pezzo: dimension must be in [3, 10^4]");
    splitting_types s;
    s.n = n;
    std::vector<int> prefix;
    detail::enumerate_non_increasing(n - 1, -1, 1, n - 3, prefix, s.types);
    std::sort(s.types.begin(), s.types.end());  // first kind before second kind
    return s;
}

/// Candidate splitting degrees for a line on an index-1 Fano n-fold: length
/// n-1, entries <= 1, sum -1.  Enumerated over entries >= min_entry so the
/// arithmetic content (a negative sum forces a negative summand) is
/// checkable on a finite window.
inline std::vector<std::vector<int>> index1_splitting_candidates(int n, int min_entry) {
    if (n < 3 || n > 64)
        throw usage_error("index1_splitting_candidates: dimension must be in [3, 64]");
    if (min_entry > -1 || min_entry < -64)
        throw usage_error("index1_splitting_candidates: window must include -1 and stay in [-64, -1]");
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    detail::enumerate_non_increasing(n - 1, min_entry, 1, -1, prefix, out);
    return out;
}

/// p = index * (H . C) - 2, the dimension of the tangent variety of a
/// standard rational curve C; valid iff 0 <= p (and p <= n-1 when a
/// dimension is supplied).
struct standard_p_result {
    long long p = 0;
    bool valid = false;
    std::optional<std::string> note;
    std::string rule_id = "standard-splitting-p";
};

inline standard_p_result standard_p(long long index, long long h_dot,
                                    std::optional<long long> dimension = std::nullopt) {
    if (index < 1 || index > 1000000000)
        throw usage_error("standard_p: index must be in [1, 10^9]");
    if (h_dot < 1 || h_dot > 1000000000)
        throw usage_error("standard_p: H . C must be in [1, 10^9]");
    standard_p_result r;
    r.p = index * h_dot - 2;
    r.valid = r.p >= 0 && (!dimension || r.p <= *dimension - 1);
    if (r.p == 2 && (!dimension || *dimension == 4))
        r.note = "p = 2 on a fourfold of Picard number 1 forces a smooth quadric "
                 "(external characterization; cited, not computed)";
    if (r.p < 0)
        r.note = "no standard curve of this degree: the normal-bundle degrees sum to " +
                 std::to_string(r.p) + " < 0, forcing a negative summand";
    return r;
}

// ---------------------------------------------------------------------------
// Index facts

struct index_facts_result {
    int n = 0;
    int r = 0;
    std::optional<std::string> kobayashi_ochiai;  // set when r = n+1 or r = n
    bool rho_one_forced = false;                  // 2r > n + 2
    std::vector<std::string> rho_ge2_candidates;
    std::vector<std::string> rule_ids;
};

inline index_facts_result index_facts(int n, int r) {
    if (n < 1 || r < 1) throw usage_error("index_facts: n and r must be >= 1");
    if (r > n + 1)
        throw hypothesis_error("index_facts: impossible index: r <= n + 1 is required");
    index_facts_result f;
    f.n = n;
    f.r = r;
    f.rule_ids.push_back("kobayashi-ochiai-index-bound");
    if (r == n + 1)
        f.kobayashi_ochiai = "projective " + std::to_string(n) + "-space";
    else if (r == n)
        f.kobayashi_ochiai = "smooth quadric Q^" + std::to_string(n);
    f.rho_one_forced = 2 * r > n + 2;

    const std::string rs = std::to_string(r);
    if (2 * r == n + 2) {
        f.rho_ge2_candidates.push_back("P^" + std::to_string(r - 1) + " x P^" +
                                       std::to_string(r - 1));
        f.rule_ids.push_back("index-reduction");
    } else if (2 * r == n + 1) {
        f.rho_ge2_candidates = {
            "P_{P^" + rs + "}(O(2) + O(1)^" + std::to_string(r - 1) + ")",
            "P(T_{P^" + rs + "})",
            "P^" + std::to_string(r - 1) + " x Q^" + rs,
        };
        f.rule_ids.push_back("index-reduction");
    } else if (n == 2 * r && n >= 6) {
        const std::string rp1 = std::to_string(r + 1);
        f.rho_ge2_candidates = {
            "P^2 x P^2 x P^2",
            "V_d x P^" + std::to_string(r - 1) + " (V_d a del Pezzo " + rp1 + "-fold)",
            "P_{P^" + rp1 + "}(O(2)^2 + O(1)^" + std::to_string(r - 2) + ")",
            "P_{P^" + rp1 + "}(O(3) + O(1)^" + std::to_string(r - 1) + ")",
            "P_{Q^" + rp1 + "}(O(2) + O(1)^" + std::to_string(r - 1) + ")",
        };
        if (r == 3) f.rho_ge2_candidates.push_back("P_{Q^4}(spinor(1) + O(1))");
        f.rho_ge2_candidates.push_back("quadric bundle of relative degree 2 over a base of dimension " +
                                       rs);
        f.rho_ge2_candidates.push_back("blow-up of Q^" + std::to_string(2 * r) +
                                       " along a linear P^" + std::to_string(r - 1));
        f.rho_ge2_candidates.push_back("intersection of two (1,1)-divisors in P^" + rp1 +
                                       " x P^" + rp1);
        f.rule_ids.push_back("middle-index-classification");
    }
    return f;
}

// ---------------------------------------------------------------------------
// Mukai table

struct mukai_entry {
    int genus = 0;
    std::string description;
    std::string rule_id = "mukai-genus-facts";
};

inline mukai_entry mukai_lookup(int g) {
    if (g < 2 || g > 12 || g == 11)
        throw usage_error("mukai_lookup: genus must satisfy 2 <= g <= 12 and g != 11");
    mukai_entry e;
    e.genus = g;
    switch (g) {
        case 2: e.description = "degree-6 hypersurface in P(3,1^(n+1))"; break;
        case 3:
            e.description = "quartic hypersurface in P^(n+1), or a double cover of a smooth "
                            "quadric";
            break;
        case 4: e.description = "complete intersection of a quadric and a cubic in P^(n+2)"; break;
        default: e.description = "not encoded here (genus >= 5)"; break;
    }
    return e;
}

// ---------------------------------------------------------------------------
// Ramification arithmetic

/// Tests the ramification contradiction mechanism: if every component of
/// f^*D has multiplicity >= 2 then R_f >= (1/2) f^*D, so a q-polarized f
/// would need (q-1) * index >= (1/2) q * lambda.  That fails for every
/// integer q >= 2 exactly when lambda >= 2 * index.
struct ramification_result {
    bool contradiction_for_all_q = false;
    rational lhs_at_q2;  // (q-1) * index at q = 2
    rational rhs_at_q2;  // (1/2) q * lambda at q = 2
    std::string rule_id = "chern-degree-bound";
};

inline ramification_result ramification_contradiction(long long index, long long lambda) {
    if (index < 1 || index > 1000000000)
        throw usage_error("ramification_contradiction: index must be in [1, 10^9]");
    if (lambda < 1 || lambda > 1000000000)
        throw usage_error("ramification_contradiction: lambda must be in [1, 10^9]");
    ramification_result r;
    // (q-1) i < q lambda / 2 for all q >= 2 iff q (2i - lambda) < 2i for all
    // q >= 2 iff 2i - lambda <= 0.
    r.contradiction_for_all_q = lambda >= 2 * index;
    r.lhs_at_q2 = rational(index);
    r.rhs_at_q2 = rational(lambda);
    return r;
}

// ---------------------------------------------------------------------------
// Verdicts

enum class verdict_status {
    boundedness_holds,
    no_non_iso_endo,
    admits_endo,
    toric_iff_int_amplified,
    open_question,
};

inline const char* to_string(verdict_status s) {
    switch (s) {
        case verdict_status::boundedness_holds: return "BoundednessHolds";
        case verdict_status::no_non_iso_endo: return "NoNonIsoEndo";
        case verdict_status::admits_endo: return "AdmitsEndo";
        case verdict_status::toric_iff_int_amplified: return "ToricIffIntAmplified";
        default: return "OpenQuestion";
    }
}

struct fourfold_subject {  // Picard number 1 Fano fourfold
    int index = 0;
    std::optional<int> vmrt_dim;  // required when index = 1
};
struct del_pezzo_subject {
    int n = 0;
    int d = 0;
};
struct mukai_subject {
    int genus = 0;
};
struct quadric_subject {
    int ambient_dim = 0;
    int rank_k = 0;
};
struct fano_index_subject {
    int n = 0;
    int index = 0;
    int rho = 0;
};

using subject =
    std::variant<fourfold_subject, del_pezzo_subject, mukai_subject, quadric_subject,
                 fano_index_subject>;

struct verdict {
    std::string subject_text;
    verdict_status status = verdict_status::open_question;
    std::string rule_id;
    std::string rule_statement;
    std::optional<std::string> note;
};

namespace detail {

inline verdict make_verdict(std::string subject_text, verdict_status status,
                            std::string_view rule_id,
                            std::optional<std::string> note = std::nullopt) {
    const rule& r = find_rule(rule_id);
    return verdict{std::move(subject_text), status, std::string(r.id),
                   std::string(r.statement), std::move(note)};
}

inline verdict fourfold_verdict(const fourfold_subject& s) {
    const std::string text = "Fano fourfold, rho = 1, index " + std::to_string(s.index) +
                             (s.vmrt_dim ? ", VMRT dim " + std::to_string(*s.vmrt_dim) : "");
    if (s.index > 5)
        throw hypothesis_error("verdict: impossible index: a fourfold has index <= 5");
    if (s.index < 1) throw usage_error("verdict: a fourfold index must be >= 1");
    if (s.index == 5)
        return make_verdict(text, verdict_status::admits_endo, "projective-space-power-maps",
                            "index 5 forces P^4; power maps give endomorphisms of every "
                            "degree q^4");
    if (s.index >= 2)
        return make_verdict(text, verdict_status::boundedness_holds,
                            "fourfold-index-ge2-bounded", "cited, not computed");
    if (!s.vmrt_dim)
        throw usage_error(
            "verdict: an index-1 fourfold subject needs its VMRT dimension (0..3)");
    switch (*s.vmrt_dim) {
        case 0:
            return make_verdict(text, verdict_status::boundedness_holds,
                                "fourfold-index1-vmrt0-bounded", "cited, not computed");
        case 1:
            return make_verdict(text, verdict_status::open_question,
                                "fourfold-index1-vmrt1-open");
        case 2:
            throw usage_error("verdict: VMRT dim 2 forces -K.C = 4, i.e. a smooth quadric of "
                              "index 4, contradicting index 1");
        case 3:
            throw usage_error("verdict: VMRT dim 3 forces -K.C = 5, i.e. P^4 of index 5, "
                              "contradicting index 1");
        default:
            throw usage_error("verdict: VMRT dimension must be in 0..3");
    }
}

}  // namespace detail

/// Verdict for a supported descriptor.  Every verdict carries exactly one
/// rule citation, resolvable in the rule table.
inline verdict verdict_for(const subject& s) {
    using detail::make_verdict;
    if (const auto* f = std::get_if<fourfold_subject>(&s)) return detail::fourfold_verdict(*f);
    if (const auto* dp = std::get_if<del_pezzo_subject>(&s)) {
        const del_pezzo_entry e = del_pezzo_lookup(dp->n, dp->d);  // validates the row
        const std::string text =
            "del Pezzo " + std::to_string(dp->n) + "-fold of degree " + std::to_string(dp->d);
        if (e.picard_one)
            return make_verdict(text, verdict_status::no_non_iso_endo, "del-pezzo-no-endo",
                                dp->d <= 3 ? std::optional<std::string>(
                                                 "positivity margin computable; see "
                                                 "del_pezzo_wps_consistency")
                                           : std::optional<std::string>("cited, not computed"));
        return make_verdict(text, verdict_status::toric_iff_int_amplified, "middle-index-toric",
                            "rho >= 2 row of the del Pezzo table");
    }
    if (const auto* mk = std::get_if<mukai_subject>(&s)) {
        const mukai_entry e = mukai_lookup(mk->genus);  // validates the genus
        const std::string text = "Mukai manifold of genus " + std::to_string(mk->genus) +
                                 " (" + e.description + ")";
        if (mk->genus <= 4)
            return make_verdict(text, verdict_status::boundedness_holds, "mukai-genus-facts",
                                "cited, not computed");
        return make_verdict(text, verdict_status::open_question, "mukai-genus-facts");
    }
    if (const auto* q = std::get_if<quadric_subject>(&s)) {
        if (q->rank_k < 1 || q->rank_k > q->ambient_dim)
            throw usage_error("verdict: a quadric subject needs 1 <= k <= ambient dimension");
        const std::string text = "quadric of rank parameter k = " + std::to_string(q->rank_k) +
                                 " in P^" + std::to_string(q->ambient_dim);
        if (q->rank_k >= 4)
            return make_verdict(text, verdict_status::no_non_iso_endo, "quadric-endo-rank");
        return make_verdict(text, verdict_status::admits_endo, "quadric-endo-rank",
                            "power-map witness constructible via the quadric module");
    }
    const auto& fi = std::get<fano_index_subject>(s);
    if (fi.n < 2 || fi.index < 1 || fi.rho < 1)
        throw usage_error("verdict: a Fano index subject needs n >= 2, index >= 1, rho >= 1");
    if (fi.index > fi.n + 1)
        throw hypothesis_error("verdict: impossible index: r <= n + 1 is required");
    const std::string text = "Fano " + std::to_string(fi.n) + "-fold, index " +
                             std::to_string(fi.index) + ", rho = " + std::to_string(fi.rho);
    if (fi.rho >= 2) {
        if (fi.index >= (fi.n + 1) / 2)  // index >= floor((n+1)/2)
            return make_verdict(text, verdict_status::toric_iff_int_amplified,
                                "middle-index-toric");
        throw hypothesis_error(
            "verdict: hypothesis violated: index >= floor((dim+1)/2) is required for the "
            "toric criterion");
    }
    if (fi.index == fi.n + 1)
        return make_verdict(text, verdict_status::admits_endo, "projective-space-power-maps");
    if (fi.index == fi.n && fi.n >= 3)
        return make_verdict(text, verdict_status::no_non_iso_endo, "quadric-endo-rank",
                            "smooth quadric Q^" + std::to_string(fi.n) +
                                " has rank parameter k = " + std::to_string(fi.n + 1) +
                                " >= 4");
    if (fi.index == fi.n - 1 && fi.n >= 3)
        return make_verdict(text, verdict_status::no_non_iso_endo, "del-pezzo-no-endo");
    if (fi.n == 4)
        return detail::fourfold_verdict(fourfold_subject{fi.index, std::nullopt});
    throw usage_error(
        "verdict: unsupported descriptor; supported shapes: fourfold (rho = 1) with index "
        "and optional VMRT dim; del Pezzo (n, d); Mukai genus; quadric (ambient dim, k); "
        "Fano (n, index, rho)");
}

}  // namespace fanobound
