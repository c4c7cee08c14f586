#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "fanobound/bound.hpp"
#include "fanobound/chern.hpp"
#include "fanobound/classification.hpp"
#include "fanobound/gaussian.hpp"
#include "fanobound/identities.hpp"
#include "fanobound/invariants.hpp"
#include "fanobound/multipoly.hpp"
#include "fanobound/quadric.hpp"
#include "fanobound/rational.hpp"
#include "fanobound/trunc_series.hpp"
#include "fanobound/weighted_hypersurface.hpp"

namespace fanobound {

// Canonical JSON encoders.  nlohmann::json keeps object keys sorted, so a
// serialized report is byte-stable; rationals are always "p/q" strings and
// nothing is ever a float.

using json = nlohmann::json;

inline json json_of(const rational& r) { return r.str(); }

inline json json_of(const std::vector<rational>& v) {
    json a = json::array();
    for (const rational& r : v) a.push_back(r.str());
    return a;
}

inline json json_of(const trunc_series& s) {
    return json{{"order", s.order()}, {"coeffs", json_of(s.coeffs())}, {"text", s.str()}};
}

inline json json_of(const multipoly& p) { return p.str(); }

inline json json_of(const weighted_hypersurface& x) {
    return json{{"weights", x.weights()}, {"degree", x.degree()}, {"dimension", x.dim()}};
}

inline json json_of(const validation_report& v) {
    return json{{"well_formed", v.well_formed},
                {"coprime_pair_weights", v.coprime_pair_weights},
                {"dimension_ok", v.dimension_ok},
                {"positivity_hypothesis", v.positivity_hypothesis},
                {"strict_ok", v.strict_ok},
                {"violations", v.violations}};
}

inline json json_of(const chern_report& r) {
    return json{{"twist", r.twist},
                {"series", json_of(r.series)},
                {"top_coefficient", r.top_coefficient.str()},
                {"h_power", r.h_power.str()},
                {"top_number", r.top_number.str()}};
}

inline json json_of(const residue_decomposition& r) {
    return json{{"at_infinity", r.at_infinity.str()},
                {"at_inv_d_minus_a", r.at_inv_d_minus_a.str()},
                {"at_minus_inv_a", r.at_minus_inv_a.str()},
                {"at_zero", r.at_zero.str()},
                {"sum", r.sum().str()}};
}

inline json json_of(const positivity_result& p) {
    return json{{"twist", p.twist},
                {"top_coefficient", p.top_coefficient.str()},
                {"margin", p.margin.str()},
                {"holds", p.holds}};
}

inline json json_of(const variety_invariants& v) {
    return json{{"dimension", v.dimension},
                {"h_power", v.h_power.str()},
                {"chern_numbers", json_of(v.chern)}};
}

inline json json_of(const bound_result& b) {
    json audit = json::array();
    for (const bound_audit_row& row : b.audit)
        audit.push_back(json{{"m", row.m},
                             {"lhs", row.lhs.str()},
                             {"rhs", row.rhs.str()},
                             {"feasible", row.feasible}});
    json j{{"status", b.status == bound_status::bounded ? "bounded" : "no-compatible-morphism"},
           {"lhs_constant", b.lhs_const.str()},
           {"gg_asserted", b.gg_asserted},
           {"feasible_m", b.feasible},
           {"scan_cap", b.scan_cap},
           {"audit", audit}};
    if (b.status == bound_status::bounded) {
        j["m_max"] = b.m_max;
        j["degree_bound"] = b.degree_bound.str();
    }
    return j;
}

inline json json_of(const quadric_form& q) {
    json rows = json::array();
    for (const auto& row : q.matrix()) {
        json r = json::array();
        for (const rational& v : row) r.push_back(v.str());
        rows.push_back(r);
    }
    return json{{"ambient_dim", q.ambient_dim()},
                {"matrix", rows},
                {"form", q.form_polynomial().str()},
                {"rank", q.rank()}};
}

inline json json_of(const endo_witness& w) {
    return json{{"normal_form", w.normal_form.str()},
                {"map", w.map.str()},
                {"exponent", w.map.exponent},
                {"component_degree", w.component_degree.str()},
                {"reducible", w.reducible},
                {"quotient", w.quotient.str()}};
}

inline json json_of(const endo_verdict& v) {
    json j{{"admits", v.admits},
           {"rank_k", v.rank_k},
           {"rule", v.rule_id},
           {"within_scope", v.within_scope}};
    if (v.witness) j["witness"] = json_of(*v.witness);
    return j;
}

inline json json_of(const invariance_check& c) {
    json j{{"invariant", c.invariant}};
    if (c.quotient) j["quotient"] = c.quotient->str();
    if (c.remainder) j["remainder"] = c.remainder->str();
    return j;
}

inline json json_of(const normal_form_substitution& s) {
    json rows = json::array();
    for (const auto& row : s.matrix) {
        json r = json::array();
        for (const gaussian_rational& g : row) r.push_back(g.str());
        rows.push_back(r);
    }
    return json{{"k", s.k},
                {"matrix", rows},
                {"rules", s.rules},
                {"target", s.target},
                {"verified", s.verified}};
}

inline json json_of(const del_pezzo_entry& e) {
    json j{{"n", e.n},
           {"d", e.d},
           {"description", e.description},
           {"picard_one", e.picard_one},
           {"very_ample_h", e.very_ample_h},
           {"rule", e.rule_id}};
    if (e.wps_model) j["wps_model"] = json_of(*e.wps_model);
    if (e.ci_model) j["ci_model"] = *e.ci_model;
    return j;
}

inline json json_of(const wps_consistency_report& r) {
    return json{{"entry", json_of(r.entry)},
                {"coprime_ok", r.coprime_ok},
                {"degree_ok", r.degree_ok},
                {"positivity", json_of(r.positivity)}};
}

inline json json_of(const splitting_types& s) {
    return json{{"n", s.n}, {"types", s.types}, {"context", s.context}, {"rule", s.rule_id}};
}

inline json json_of(const standard_p_result& r) {
    json j{{"p", r.p}, {"valid", r.valid}, {"rule", r.rule_id}};
    if (r.note) j["note"] = *r.note;
    return j;
}

inline json json_of(const index_facts_result& f) {
    json j{{"n", f.n},
           {"r", f.r},
           {"rho_one_forced", f.rho_one_forced},
           {"rho_ge2_candidates", f.rho_ge2_candidates},
           {"rules", f.rule_ids}};
    if (f.kobayashi_ochiai) j["kobayashi_ochiai"] = *f.kobayashi_ochiai;
    return j;
}

inline json json_of(const mukai_entry& e) {
    return json{{"genus", e.genus}, {"description", e.description}, {"rule", e.rule_id}};
}

inline json json_of(const ramification_result& r) {
    return json{{"contradiction_for_all_q", r.contradiction_for_all_q},
                {"lhs_at_q2", r.lhs_at_q2.str()},
                {"rhs_at_q2", r.rhs_at_q2.str()},
                {"rule", r.rule_id}};
}

inline json json_of(const verdict& v) {
    json j{{"subject", v.subject_text},
           {"status", to_string(v.status)},
           {"rule", v.rule_id},
           {"statement", v.rule_statement}};
    if (v.note) j["note"] = *v.note;
    return j;
}

inline json json_of(const identity_summary& s) {
    return json{{"hypersurfaces", s.hypersurfaces},
                {"oracle_checked", s.oracle_checked},
                {"oracle_skipped_formula_inapplicable", s.oracle_skipped},
                {"oracle_mismatches", s.oracle_mismatches},
                {"residue_checked", s.residue_checked},
                {"residue_failures", s.residue_failures},
                {"structure_checked", s.structure_checked},
                {"structure_failures", s.structure_failures},
                {"whitney_checked", s.whitney_checked},
                {"whitney_failures", s.whitney_failures},
                {"positivity_checked", s.positivity_checked},
                {"positivity_failures", s.positivity_failures},
                {"g_points", s.g_points},
                {"g_failures", s.g_failures},
                {"total_failures", s.total_failures()},
                {"counterexamples", s.counterexamples}};
}

}  // namespace fanobound
