#pragma once

#include <array>
#include <string>
#include <string_view>

#include "fanobound/errors.hpp"

namespace fanobound {

/// A row of the rule table: a stable identifier plus the mathematical
/// statement it stands for.  Every verdict and table entry cites exactly one
/// rule id, and ids are stable across releases.
struct rule {
    std::string_view id;
    std::string_view statement;
};

inline constexpr std::array<rule, 25> rule_table{{
    {"kobayashi-ochiai-index-bound",
     "the index of a Fano n-fold is at most n+1; index n+1 forces projective n-space and "
     "index n forces a smooth quadric"},
    {"del-pezzo-classification",
     "del Pezzo n-folds (n >= 3) have degree 1 <= d <= 7; Picard number 1 iff d <= 5; the "
     "fundamental divisor is very ample iff d >= 3"},
    {"del-pezzo-wps-models",
     "degree 1, 2, 3 del Pezzo n-folds are weighted hypersurfaces: degree 6 in P(3,2,1^n), "
     "degree 4 in P(2,1^(n+1)), degree 3 in P^(n+1)"},
    {"del-pezzo-no-endo",
     "a del Pezzo manifold of Picard number 1 admits no non-isomorphic surjective "
     "endomorphism"},
    {"fourfold-index-ge2-bounded",
     "for a Fano fourfold X of Picard number 1 and index > 1 other than P^4, morphisms onto X "
     "from Fano fourfolds of Picard number 1 have bounded degree; in particular X admits no "
     "non-isomorphic surjective endomorphism"},
    {"fourfold-index1-vmrt0-bounded",
     "a Fano fourfold of Picard number 1, index 1, whose minimal rational curves have "
     "0-dimensional tangent variety contains a rational curve with trivial normal bundle, so "
     "the degree bound property holds"},
    {"fourfold-index1-vmrt1-open",
     "open: degree bounds for morphisms onto Fano fourfolds of Picard number 1 and index 1 "
     "whose variety of minimal rational tangents is 1-dimensional"},
    {"projective-space-power-maps",
     "projective n-space admits the coordinate power endomorphisms, of degree q^n for every "
     "q >= 2"},
    {"quadric-endo-rank",
     "a quadric hypersurface equivalent to x_0^2 + ... + x_k^2 = 0 admits a non-isomorphic "
     "surjective endomorphism iff k <= 3; for k in {1,2,3} coordinate power maps on a normal "
     "form are witnesses"},
    {"quadric-low-dimension-context",
     "in ambient projective dimension < 3 the rank criterion is not asserted; only the "
     "constructive power-map direction is reported"},
    {"middle-index-toric",
     "a Fano manifold of Picard number >= 2 with index >= floor((dim+1)/2) is toric iff it "
     "admits an int-amplified endomorphism"},
    {"wps-positivity",
     "a smooth weighted hypersurface with weights (a_0, a_1, 1, ..., 1), gcd(a_0, a_1) = 1 and "
     "degree d >= a_0 + a_1 + 1 satisfies c_n(Omega_X(a_0+a_1)) > O_X(1)^n (a_0+a_1)^n"},
    {"wps-global-generation",
     "for such X, Omega_X(a_0+a_1) is globally generated when a_1 = 1 and globally generated "
     "away from finitely many points when a_1 > 1"},
    {"top-chern-residue-formula",
     "for d != a and a != 0, c_n(Omega_X(a)) = O_X(1)^n [d prod(a-a_i) - a prod(d-a_i) + "
     "(-1)^(n+1) (d-a) prod(a_i)] / [a d (a-d)]"},
    {"residue-sum-identity",
     "the residues of the Chern quotient form at infinity, 1/(d-a), -1/a and 0 sum to zero"},
    {"chern-degree-bound",
     "if Omega_X(u H_X) is globally generated away from finitely many points and "
     "c_n(Omega_X(u H_X)) - u^n H_X^n > 0, every finite morphism Y -> X of Picard-number-1 "
     "n-folds has degree at most a constant determined by the Chern numbers of X and Y"},
    {"section-pullback-inequality",
     "when Omega_X(H) is globally generated outside finitely many points, deg(f) "
     "c_n(Omega_X(H)) <= c_n(Omega_Y(f^* H)) for every finite surjective f : Y -> X"},
    {"del-pezzo-lines-two-kinds",
     "a line on a del Pezzo n-fold of Picard number 1 and degree >= 3 has normal bundle "
     "O^2 + O(1)^(n-3) (first kind) or O(-1) + O(1)^(n-2) (second kind)"},
    {"standard-splitting-p",
     "a standard rational curve C has T_X restricted to O(2) + O(1)^p + O^(n-p-1) with "
     "p + 2 = index(X) * (H . C)"},
    {"index1-negative-summand",
     "on a Fano manifold of Picard number 1 and index 1, the normal bundle of a line has a "
     "summand of negative degree (its degrees sum to -1)"},
    {"index-reduction",
     "index r > n/2 + 1 forces Picard number 1; r = n/2 + 1 with Picard number >= 2 forces "
     "P^(r-1) x P^(r-1); r = (n+1)/2 with Picard number >= 2 forces one of three explicit "
     "models"},
    {"middle-index-classification",
     "a Fano 2r-fold (2r >= 6) of index r and Picard number >= 2 is P^2 x P^2 x P^2 or has "
     "Picard number 2 with an elementary contraction from an explicit list"},
    {"complete-intersection-two-quadrics-bounded",
     "a degree-4 del Pezzo manifold (smooth intersection of two diagonalizable quadrics) "
     "projects as a double cover onto a smooth quadric, so the degree bound property follows "
     "from the quadric-target bound (cited, not computed)"},
    {"quintic-del-pezzo-bounded",
     "degree-5 del Pezzo manifolds of Picard number 1 satisfy the degree bound property "
     "(cited, not computed)"},
    {"mukai-genus-facts",
     "the Mukai genus satisfies 2 <= g <= 12, g != 11; genus 2: degree-6 hypersurface in "
     "P(3,1^(n+1)); genus 3: quartic in P^(n+1) or double cover of a smooth quadric; genus 4: "
     "intersection of a quadric and a cubic; these satisfy the degree bound property, while "
     "genus >= 5 is left open here"},
}};

inline const rule& find_rule(std::string_view id) {
    for (const rule& r : rule_table)
        if (r.id == id) return r;
    throw usage_error("unknown rule id '" + std::string(id) + "'");
}

}  // namespace fanobound
