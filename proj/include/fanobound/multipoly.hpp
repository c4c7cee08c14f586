#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "fanobound/errors.hpp"
#include "fanobound/rational.hpp"

namespace fanobound {

using exponent_vec = std::vector<unsigned>;

inline unsigned long total_degree(const exponent_vec& e) {
    unsigned long d = 0;
    for (unsigned x : e) d += x;
    return d;
}

/// Graded lexicographic order: total degree first, then lexicographic with
/// the first variable most significant.  Fixed globally so serialized term
/// order is deterministic.
struct grlex_less {
    bool operator()(const exponent_vec& a, const exponent_vec& b) const {
        const unsigned long da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;  // lexicographic
    }
};

inline bool monomial_divides(const exponent_vec& a, const exponent_vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// Sparse multivariate polynomial with exact coefficients.  No stored term
/// has a zero coefficient; terms are kept in graded-lex order.
template <class Coeff = rational>
class polynomial {
public:
    using term_map = std::map<exponent_vec, Coeff, grlex_less>;

    explicit polynomial(std::size_t nvars) : nvars_(nvars) {
        if (nvars == 0) throw usage_error("polynomial: need at least one variable");
    }

    static polynomial constant(std::size_t nvars, Coeff c) {
        polynomial p(nvars);
        p.add_term(exponent_vec(nvars, 0), std::move(c));
        return p;
    }

    static polynomial variable(std::size_t nvars, std::size_t i) {
        if (i >= nvars) throw usage_error("polynomial: variable index out of range");
        exponent_vec e(nvars, 0);
        e[i] = 1;
        polynomial p(nvars);
        p.add_term(std::move(e), Coeff(1));
        return p;
    }

    static polynomial monomial(std::size_t nvars, exponent_vec e, Coeff c) {
        if (e.size() != nvars) throw usage_error("polynomial: exponent vector length mismatch");
        polynomial p(nvars);
        p.add_term(std::move(e), std::move(c));
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const term_map& terms() const { return terms_; }

    void add_term(exponent_vec e, Coeff c) {
        if (e.size() != nvars_) throw usage_error("polynomial: exponent vector length mismatch");
        if (c == Coeff(0)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), std::move(c));
        } else {
            it->second = it->second + c;
            if (it->second == Coeff(0)) terms_.erase(it);
        }
    }

    /// Largest term in graded-lex order.
    const std::pair<const exponent_vec, Coeff>& leading_term() const {
        if (terms_.empty()) throw usage_error("polynomial: zero polynomial has no leading term");
        return *terms_.rbegin();
    }

    unsigned long degree() const {
        return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first);
    }

    polynomial operator-() const {
        polynomial r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, Coeff(0) - c);
        return r;
    }

    friend polynomial operator+(const polynomial& a, const polynomial& b) {
        check_vars(a, b);
        polynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend polynomial operator-(const polynomial& a, const polynomial& b) {
        check_vars(a, b);
        polynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, Coeff(0) - c);
        return r;
    }

    friend polynomial operator*(const polynomial& a, const polynomial& b) {
        check_vars(a, b);
        polynomial r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                exponent_vec e(a.nvars_);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        }
        return r;
    }

    friend polynomial operator*(const Coeff& s, const polynomial& a) {
        polynomial r(a.nvars_);
        for (const auto& [e, c] : a.terms_) r.add_term(e, s * c);
        return r;
    }

    friend bool operator==(const polynomial& a, const polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const polynomial& a, const polynomial& b) { return !(a == b); }

    /// Every exponent vector multiplied componentwise by q; coefficients
    /// unchanged.  This is the pullback along the coordinate power map.
    polynomial power_substitute(unsigned q) const {
        if (q < 1) throw usage_error("power_substitute: exponent must be >= 1");
        polynomial r(nvars_);
        for (const auto& [e, c] : terms_) {
            exponent_vec pe(e);
            for (unsigned& x : pe) {
                if (x != 0 && q > std::numeric_limits<unsigned>::max() / x)
                    throw usage_error("power_substitute: exponent overflow");
                x *= q;
            }
            r.terms_.emplace(std::move(pe), c);
        }
        return r;
    }

    struct division_result {
        polynomial quotient;
        polynomial remainder;
    };

    /// Single-divisor multivariate reduction by the graded-lex leading term
    /// of f.  Terms not reducible by LT(f) are moved to the remainder, so
    /// remainder == 0 iff f divides *this exactly.
    division_result divide_by(const polynomial& f) const {
        check_vars(*this, f);
        if (f.is_zero()) throw usage_error("polynomial division: zero divisor");
        const auto& [fm, fc] = f.leading_term();
        polynomial q(nvars_), r(nvars_), p = *this;
        while (!p.is_zero()) {
            const auto& [pm, pc] = p.leading_term();
            if (monomial_divides(fm, pm)) {
                exponent_vec e(nvars_);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = pm[i] - fm[i];
                const Coeff c = pc / fc;
                polynomial t = monomial(nvars_, std::move(e), c);
                q = q + t;
                p = p - t * f;
            } else {
                r.add_term(pm, pc);
                p.terms_.erase(std::prev(p.terms_.end()));
            }
        }
        return {std::move(q), std::move(r)};
    }

    /// Canonical rendering in descending graded-lex term order, e.g.
    /// "x0*x1 - x2*x3".  Custom variable names may be supplied.
    std::string str(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            std::string coeff_part;
            bool negative = false;
            if constexpr (std::is_same_v<Coeff, rational>) {
                negative = c.sign() < 0;
                const rational mag = c.abs();
                if (mag != rational(1) || total_degree(e) == 0) coeff_part = mag.str();
            } else {
                coeff_part = "(" + c.str() + ")";
            }
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += i < names.size() ? names[i] : "x" + std::to_string(i);
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (out.empty()) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            if (!coeff_part.empty() && !mono.empty())
                out += coeff_part + "*" + mono;
            else
                out += coeff_part.empty() ? mono : coeff_part;
        }
        return out;
    }

private:
    static void check_vars(const polynomial& a, const polynomial& b) {
        if (a.nvars_ != b.nvars_)
            throw usage_error("polynomial: variable count mismatch");
    }

    std::size_t nvars_;
    term_map terms_;
};

using multipoly = polynomial<rational>;

/// Exact divisibility test: returns q with f*q == g when f divides g,
/// otherwise empty.
template <class Coeff>
std::optional<polynomial<Coeff>> poly_divides(const polynomial<Coeff>& f,
                                              const polynomial<Coeff>& g) {
    if (f.is_zero()) throw usage_error("poly_divides: zero divisor");
    auto dr = g.divide_by(f);
    if (!dr.remainder.is_zero()) return std::nullopt;
    return std::move(dr.quotient);
}

}  // namespace fanobound
