#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fanobound/errors.hpp"
#include "fanobound/rational.hpp"

namespace fanobound {

/// Univariate polynomial in the hyperplane class h, truncated at h^(order+1).
///
/// Immutable after construction.  Multiplication is the exact Cauchy product
/// modulo h^(order+1); inversion requires a nonzero constant term.
class trunc_series {
public:
    explicit trunc_series(std::size_t order) : c_(order + 1) {}

    static trunc_series from_coeffs(std::vector<rational> coeffs) {
        if (coeffs.empty()) throw usage_error("trunc_series: empty coefficient list");
        trunc_series s(coeffs.size() - 1);
        s.c_ = std::move(coeffs);
        return s;
    }

    static trunc_series constant(std::size_t order, rational value) {
        trunc_series s(order);
        s.c_[0] = std::move(value);
        return s;
    }

    static trunc_series one(std::size_t order) { return constant(order, 1); }

    /// The linear factor 1 + slope*h.
    static trunc_series linear_unit(std::size_t order, rational slope) {
        trunc_series s(order);
        s.c_[0] = 1;
        if (order >= 1) s.c_[1] = std::move(slope);
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }

    const rational& coeff(std::size_t j) const {
        if (j >= c_.size()) throw usage_error("trunc_series: coefficient index out of range");
        return c_[j];
    }

    const std::vector<rational>& coeffs() const { return c_; }

    friend trunc_series operator+(const trunc_series& a, const trunc_series& b) {
        check_orders(a, b, "addition");
        trunc_series r(a.order());
        for (std::size_t j = 0; j < r.c_.size(); ++j) r.c_[j] = a.c_[j] + b.c_[j];
        return r;
    }

    friend trunc_series operator-(const trunc_series& a, const trunc_series& b) {
        check_orders(a, b, "subtraction");
        trunc_series r(a.order());
        for (std::size_t j = 0; j < r.c_.size(); ++j) r.c_[j] = a.c_[j] - b.c_[j];
        return r;
    }

    friend trunc_series operator*(const trunc_series& a, const trunc_series& b) {
        check_orders(a, b, "multiplication");
        trunc_series r(a.order());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    friend trunc_series operator*(const rational& s, const trunc_series& a) {
        trunc_series r(a.order());
        for (std::size_t j = 0; j < r.c_.size(); ++j) r.c_[j] = s * a.c_[j];
        return r;
    }

    /// Multiplicative inverse modulo h^(order+1).
    trunc_series inverse() const {
        if (c_[0].is_zero())
            throw non_invertible_error("trunc_series: zero constant term is not invertible");
        trunc_series r(order());
        r.c_[0] = rational(1) / c_[0];
        for (std::size_t k = 1; k < c_.size(); ++k) {
            rational acc;
            for (std::size_t j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
            r.c_[k] = -acc / c_[0];
        }
        return r;
    }

    friend bool operator==(const trunc_series& a, const trunc_series& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const trunc_series& a, const trunc_series& b) { return !(a == b); }

    /// E.g. "1 - 2*h + 4*h^2 + 2*h^3" (zero terms skipped, zero series is "0").
    std::string str() const {
        std::string out;
        for (std::size_t j = 0; j < c_.size(); ++j) {
            if (c_[j].is_zero()) continue;
            const rational mag = c_[j].abs();
            if (out.empty()) {
                if (c_[j].sign() < 0) out += "-";
            } else {
                out += c_[j].sign() < 0 ? " - " : " + ";
            }
            const bool unit = mag == rational(1);
            if (j == 0) {
                out += mag.str();
            } else {
                if (!unit) out += mag.str() + "*";
                out += j == 1 ? "h" : "h^" + std::to_string(j);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    static void check_orders(const trunc_series& a, const trunc_series& b, const char* op) {
        if (a.order() != b.order())
            throw usage_error(std::string("trunc_series: order mismatch in ") + op);
    }

    std::vector<rational> c_;  // size order+1, c_[j] = coefficient of h^j
};

}  // namespace fanobound
