#pragma once

#include <string>
#include <utility>

#include "fanobound/errors.hpp"
#include "fanobound/rational.hpp"

namespace fanobound {

/// Gaussian rational a + b*i with i^2 = -1.  Used only by the quadric
/// normal-form substitutions.
struct gaussian_rational {
    rational re;
    rational im;

    gaussian_rational() = default;
    gaussian_rational(long long v) : re(v) {}  // NOLINT(google-explicit-constructor)
    gaussian_rational(rational r) : re(std::move(r)) {}
    gaussian_rational(rational r, rational i) : re(std::move(r)), im(std::move(i)) {}

    static gaussian_rational unit_i() { return {rational(0), rational(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    gaussian_rational conj() const { return {re, -im}; }
    rational norm() const { return re * re + im * im; }

    friend gaussian_rational operator+(const gaussian_rational& a, const gaussian_rational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend gaussian_rational operator-(const gaussian_rational& a, const gaussian_rational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend gaussian_rational operator*(const gaussian_rational& a, const gaussian_rational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend gaussian_rational operator/(const gaussian_rational& a, const gaussian_rational& b) {
        if (b.is_zero()) throw usage_error("gaussian_rational: division by zero");
        const rational n = b.norm();
        const gaussian_rational c = a * b.conj();
        return {c.re / n, c.im / n};
    }

    friend bool operator==(const gaussian_rational& a, const gaussian_rational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const gaussian_rational& a, const gaussian_rational& b) {
        return !(a == b);
    }

    /// E.g. "2", "i", "-i", "1+i", "3-2i".
    std::string str() const {
        if (im.is_zero()) return re.str();
        std::string ipart;
        if (im == rational(1))
            ipart = "i";
        else if (im == rational(-1))
            ipart = "-i";
        else
            ipart = im.str() + "i";
        if (re.is_zero()) return ipart;
        if (im.sign() > 0) return re.str() + "+" + ipart;
        return re.str() + ipart;  // ipart already carries the minus sign
    }
};

}  // namespace fanobound
