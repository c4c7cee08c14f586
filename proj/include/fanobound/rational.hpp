#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <utility>

#include "fanobound/errors.hpp"

namespace fanobound {

using bigint = boost::multiprecision::cpp_int;

inline bigint int_pow(const bigint& base, unsigned long long e) {
    bigint acc = 1;
    bigint b = base;
    while (e > 0) {
        if (e & 1ULL) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

/// Exact fraction over arbitrary-precision integers.
///
/// Invariants: always in lowest terms, denominator > 0.  All arithmetic is
/// exact; there is no rounding anywhere in this library.
class rational {
public:
    rational() : num_(0), den_(1) {}
    rational(long long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
    rational(bigint v) : num_(std::move(v)), den_(1) {}

    rational(bigint num, bigint den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw usage_error("rational: zero denominator");
        normalize();
    }

    const bigint& numerator() const { return num_; }
    const bigint& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    rational abs() const { return num_ < 0 ? rational(-num_, den_) : *this; }

    /// Largest integer <= *this.
    bigint floor() const {
        bigint q = num_ / den_;  // truncates toward zero
        if (num_ < 0 && q * den_ != num_) --q;
        return q;
    }

    /// Smallest integer >= *this.
    bigint ceil() const {
        bigint q = num_ / den_;
        if (num_ > 0 && q * den_ != num_) ++q;
        return q;
    }

    rational pow(unsigned long long e) const {
        return rational_unchecked(int_pow(num_, e), int_pow(den_, e));
    }

    rational operator-() const { return rational_unchecked(-num_, den_); }

    rational& operator+=(const rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    rational& operator-=(const rational& o) { return *this += -o; }
    rational& operator*=(const rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    rational& operator/=(const rational& o) {
        if (o.num_ == 0) throw usage_error("rational: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        normalize();
        return *this;
    }

    friend rational operator+(rational a, const rational& b) { return a += b; }
    friend rational operator-(rational a, const rational& b) { return a -= b; }
    friend rational operator*(rational a, const rational& b) { return a *= b; }
    friend rational operator/(rational a, const rational& b) { return a /= b; }

    // Canonical form makes field-wise comparison valid.
    friend bool operator==(const rational& a, const rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const rational& a, const rational& b) { return !(a == b); }
    friend bool operator<(const rational& a, const rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const rational& a, const rational& b) { return b < a; }
    friend bool operator<=(const rational& a, const rational& b) { return !(b < a); }
    friend bool operator>=(const rational& a, const rational& b) { return !(a < b); }

    /// Canonical text form: "p" when integral, "p/q" otherwise.
    std::string str() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    /// Parses "p" or "p/q" (optional sign on p; q a positive integer literal).
    /// The result is normalized, so non-reduced inputs like "2/4" are accepted.
    static rational parse(std::string_view s) {
        const auto fail = [&] {
            return usage_error("rational: cannot parse '" + std::string(s) + "'");
        };
        if (s.empty()) throw fail();
        const auto parse_digits = [&](std::string_view t, bool allow_sign) {
            bool neg = false;
            std::size_t i = 0;
            if (allow_sign && (t[0] == '-' || t[0] == '+')) {
                neg = t[0] == '-';
                i = 1;
            }
            if (i == t.size()) throw fail();
            bigint v = 0;
            for (; i < t.size(); ++i) {
                if (t[i] < '0' || t[i] > '9') throw fail();
                v = v * 10 + (t[i] - '0');
            }
            return neg ? bigint(-v) : v;
        };
        const std::size_t slash = s.find('/');
        if (slash == std::string_view::npos) return rational(parse_digits(s, true));
        if (slash + 1 >= s.size()) throw fail();
        bigint p = parse_digits(s.substr(0, slash), true);
        bigint q = parse_digits(s.substr(slash + 1), false);
        if (q == 0) throw usage_error("rational: zero denominator in '" + std::string(s) + "'");
        return rational(std::move(p), std::move(q));
    }

private:
    static rational rational_unchecked(bigint n, bigint d) {
        rational r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        bigint g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    bigint num_;
    bigint den_;  // > 0
};

}  // namespace fanobound
