#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "fanobound/errors.hpp"

namespace fanobound {

/// A hypersurface X of degree d in the weighted projective space
/// P(a_0, ..., a_{n+1}); the dimension of X is n = (#weights) - 2.
///
/// Weights are stored sorted in descending order.  Construction only checks
/// positivity; well-formedness and the restricted coprime-pair weight shape
/// (a_i = 1 for i >= 2, gcd(a_0, a_1) = 1) are reported by validate() and
/// enforced by the operations that need them.  Smoothness is an input
/// assertion and is never checked.
class weighted_hypersurface {
public:
    // range caps keep every long long intermediate (sums, twist differences)
    // far from overflow and the series order at a sane size
    static constexpr long long max_weight = 1000000000;
    static constexpr std::size_t max_weight_count = 10002;

    weighted_hypersurface(std::vector<long long> weights, long long degree)
        : weights_(std::move(weights)), degree_(degree) {
        if (weights_.size() < 3)
            throw usage_error("weighted_hypersurface: need at least 3 weights");
        if (weights_.size() > max_weight_count)
            throw usage_error("weighted_hypersurface: too many weights");
        for (long long w : weights_)
            if (w < 1 || w > max_weight)
                throw usage_error("weighted_hypersurface: weights must be in [1, 10^9]");
        if (degree_ < 1 || degree_ > max_weight)
            throw usage_error("weighted_hypersurface: degree must be in [1, 10^9]");
        std::sort(weights_.begin(), weights_.end(), std::greater<>());
    }

    /// Ordinary degree-d hypersurface in P^(n+1): weights (1, ..., 1).
    static weighted_hypersurface projective_hypersurface(int n, long long d) {
        if (n < 1) throw usage_error("projective_hypersurface: dimension must be >= 1");
        return weighted_hypersurface(std::vector<long long>(static_cast<std::size_t>(n) + 2, 1), d);
    }

    int dim() const { return static_cast<int>(weights_.size()) - 2; }
    long long degree() const { return degree_; }
    const std::vector<long long>& weights() const { return weights_; }
    long long weight(std::size_t i) const { return weights_.at(i); }

    long long weight_sum() const {
        long long s = 0;
        for (long long w : weights_) s += w;
        return s;
    }

    /// Every subset obtained by deleting one weight has gcd 1.
    bool well_formed() const {
        for (std::size_t skip = 0; skip < weights_.size(); ++skip) {
            long long g = 0;
            for (std::size_t i = 0; i < weights_.size(); ++i)
                if (i != skip) g = std::gcd(g, weights_[i]);
            if (g != 1) return false;
        }
        return true;
    }

    /// a_i = 1 for all i >= 2 and gcd(a_0, a_1) = 1.
    bool coprime_pair_weights() const {
        for (std::size_t i = 2; i < weights_.size(); ++i)
            if (weights_[i] != 1) return false;
        return std::gcd(weights_[0], weights_[1]) == 1;
    }

    std::string str() const {
        std::string s = "P(";
        for (std::size_t i = 0; i < weights_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(weights_[i]);
        }
        return s + ") deg " + std::to_string(degree_);
    }

    friend bool operator==(const weighted_hypersurface& a, const weighted_hypersurface& b) {
        return a.weights_ == b.weights_ && a.degree_ == b.degree_;
    }

private:
    std::vector<long long> weights_;  // descending
    long long degree_;
};

struct validation_report {
    bool well_formed = false;
    bool coprime_pair_weights = false;
    bool dimension_ok = false;      // n >= 2
    bool positivity_hypothesis = false;  // d >= a_0 + a_1 + 1 (checked in strict mode)
    bool strict_ok = false;
    std::vector<std::string> violations;
};

inline validation_report validate(const weighted_hypersurface& x, bool strict) {
    validation_report r;
    r.well_formed = x.well_formed();
    r.coprime_pair_weights = x.coprime_pair_weights();
    r.dimension_ok = x.dim() >= 2;
    r.positivity_hypothesis = x.degree() >= x.weight(0) + x.weight(1) + 1;
    if (!r.well_formed) r.violations.push_back("not well-formed: some n+1 of the weights share a common factor");
    if (!r.dimension_ok) r.violations.push_back("dimension " + std::to_string(x.dim()) + " < 2");
    if (strict) {
        for (std::size_t i = 2; i < x.weights().size(); ++i)
            if (x.weight(i) != 1) {
                r.violations.push_back("coprime-pair shape requires a_i = 1 for i >= 2");
                break;
            }
        if (std::gcd(x.weight(0), x.weight(1)) != 1)
            r.violations.push_back("coprime-pair shape requires gcd(a_0, a_1) = 1");
        if (!r.positivity_hypothesis)
            r.violations.push_back("positivity hypothesis requires d >= a_0 + a_1 + 1 (d = " +
                                   std::to_string(x.degree()) + ", needed " +
                                   std::to_string(x.weight(0) + x.weight(1) + 1) + ")");
        r.strict_ok = r.well_formed && r.dimension_ok && r.coprime_pair_weights && r.positivity_hypothesis;
    } else {
        r.strict_ok = r.well_formed && r.dimension_ok;
    }
    return r;
}

}  // namespace fanobound
