#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fanobound/chern.hpp"
#include "fanobound/errors.hpp"
#include "fanobound/rational.hpp"
#include "fanobound/weighted_hypersurface.hpp"

namespace fanobound {

/// The numerical input of the degree-bound inequality: dimension n >= 2,
/// the ample-generator self-intersection H^n > 0, and the Chern numbers
/// c_j(Omega) . H^(n-j) for j = 1..n.
struct variety_invariants {
    int dimension = 0;
    rational h_power;
    std::vector<rational> chern;  // chern[j-1] = c_j(Omega) . H^(n-j)

    variety_invariants(int n, rational hp, std::vector<rational> cn)
        : dimension(n), h_power(std::move(hp)), chern(std::move(cn)) {
        if (dimension < 2)
            throw usage_error("variety_invariants: dimension must be >= 2");
        if (!(h_power > rational(0)))
            throw usage_error("variety_invariants: H^n must be positive");
        if (chern.size() != static_cast<std::size_t>(dimension))
            throw usage_error("variety_invariants: expected " + std::to_string(dimension) +
                              " Chern numbers, got " + std::to_string(chern.size()));
    }

    /// 1-based access: chern_number(j) = c_j(Omega) . H^(n-j).
    const rational& chern_number(int j) const {
        if (j < 1 || j > dimension)
            throw usage_error("variety_invariants: Chern index out of range");
        return chern[static_cast<std::size_t>(j - 1)];
    }

    static variety_invariants from_hypersurface(const weighted_hypersurface& x) {
        if (x.dim() < 2)
            throw usage_error("variety_invariants: hypersurface dimension must be >= 2");
        return variety_invariants(x.dim(), hyperplane_power(x), chern_numbers(x));
    }
};

}  // namespace fanobound
