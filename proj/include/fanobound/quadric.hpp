#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fanobound/errors.hpp"
#include "fanobound/gaussian.hpp"
#include "fanobound/multipoly.hpp"
#include "fanobound/rational.hpp"

namespace fanobound {

// Endomorphisms of quadric hypersurfaces.  A quadric X in P^n of rank k+1
// (the sum of k+1 coordinate squares, after a linear change) admits a
// non-isomorphic surjective endomorphism iff k <= 3; for k in {1,2,3} the
// coordinate power map on a normal form is an explicit witness, certified
// symbolically by divisibility of the pulled-back form by the form.

/// Symmetric rational matrix A with form x^T A x on P^(ambient_dim).
class quadric_form {
public:
    quadric_form(int ambient_dim, std::vector<std::vector<rational>> matrix)
        : n_(ambient_dim), a_(std::move(matrix)) {
        if (n_ < 1 || n_ > 256)
            throw usage_error("quadric_form: ambient dimension must be in [1, 256]");
        const std::size_t size = static_cast<std::size_t>(n_) + 1;
        if (a_.size() != size)
            throw usage_error("quadric_form: expected a " + std::to_string(size) + "x" +
                              std::to_string(size) + " matrix");
        for (const auto& row : a_)
            if (row.size() != size)
                throw usage_error("quadric_form: matrix is not square");
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = i + 1; j < size; ++j)
                if (a_[i][j] != a_[j][i])
                    throw usage_error("quadric_form: matrix is not symmetric");
    }

    static quadric_form diagonal(int ambient_dim, std::vector<rational> entries) {
        const std::size_t size = static_cast<std::size_t>(ambient_dim) + 1;
        if (entries.size() != size)
            throw usage_error("quadric_form: expected " + std::to_string(size) +
                              " diagonal entries");
        std::vector<std::vector<rational>> m(size, std::vector<rational>(size));
        for (std::size_t i = 0; i < size; ++i) m[i][i] = std::move(entries[i]);
        return quadric_form(ambient_dim, std::move(m));
    }

    /// Diagonal normal form x_0^2 + ... + x_k^2 = 0 in P^(ambient_dim).
    static quadric_form sum_of_squares(int ambient_dim, int k) {
        if (k < 0 || k > ambient_dim)
            throw usage_error("quadric_form: k must satisfy 0 <= k <= ambient dimension");
        std::vector<rational> d(static_cast<std::size_t>(ambient_dim) + 1);
        for (int i = 0; i <= k; ++i) d[static_cast<std::size_t>(i)] = 1;
        return quadric_form(ambient_dim, diagonal(ambient_dim, std::move(d)).matrix());
    }

    int ambient_dim() const { return n_; }
    const std::vector<std::vector<rational>>& matrix() const { return a_; }

    bool is_zero() const {
        for (const auto& row : a_)
            for (const auto& v : row)
                if (!v.is_zero()) return false;
        return true;
    }

    /// Exact rank over the rationals by fraction-free (Bareiss) elimination
    /// on a denominator-cleared integer copy.
    int rank() const {
        const std::size_t size = a_.size();
        std::vector<std::vector<bigint>> m(size, std::vector<bigint>(size));
        for (std::size_t i = 0; i < size; ++i) {
            bigint l = 1;
            for (const auto& v : a_[i])
                l = boost::multiprecision::lcm(l, v.denominator());
            for (std::size_t j = 0; j < size; ++j)
                m[i][j] = a_[i][j].numerator() * (l / a_[i][j].denominator());
        }
        bigint prev = 1;
        std::size_t rank = 0;
        for (std::size_t col = 0; col < size && rank < size; ++col) {
            std::size_t pivot = rank;
            while (pivot < size && m[pivot][col] == 0) ++pivot;
            if (pivot == size) continue;
            std::swap(m[rank], m[pivot]);
            for (std::size_t r = rank + 1; r < size; ++r) {
                for (std::size_t c = col + 1; c < size; ++c) {
                    const bigint num = m[r][c] * m[rank][col] - m[r][col] * m[rank][c];
                    if (num % prev != 0)
                        throw error("quadric_form: fraction-free elimination invariant broken");
                    m[r][c] = num / prev;
                }
                m[r][col] = 0;
            }
            prev = m[rank][col];
            ++rank;
        }
        return static_cast<int>(rank);
    }

    /// The rank parameter k: the form is equivalent to a sum of k+1 squares,
    /// i.e. k = rank(A) - 1.
    int rank_k() const {
        if (is_zero()) throw degenerate_input_error("quadric_form: zero form has no rank parameter");
        return rank() - 1;
    }

    /// x^T A x expanded as a polynomial in x_0..x_n.
    multipoly form_polynomial() const {
        const std::size_t size = a_.size();
        multipoly p(size);
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = i; j < size; ++j) {
                const rational c = i == j ? a_[i][i] : rational(2) * a_[i][j];
                if (c.is_zero()) continue;
                exponent_vec e(size, 0);
                e[i] += 1;
                e[j] += 1;
                p.add_term(std::move(e), c);
            }
        }
        return p;
    }

private:
    int n_;
    std::vector<std::vector<rational>> a_;
};

/// The coordinate power map [x_0 : ... : x_n] -> [x_0^q : ... : x_n^q].
struct monomial_map {
    long long exponent;  // q >= 2
    int arity;           // number of homogeneous coordinates, n + 1

    monomial_map(long long q, int coordinate_count) : exponent(q), arity(coordinate_count) {
        if (exponent < 2) throw usage_error("monomial_map: exponent must be >= 2");
        if (exponent > 1000000) throw usage_error("monomial_map: exponent out of supported range");
        if (arity < 2) throw usage_error("monomial_map: need at least 2 coordinates");
    }

    multipoly pull_back(const multipoly& f) const {
        if (f.nvars() != static_cast<std::size_t>(arity))
            throw usage_error("monomial_map: arity does not match the polynomial");
        return f.power_substitute(static_cast<unsigned>(exponent));
    }

    std::string str() const {
        const std::string last = std::to_string(arity - 1);
        const std::string q = std::to_string(exponent);
        return "[x0:...:x" + last + "] -> [x0^" + q + ":...:x" + last + "^" + q + "]";
    }
};

struct invariance_check {
    bool invariant = false;
    std::optional<multipoly> quotient;   // present iff invariant
    std::optional<multipoly> remainder;  // nonzero certificate iff not invariant
};

/// Total invariance of the zero locus under the power map, certified by
/// exact divisibility: form | pull_back(form).  A failure ships the nonzero
/// reduction remainder so the negative answer is auditable.
inline invariance_check verify_invariance(const multipoly& form, const monomial_map& map) {
    if (form.is_zero()) throw usage_error("verify_invariance: form must be nonzero");
    const multipoly pulled = map.pull_back(form);
    auto dr = pulled.divide_by(form);
    invariance_check out;
    out.invariant = dr.remainder.is_zero();
    if (out.invariant)
        out.quotient = std::move(dr.quotient);
    else
        out.remainder = std::move(dr.remainder);
    return out;
}

/// Witness endomorphism data for the low-rank normal forms.
struct endo_witness {
    multipoly normal_form;     // k=3: x0*x1 - x2*x3; k=2: x1^2 - x0*x2; k=1: x0*x1
    monomial_map map;
    bigint component_degree;   // q^(n-1) on each irreducible component
    bool reducible = false;    // k = 1: the quadric is a union of two hyperplanes
    multipoly quotient;        // pull_back(normal_form) / normal_form
};

/// Normal form and power-map witness for k in {1, 2, 3} on P^(ambient_dim).
/// The degree is q^(n-1) (per irreducible component when k = 1).
inline endo_witness witness_for_k(int k, int ambient_dim, long long q) {
    if (k < 1 || k > 3) throw usage_error("witness_for_k: k must be in {1, 2, 3}");
    if (ambient_dim < k)
        throw usage_error("witness_for_k: need ambient dimension >= k");
    const std::size_t vars = static_cast<std::size_t>(ambient_dim) + 1;
    const auto var = [&](std::size_t i) { return multipoly::variable(vars, i); };
    multipoly form(vars);
    switch (k) {
        case 3: form = var(0) * var(1) - var(2) * var(3); break;
        case 2: form = var(1) * var(1) - var(0) * var(2); break;
        default: form = var(0) * var(1); break;
    }
    monomial_map map(q, ambient_dim + 1);
    auto check = verify_invariance(form, map);
    if (!check.invariant)
        throw error("witness_for_k: normal form unexpectedly not invariant");
    endo_witness w{std::move(form), map,
                   int_pow(bigint(q), static_cast<unsigned long long>(ambient_dim - 1)),
                   k == 1, std::move(*check.quotient)};
    return w;
}

/// Decision record for a quadric hypersurface.
struct endo_verdict {
    bool admits = false;  // == (rank_k <= 3)
    int rank_k = 0;
    std::optional<endo_witness> witness;  // present iff admits
    std::string rule_id;
    bool within_scope = true;  // ambient dimension >= 3; below that the rank
                               // criterion is not asserted, only the witness
};

/// Decides whether the quadric admits a non-isomorphic surjective
/// endomorphism (iff its rank parameter k is <= 3) and attaches a certified
/// power-map witness in the admitting cases.
inline endo_verdict decide(const quadric_form& q, long long witness_exponent = 2) {
    endo_verdict v;
    v.rank_k = q.rank_k();  // throws degenerate_input_error on the zero form
    v.admits = v.rank_k <= 3;
    v.within_scope = q.ambient_dim() >= 3;
    v.rule_id = v.within_scope ? "quadric-endo-rank" : "quadric-low-dimension-context";
    if (v.admits) v.witness = witness_for_k(v.rank_k, q.ambient_dim(), witness_exponent);
    return v;
}

/// Projection of the pencil member along the dropped coordinate: the
/// diagonal quadric sum_{j != i} (lambda_j - lambda_i) x_j^2 = 0 in one
/// dimension lower.  Distinct lambdas force full rank (a smooth quadric).
inline quadric_form pencil_projection(const std::vector<rational>& lambdas,
                                      std::size_t drop_index) {
    if (lambdas.size() < 4)
        throw usage_error("pencil_projection: need at least 4 pencil parameters");
    if (drop_index >= lambdas.size())
        throw usage_error("pencil_projection: index out of range");
    for (std::size_t i = 0; i < lambdas.size(); ++i)
        for (std::size_t j = i + 1; j < lambdas.size(); ++j)
            if (lambdas[i] == lambdas[j])
                throw usage_error("pencil_projection: lambdas must be pairwise distinct "
                                  "(lambda_" + std::to_string(i) + " == lambda_" +
                                  std::to_string(j) + ")");
    std::vector<rational> diag;
    diag.reserve(lambdas.size() - 1);
    for (std::size_t j = 0; j < lambdas.size(); ++j)
        if (j != drop_index) diag.push_back(lambdas[j] - lambdas[drop_index]);
    quadric_form out =
        quadric_form::diagonal(static_cast<int>(lambdas.size()) - 2, std::move(diag));
    if (out.rank() != static_cast<int>(lambdas.size()) - 1)
        throw error("pencil_projection: projected quadric unexpectedly degenerate");
    return out;
}

/// Explicit linear substitution over the Gaussian rationals carrying the
/// diagonal form x_0^2 + ... + x_k^2 to the normal form used by
/// witness_for_k, verified by symbolic expansion.
struct normal_form_substitution {
    int k = 0;
    // u_row = sum_col matrix[row][col] * x_col
    std::vector<std::vector<gaussian_rational>> matrix;
    std::vector<std::string> rules;  // human-readable, e.g. "u0 = x0 + i*x1"
    std::string target;              // e.g. "u0*u1 - u2*u3"
    bool verified = false;
};

inline normal_form_substitution diagonal_to_normal_form(int k) {
    if (k < 1 || k > 3) throw usage_error("diagonal_to_normal_form: k must be in {1, 2, 3}");
    const std::size_t vars = static_cast<std::size_t>(k) + 1;
    const gaussian_rational one(1), minus_one(-1), i = gaussian_rational::unit_i();

    normal_form_substitution out;
    out.k = k;
    out.matrix.assign(vars, std::vector<gaussian_rational>(vars));
    switch (k) {
        case 1:
            // x0^2 + x1^2 = (x0 + i x1)(x0 - i x1)
            out.matrix = {{one, i}, {one, gaussian_rational(0) - i}};
            out.rules = {"u0 = x0 + i*x1", "u1 = x0 - i*x1"};
            out.target = "u0*u1";
            break;
        case 2:
            // x0^2 + x1^2 + x2^2 = x1^2 - (x0 + i x2)(-x0 + i x2)
            out.matrix = {{one, 0, i}, {0, one, 0}, {minus_one, 0, i}};
            out.rules = {"u0 = x0 + i*x2", "u1 = x1", "u2 = -x0 + i*x2"};
            out.target = "u1^2 - u0*u2";
            break;
        default:
            // x0^2 + ... + x3^2 = (x0 + i x1)(x0 - i x1) - (i x2 - x3)(i x2 + x3)
            out.matrix = {{one, i, 0, 0},
                          {one, gaussian_rational(0) - i, 0, 0},
                          {0, 0, i, minus_one},
                          {0, 0, i, one}};
            out.rules = {"u0 = x0 + i*x1", "u1 = x0 - i*x1", "u2 = i*x2 - x3",
                         "u3 = i*x2 + x3"};
            out.target = "u0*u1 - u2*u3";
            break;
    }

    // Verification: expand the target normal form in the substituted linear
    // forms and compare with the diagonal form, exactly.
    using gpoly = polynomial<gaussian_rational>;
    std::vector<gpoly> u;
    for (std::size_t row = 0; row < vars; ++row) {
        gpoly lin(vars);
        for (std::size_t col = 0; col < vars; ++col) {
            if (out.matrix[row][col].is_zero()) continue;
            exponent_vec e(vars, 0);
            e[col] = 1;
            lin.add_term(std::move(e), out.matrix[row][col]);
        }
        u.push_back(std::move(lin));
    }
    gpoly expanded(vars);
    switch (k) {
        case 1: expanded = u[0] * u[1]; break;
        case 2: expanded = u[1] * u[1] - u[0] * u[2]; break;
        default: expanded = u[0] * u[1] - u[2] * u[3]; break;
    }
    gpoly diagonal(vars);
    for (std::size_t idx = 0; idx < vars; ++idx) {
        exponent_vec e(vars, 0);
        e[idx] = 2;
        diagonal.add_term(std::move(e), one);
    }
    out.verified = expanded == diagonal;
    if (!out.verified)
        throw error("diagonal_to_normal_form: substitution failed expansion check");
    return out;
}

}  // namespace fanobound
