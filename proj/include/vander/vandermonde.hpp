#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "vander/hermite.hpp"
#include "vander/matrix.hpp"
#include "vander/node_system.hpp"
#include "vander/polynomial.hpp"
#include "vander/scalar.hpp"

namespace vander {

/// Per-node column exponents r_{jc} of an r_s-rescaled confluent matrix;
/// outer index follows the node order, inner length must equal the node's
/// multiplicity. All nodes must be nonzero when a table is in play.
using ExponentTable = std::vector<std::vector<unsigned long>>;

namespace detail {

template <FieldScalar S>
void validate_exponent_table(const NodeSystem<S>& system, const ExponentTable& table) {
    if (table.size() != system.node_count())
        throw std::invalid_argument("exponent table has " + std::to_string(table.size()) +
                                    " rows for " + std::to_string(system.node_count()) + " nodes");
    for (std::size_t j = 0; j < table.size(); ++j) {
        if (table[j].size() != system.multiplicity(j))
            throw std::invalid_argument("exponent table row " + std::to_string(j) +
                                        " does not match multiplicity " +
                                        std::to_string(system.multiplicity(j)));
        if (system.alpha(j) == S(0))
            throw std::invalid_argument("exponent table requires nonzero nodes, alpha_" +
                                        std::to_string(j + 1) + " = 0");
    }
}

}  // namespace detail

/// Confluent Vandermonde matrix V_G(P): one n x m_k block per node, block
/// entry (i, c) = C(i-1, c-1) alpha_k^{i-c} on and below the diagonal band.
/// Columns of block k are the node's value/derivative directions.
template <FieldScalar S>
DenseMatrix<S> build_confluent(const NodeSystem<S>& system) {
    const std::size_t n = system.degree();
    DenseMatrix<S> v(n, n);
    std::size_t col = 0;
    for (std::size_t k = 0; k < system.node_count(); ++k) {
        const S& alpha = system.alpha(k);
        for (std::size_t c = 1; c <= system.multiplicity(k); ++c, ++col) {
            for (std::size_t i = 1; i <= n; ++i)
                v(i - 1, col) = i >= c ? binomial<S>(static_cast<long>(i - 1), static_cast<long>(c - 1)) *
                                             pow(alpha, i - c)
                                       : S(0);
        }
    }
    return v;
}

/// Explicit inverse of build_confluent: the row for slot (j, k) is the
/// monomial coefficient vector of the Hermite basis polynomial L_{jk},
/// blocks stacked in node order with derivative order ascending. No matrix
/// inversion happens anywhere on this path.
template <FieldScalar S>
DenseMatrix<S> invert_confluent(const HermiteBasis<S>& basis) {
    const std::size_t n = basis.system().degree();
    DenseMatrix<S> inv(n, n);
    std::size_t row = 0;
    for (std::size_t j = 0; j < basis.system().node_count(); ++j)
        for (std::size_t k = 0; k < basis.system().multiplicity(j); ++k, ++row)
            for (std::size_t i = 0; i < n; ++i) inv(row, i) = basis.at(j, k).coefficient(i);
    return inv;
}

template <FieldScalar S>
DenseMatrix<S> invert_confluent(const NodeSystem<S>& system) {
    return invert_confluent(hermite_basis(system));
}

/// Closed form for a single node: entry (i, j) = C(i-1, j-1) (-alpha)^{i-j},
/// the signed counterpart of the forward matrix.
template <FieldScalar S>
DenseMatrix<S> invert_single_node(const S& alpha, std::size_t n) {
    if (n == 0) throw std::invalid_argument("invert_single_node: n must be >= 1");
    DenseMatrix<S> inv(n, n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            inv(i - 1, j - 1) = i >= j ? binomial<S>(static_cast<long>(i - 1), static_cast<long>(j - 1)) *
                                             pow(-alpha, i - j)
                                       : S(0);
    return inv;
}

/// Closed form for two nodes, computed directly from the double-sum entry
/// formulas (not via the general basis path). Rows 1..m1 use a_{ij}, rows
/// m1+1..n use b_{ij}, which swaps the roles of the two nodes.
template <FieldScalar S>
DenseMatrix<S> invert_two_nodes(const S& alpha1, std::size_t m1, const S& alpha2, std::size_t m2) {
    if (m1 == 0 || m2 == 0) throw std::invalid_argument("invert_two_nodes: multiplicities must be >= 1");
    if (alpha1 == alpha2) throw std::invalid_argument("invert_two_nodes: nodes must be distinct");
    const std::size_t n = m1 + m2;
    DenseMatrix<S> inv(n, n);

    const auto entry = [](const S& a, const S& b, std::size_t ma, std::size_t mb, std::size_t i,
                          std::size_t j) {
        // sum_{p=0}^{ma-i} (-1)^{mb+i+j} C(mb+p-1, mb-1) / (a-b)^{mb+p}
        //   * sum_{r=0}^{j-1} C(i+p-1, r) C(mb, j-1-r) a^{p+i-1-r} b^{mb-j+1+r}
        const S diff = a - b;
        const S sign = ((mb + i + j) % 2 == 0) ? S(1) : S(-1);
        S total(0);
        for (std::size_t p = 0; p + i <= ma; ++p) {
            S inner(0);
            for (std::size_t r = 0; r < j; ++r) {
                const S c1 = binomial<S>(static_cast<long>(i + p) - 1, static_cast<long>(r));
                const S c2 = binomial<S>(static_cast<long>(mb), static_cast<long>(j - 1 - r));
                if (c1 == S(0) || c2 == S(0)) continue;  // also guards negative exponents
                inner += c1 * c2 * pow(a, p + i - 1 - r) * pow(b, mb - j + 1 + r);
            }
            total += inner * binomial<S>(static_cast<long>(mb + p) - 1, static_cast<long>(mb) - 1) /
                     pow(diff, mb + p);
        }
        return sign * total;
    };

    for (std::size_t i = 1; i <= m1; ++i)
        for (std::size_t j = 1; j <= n; ++j) inv(i - 1, j - 1) = entry(alpha1, alpha2, m1, m2, i, j);
    for (std::size_t i = 1; i <= m2; ++i)
        for (std::size_t j = 1; j <= n; ++j) inv(m1 + i - 1, j - 1) = entry(alpha2, alpha1, m2, m1, i, j);
    return inv;
}

/// Solves V_G(P) x = u through the basis coefficients: the (j, k) solution
/// entry is the dot product of the L_{jk} coefficient row with u. Output is
/// in block order (nodes in caller order, derivative order ascending).
template <FieldScalar S>
DenseVector<S> solve_confluent(const NodeSystem<S>& system, const DenseVector<S>& u) {
    const std::size_t n = system.degree();
    if (static_cast<std::size_t>(u.size()) != n)
        throw std::invalid_argument("solve_confluent: right-hand side has length " +
                                    std::to_string(u.size()) + ", expected " + std::to_string(n));
    const HermiteBasis<S> basis = hermite_basis(system);
    DenseVector<S> x(n);
    std::size_t row = 0;
    for (std::size_t j = 0; j < system.node_count(); ++j)
        for (std::size_t k = 0; k < system.multiplicity(j); ++k, ++row) {
            S acc(0);
            for (std::size_t i = 0; i < n; ++i) acc += basis.at(j, k).coefficient(i) * u(i);
            x(row) = acc;
        }
    return x;
}

/// r_s-confluent Vandermonde matrix: block entry (i, c) picks up an extra
/// alpha_k^{r_{kc}} per column, so it equals build_confluent times a
/// column-scaling diagonal. Requires nonzero nodes.
template <FieldScalar S>
DenseMatrix<S> build_rs(const NodeSystem<S>& system, const ExponentTable& table) {
    detail::validate_exponent_table(system, table);
    const std::size_t n = system.degree();
    DenseMatrix<S> v(n, n);
    std::size_t col = 0;
    for (std::size_t k = 0; k < system.node_count(); ++k) {
        const S& alpha = system.alpha(k);
        for (std::size_t c = 1; c <= system.multiplicity(k); ++c, ++col) {
            const unsigned long r = table[k][c - 1];
            for (std::size_t i = 1; i <= n; ++i)
                v(i - 1, col) = i >= c ? binomial<S>(static_cast<long>(i - 1), static_cast<long>(c - 1)) *
                                             pow(alpha, r + i - c)
                                       : S(0);
        }
    }
    return v;
}

/// Inverse of build_rs: since V^{r_s} = V_G D with D = diag(alpha_j^{r_jc})
/// in block order, each invert_confluent row is divided by its column scale.
template <FieldScalar S>
DenseMatrix<S> invert_rs(const NodeSystem<S>& system, const ExponentTable& table) {
    detail::validate_exponent_table(system, table);
    DenseMatrix<S> inv = invert_confluent(system);
    std::size_t row = 0;
    for (std::size_t j = 0; j < system.node_count(); ++j) {
        const S& alpha = system.alpha(j);
        for (std::size_t k = 0; k < system.multiplicity(j); ++k, ++row) {
            const S scale = pow(alpha, table[j][k]);
            for (Eigen::Index i = 0; i < inv.cols(); ++i) inv(row, i) = inv(row, i) / scale;
        }
    }
    return inv;
}

namespace detail {

template <FieldScalar S>
void require_distinct(const std::vector<S>& alphas) {
    if (alphas.empty()) throw std::invalid_argument("at least one node is required");
    for (std::size_t i = 0; i < alphas.size(); ++i)
        for (std::size_t j = i + 1; j < alphas.size(); ++j)
            if (alphas[i] == alphas[j])
                throw std::invalid_argument("duplicate node alpha = " +
                                            ScalarTraits<S>::to_string(alphas[i]));
}

/// Lagrange polynomial s_j(x) = prod_{i != j} (x - alpha_i) / (alpha_j - alpha_i).
template <FieldScalar S>
Polynomial<S> lagrange_polynomial(const std::vector<S>& alphas, std::size_t j) {
    Polynomial<S> numerator = Polynomial<S>::constant(S(1));
    S denominator(1);
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (i == j) continue;
        numerator *= linear_factor(alphas[i]);
        denominator *= alphas[j] - alphas[i];
    }
    return numerator * (S(1) / denominator);
}

}  // namespace detail

/// Usual Vandermonde matrix: entry (i, j) = alpha_j^{i-1}.
template <FieldScalar S>
DenseMatrix<S> build_usual(const std::vector<S>& alphas) {
    detail::require_distinct(alphas);
    const std::size_t k = alphas.size();
    DenseMatrix<S> v(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) v(i, j) = pow(alphas[j], i);
    return v;
}

/// Inverse of the usual Vandermonde matrix, row j holding the monomial
/// coefficients of the Lagrange polynomial s_j. Built from the Lagrange
/// products directly, independent of the confluent machinery.
template <FieldScalar S>
DenseMatrix<S> invert_usual(const std::vector<S>& alphas) {
    detail::require_distinct(alphas);
    const std::size_t k = alphas.size();
    DenseMatrix<S> inv(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        const Polynomial<S> s = detail::lagrange_polynomial(alphas, j);
        for (std::size_t i = 0; i < k; ++i) inv(j, i) = s.coefficient(i);
    }
    return inv;
}

/// Same inverse via elementary symmetric functions:
/// v_{ij} = (-1)^{k+j} sigma_{k-j}(i) / prod_{p != i} (alpha_i - alpha_p),
/// where sigma_r(i) omits alpha_i. Serves as an independent cross-check of
/// invert_usual.
template <FieldScalar S>
DenseMatrix<S> invert_usual_sigma(const std::vector<S>& alphas) {
    detail::require_distinct(alphas);
    const std::size_t k = alphas.size();
    DenseMatrix<S> inv(k, k);
    for (std::size_t i = 1; i <= k; ++i) {
        // Elementary symmetric polynomials of the alphas omitting alpha_i.
        std::vector<S> sigma(k, S(0));
        sigma[0] = S(1);
        std::size_t used = 0;
        for (std::size_t p = 0; p < k; ++p) {
            if (p == i - 1) continue;
            ++used;
            for (std::size_t r = used + 1; r-- > 1;) sigma[r] += alphas[p] * sigma[r - 1];
        }
        S denominator(1);
        for (std::size_t p = 0; p < k; ++p)
            if (p != i - 1) denominator *= alphas[i - 1] - alphas[p];
        for (std::size_t j = 1; j <= k; ++j) {
            const S sign = ((k + j) % 2 == 0) ? S(1) : S(-1);
            inv(i - 1, j - 1) = sign * sigma[k - j] / denominator;
        }
    }
    return inv;
}

/// Solves the usual Vandermonde system V x = u; the i-th solution entry is
/// the dot product of the Lagrange coefficient row s_i with u.
template <FieldScalar S>
DenseVector<S> solve_usual(const std::vector<S>& alphas, const DenseVector<S>& u) {
    detail::require_distinct(alphas);
    const std::size_t k = alphas.size();
    if (static_cast<std::size_t>(u.size()) != k)
        throw std::invalid_argument("solve_usual: right-hand side has length " +
                                    std::to_string(u.size()) + ", expected " + std::to_string(k));
    DenseVector<S> x(k);
    for (std::size_t i = 0; i < k; ++i) {
        const Polynomial<S> s = detail::lagrange_polynomial(alphas, i);
        S acc(0);
        for (std::size_t j = 0; j < k; ++j) acc += s.coefficient(j) * u(j);
        x(i) = acc;
    }
    return x;
}

namespace detail {

/// Gauss-Jordan elimination with partial pivoting on [m | rhs], in place.
/// Exact over an exact scalar; the pivot choice only affects growth there.
template <FieldScalar S>
void eliminate(DenseMatrix<S>& m, DenseMatrix<S>& rhs) {
    const Eigen::Index n = m.rows();
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = col;
        for (Eigen::Index r = col + 1; r < n; ++r)
            if (ScalarTraits<S>::abs_less(m(pivot, col), m(r, col))) pivot = r;
        if (m(pivot, col) == S(0)) throw std::domain_error("singular matrix");
        if (pivot != col) {
            m.row(pivot).swap(m.row(col));
            rhs.row(pivot).swap(rhs.row(col));
        }
        const S inv_pivot = S(1) / m(col, col);
        for (Eigen::Index c = 0; c < n; ++c) m(col, c) = m(col, c) * inv_pivot;
        for (Eigen::Index c = 0; c < rhs.cols(); ++c) rhs(col, c) = rhs(col, c) * inv_pivot;
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r == col || m(r, col) == S(0)) continue;
            const S factor = m(r, col);
            for (Eigen::Index c = 0; c < n; ++c) m(r, c) = m(r, c) - factor * m(col, c);
            for (Eigen::Index c = 0; c < rhs.cols(); ++c) rhs(r, c) = rhs(r, c) - factor * rhs(col, c);
        }
    }
}

}  // namespace detail

/// Independent inverse by Gaussian elimination with partial pivoting.
/// Exists as a verification oracle and for arbitrary matrices; the
/// structured paths never call it.
template <FieldScalar S>
DenseMatrix<S> gauss_invert(DenseMatrix<S> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("gauss_invert: matrix must be square");
    DenseMatrix<S> rhs = DenseMatrix<S>::Identity(m.rows(), m.rows());
    detail::eliminate(m, rhs);
    return rhs;
}

/// Independent linear solve by Gaussian elimination with partial pivoting.
template <FieldScalar S>
DenseVector<S> gauss_solve(DenseMatrix<S> m, const DenseVector<S>& u) {
    if (m.rows() != m.cols()) throw std::invalid_argument("gauss_solve: matrix must be square");
    if (u.size() != m.rows()) throw std::invalid_argument("gauss_solve: size mismatch");
    DenseMatrix<S> rhs(m.rows(), 1);
    rhs.col(0) = u;
    detail::eliminate(m, rhs);
    return rhs.col(0);
}

}  // namespace vander
