#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vander/matrix.hpp"
#include "vander/node_system.hpp"
#include "vander/polynomial.hpp"
#include "vander/scalar.hpp"
#include "vander/vandermonde.hpp"

namespace vander {

/// Coefficients a_1..a_n of the monic form P(x) = x^n - sum_i a_i x^{n-i}.
template <FieldScalar S>
struct MonicCoefficients {
    std::vector<S> a;

    std::size_t degree() const { return a.size(); }

    /// x^n - sum_i a_i x^{n-i}, for round-trip checks against the factors.
    Polynomial<S> polynomial() const {
        const std::size_t n = a.size();
        std::vector<S> c(n + 1, S(0));
        c[n] = S(1);
        for (std::size_t i = 1; i <= n; ++i) c[n - i] = -a[i - 1];
        return Polynomial<S>(std::move(c));
    }
};

/// Expands the node system's factored P and reads off the a_i.
template <FieldScalar S>
MonicCoefficients<S> expand_monic(const NodeSystem<S>& system) {
    const Polynomial<S> p = system.expanded();
    const std::size_t n = system.degree();
    MonicCoefficients<S> monic;
    monic.a.resize(n);
    for (std::size_t i = 1; i <= n; ++i) monic.a[i - 1] = -p.coefficient(n - i);
    return monic;
}

/// Companion matrix C_P: ones on the superdiagonal, last row
/// (a_n, a_{n-1}, ..., a_1), zeros elsewhere.
template <FieldScalar S>
DenseMatrix<S> companion_matrix(const MonicCoefficients<S>& monic) {
    const std::size_t n = monic.degree();
    if (n == 0) throw std::invalid_argument("companion_matrix: degree must be >= 1");
    DenseMatrix<S> c = DenseMatrix<S>::Zero(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) c(i, i + 1) = S(1);
    for (std::size_t j = 0; j < n; ++j) c(n - 1, j) = monic.a[n - 1 - j];
    return c;
}

/// Block-diagonal Jordan form of C_P: one m_j x m_j block per node with
/// alpha_j on the diagonal and ones on the superdiagonal. The superdiagonal
/// convention is the one under which C_P V_G = V_G J holds with the
/// confluent column layout; all multiplicities 1 degenerates to
/// diag(alpha_1..alpha_s).
template <FieldScalar S>
DenseMatrix<S> jordan_form(const NodeSystem<S>& system) {
    const std::size_t n = system.degree();
    DenseMatrix<S> j = DenseMatrix<S>::Zero(n, n);
    std::size_t offset = 0;
    for (std::size_t b = 0; b < system.node_count(); ++b) {
        const std::size_t m = system.multiplicity(b);
        for (std::size_t i = 0; i < m; ++i) {
            j(offset + i, offset + i) = system.alpha(b);
            if (i + 1 < m) j(offset + i, offset + i + 1) = S(1);
        }
        offset += m;
    }
    return j;
}

/// How verify_similarity exercises the identity: Product compares
/// C_P V_G == V_G J without forming an inverse; Conjugated additionally
/// reconstructs C_P as V_G J V_G^{-1} through the explicit inverse.
enum class SimilarityCheck { Product, Conjugated };

/// Outcome of the similarity verification; on failure, the first offending
/// entry of the compared matrices.
template <FieldScalar S>
struct SimilarityReport {
    struct Mismatch {
        std::size_t row;
        std::size_t col;
        S lhs;
        S rhs;
    };

    bool ok = true;
    std::optional<Mismatch> first_mismatch;
};

/// Checks C_P V_G(P) = V_G(P) J entrywise (and C_P = V_G J V_G^{-1} in
/// Conjugated mode). Failure is a report, not an error.
template <FieldScalar S>
SimilarityReport<S> verify_similarity(const NodeSystem<S>& system,
                                      SimilarityCheck mode = SimilarityCheck::Product) {
    const DenseMatrix<S> v = build_confluent(system);
    const DenseMatrix<S> c = companion_matrix(expand_monic(system));
    const DenseMatrix<S> j = jordan_form(system);

    const auto compare = [](const DenseMatrix<S>& lhs, const DenseMatrix<S>& rhs) {
        SimilarityReport<S> report;
        for (Eigen::Index r = 0; r < lhs.rows() && report.ok; ++r)
            for (Eigen::Index col = 0; col < lhs.cols() && report.ok; ++col)
                if (!(lhs(r, col) == rhs(r, col))) {
                    report.ok = false;
                    report.first_mismatch = {static_cast<std::size_t>(r),
                                             static_cast<std::size_t>(col), lhs(r, col), rhs(r, col)};
                }
        return report;
    };

    SimilarityReport<S> report = compare(c * v, v * j);
    if (report.ok && mode == SimilarityCheck::Conjugated)
        report = compare(c, v * j * invert_confluent(system));
    return report;
}

}  // namespace vander
