#pragma once

#include <cmath>
#include <cstddef>

#include <Eigen/Core>

#include "vander/scalar.hpp"

namespace vander {

/// Dense row-major matrix over a field scalar.
template <FieldScalar S>
using DenseMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <FieldScalar S>
using DenseVector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

/// Entrywise equality under the scalar's own == (exact for Rational).
template <FieldScalar S>
bool exactly_equal(const DenseMatrix<S>& a, const DenseMatrix<S>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}

template <FieldScalar S>
bool exactly_equal(const DenseVector<S>& a, const DenseVector<S>& b) {
    if (a.size() != b.size()) return false;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (!(a(i) == b(i))) return false;
    return true;
}

template <FieldScalar S>
bool is_identity(const DenseMatrix<S>& m) {
    if (m.rows() != m.cols()) return false;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!(m(i, j) == S(i == j ? 1 : 0))) return false;
    return true;
}

/// Max-norm distance from the identity, e.g. of a product V * V^-1.
inline double identity_residual(const DenseMatrix<double>& m) {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            worst = std::max(worst, std::abs(m(i, j) - (i == j ? 1.0 : 0.0)));
    return worst;
}

inline double max_abs(const DenseMatrix<double>& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double max_abs(const DenseVector<double>& v) {
    return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

inline bool all_finite(const DenseMatrix<double>& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!std::isfinite(m(i, j))) return false;
    return true;
}

inline bool all_finite(const DenseVector<double>& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (!std::isfinite(v(i))) return false;
    return true;
}

}  // namespace vander
