#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vander/node_system.hpp"
#include "vander/polynomial.hpp"
#include "vander/scalar.hpp"

namespace vander {

/// Constraint key (node index j, derivative order k), both 0-based.
using JetKey = std::pair<std::size_t, std::size_t>;

/// Values Q^{(k)}(alpha_j) keyed by (j, k).
template <FieldScalar S>
using JetData = std::map<JetKey, S>;

/// The generalized Hermite interpolation basis of a node system: for each
/// node j and derivative order k < m_j the polynomial
///
///   L_{jk}(x) = P_j(x) (x - alpha_j)^k sum_{i=0}^{m_j-1-k} g_j[i] (x - alpha_j)^i
///
/// where P_j is the cofactor of node j and g_j[i] is the i-th Taylor
/// coefficient of 1/P_j at alpha_j. The family satisfies the delta property
/// L_{jk}^{(l)}(alpha_i) = l! when (i, l) = (j, k) and 0 otherwise, and is a
/// basis of the polynomials of degree <= n-1.
template <FieldScalar S>
class HermiteBasis {
public:
    explicit HermiteBasis(NodeSystem<S> system) : system_(std::move(system)) {
        const std::size_t s = system_.node_count();
        cofactors_.reserve(s);
        jets_.reserve(s);
        basis_.reserve(s);
        for (std::size_t j = 0; j < s; ++j) {
            const S& alpha = system_.alpha(j);
            const std::size_t m = system_.multiplicity(j);
            Polynomial<S> cof = cofactor(system_, j);
            std::vector<S> jet = series_reciprocal_at(cof, alpha, m);

            std::vector<Polynomial<S>> block;
            block.reserve(m);
            const Polynomial<S> factor = linear_factor(alpha);
            for (std::size_t k = 0; k < m; ++k) {
                // Truncated reciprocal series, re-expanded around alpha.
                const std::vector<S> truncated(jet.begin(), jet.begin() + (m - k));
                Polynomial<S> l = cof * pow(factor, k) * polynomial_from_taylor(truncated, alpha);
                block.push_back(std::move(l));
            }
            cofactors_.push_back(std::move(cof));
            jets_.push_back(std::move(jet));
            basis_.push_back(std::move(block));
        }
    }

    const NodeSystem<S>& system() const { return system_; }

    /// L_{jk}, 0-based.
    const Polynomial<S>& at(std::size_t j, std::size_t k) const { return basis_.at(j).at(k); }

    /// Cofactor P_j = P / (x - alpha_j)^{m_j}, expanded.
    const Polynomial<S>& cofactor_of(std::size_t j) const { return cofactors_.at(j); }

    /// Taylor coefficients of 1/P_j at alpha_j, i-th entry g_j^{(i)}(alpha_j)/i!.
    const std::vector<S>& reciprocal_jet(std::size_t j) const { return jets_.at(j); }

private:
    NodeSystem<S> system_;
    std::vector<Polynomial<S>> cofactors_;
    std::vector<std::vector<S>> jets_;
    std::vector<std::vector<Polynomial<S>>> basis_;
};

/// P with the j-th factor removed: prod_{i != j} (x - alpha_i)^{m_i}.
/// The empty product (single-node system) is the constant 1.
template <FieldScalar S>
Polynomial<S> cofactor(const NodeSystem<S>& system, std::size_t j) {
    if (j >= system.node_count()) throw std::invalid_argument("cofactor: node index out of range");
    Polynomial<S> p = Polynomial<S>::constant(S(1));
    for (std::size_t i = 0; i < system.node_count(); ++i)
        if (i != j) p *= pow(linear_factor(system.alpha(i)), system.multiplicity(i));
    return p;
}

template <FieldScalar S>
HermiteBasis<S> hermite_basis(const NodeSystem<S>& system) {
    return HermiteBasis<S>(system);
}

/// The unique polynomial of degree <= n-1 taking the prescribed derivative
/// values: Q = sum_{j,k} Q^{(k)}(alpha_j)/k! * L_{jk}. The data must contain
/// exactly one entry per valid (j, k).
template <FieldScalar S>
Polynomial<S> interpolate(const HermiteBasis<S>& basis, const JetData<S>& data) {
    const NodeSystem<S>& system = basis.system();
    std::size_t expected = 0;
    for (std::size_t j = 0; j < system.node_count(); ++j) expected += system.multiplicity(j);
    if (data.size() != expected) {
        for (const auto& [key, value] : data) {
            (void)value;
            if (key.first >= system.node_count() || key.second >= system.multiplicity(key.first))
                throw std::invalid_argument("interpolate: unexpected constraint (" +
                                            std::to_string(key.first) + ", " +
                                            std::to_string(key.second) + ")");
        }
        throw std::invalid_argument("interpolate: expected " + std::to_string(expected) +
                                    " constraints, got " + std::to_string(data.size()));
    }
    Polynomial<S> q;
    for (std::size_t j = 0; j < system.node_count(); ++j) {
        for (std::size_t k = 0; k < system.multiplicity(j); ++k) {
            const auto it = data.find({j, k});
            if (it == data.end())
                throw std::invalid_argument("interpolate: missing constraint (" + std::to_string(j) +
                                            ", " + std::to_string(k) + ")");
            const S weight = it->second / factorial<S>(k);
            q += basis.at(j, k) * weight;
        }
    }
    return q;
}

template <FieldScalar S>
Polynomial<S> interpolate(const NodeSystem<S>& system, const JetData<S>& data) {
    return interpolate(hermite_basis(system), data);
}

/// Derivative values of q at the system's nodes, shaped as interpolation data.
template <FieldScalar S>
JetData<S> derivative_data(const Polynomial<S>& q, const NodeSystem<S>& system) {
    JetData<S> data;
    for (std::size_t j = 0; j < system.node_count(); ++j) {
        const std::size_t m = system.multiplicity(j);
        const std::vector<S> jet = taylor_coefficients_at(q, system.alpha(j), m);
        for (std::size_t k = 0; k < m; ++k) data[{j, k}] = jet[k] * factorial<S>(k);
    }
    return data;
}

/// One term coefficient / (x - alpha_node)^exponent of a partial fraction
/// expansion. `node` is a 0-based index into the originating system.
template <FieldScalar S>
struct PartialFractionTerm {
    std::size_t node;
    std::size_t exponent;
    S coefficient;
};

template <FieldScalar S>
using PartialFractionExpansion = std::vector<PartialFractionTerm<S>>;

/// Closed-form expansion of 1/P: for each node j and k < m_j the term
/// g_j^{(k)}(alpha_j) / (k! (x - alpha_j)^{m_j - k}). Zero coefficients are
/// retained so terms correspond one-to-one with (j, k) slots.
template <FieldScalar S>
PartialFractionExpansion<S> partial_fractions(const NodeSystem<S>& system) {
    PartialFractionExpansion<S> terms;
    terms.reserve(system.degree());
    for (std::size_t j = 0; j < system.node_count(); ++j) {
        const std::size_t m = system.multiplicity(j);
        const std::vector<S> jet = series_reciprocal_at(cofactor(system, j), system.alpha(j), m);
        for (std::size_t k = 0; k < m; ++k) terms.push_back({j, m - k, jet[k]});
    }
    return terms;
}

/// sum of coefficient * P(x) / (x - alpha_node)^exponent over the terms;
/// equals the constant polynomial 1 exactly when the expansion is correct.
template <FieldScalar S>
Polynomial<S> recombine_over_common_denominator(const NodeSystem<S>& system,
                                                const PartialFractionExpansion<S>& terms) {
    Polynomial<S> total;
    for (const PartialFractionTerm<S>& term : terms) {
        if (term.node >= system.node_count() || term.exponent == 0 ||
            term.exponent > system.multiplicity(term.node))
            throw std::invalid_argument("partial fraction term does not match the node system");
        Polynomial<S> p = Polynomial<S>::constant(term.coefficient);
        for (std::size_t i = 0; i < system.node_count(); ++i) {
            const std::size_t e =
                system.multiplicity(i) - (i == term.node ? term.exponent : 0);
            p *= pow(linear_factor(system.alpha(i)), e);
        }
        total += p;
    }
    return total;
}

}  // namespace vander
