#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vander/polynomial.hpp"
#include "vander/scalar.hpp"

namespace vander {

/// Ordered pairwise-distinct nodes alpha_j with multiplicities m_j; the
/// factored form of P(x) = prod_j (x - alpha_j)^{m_j}. Node order is the
/// caller's order and is preserved everywhere (block layouts follow it).
template <FieldScalar S>
class NodeSystem {
public:
    struct Node {
        S alpha;
        std::size_t multiplicity;
    };

    explicit NodeSystem(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
        if (nodes_.empty()) throw std::invalid_argument("node system must contain at least one node");
        degree_ = 0;
        for (const Node& node : nodes_) {
            if (node.multiplicity == 0)
                throw std::invalid_argument("node multiplicity must be >= 1");
            degree_ += node.multiplicity;
        }
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            for (std::size_t j = i + 1; j < nodes_.size(); ++j)
                if (nodes_[i].alpha == nodes_[j].alpha)
                    throw std::invalid_argument("duplicate node alpha = " +
                                                ScalarTraits<S>::to_string(nodes_[i].alpha));
    }

    /// s, the number of distinct nodes.
    std::size_t node_count() const { return nodes_.size(); }

    /// n = sum of multiplicities = deg P.
    std::size_t degree() const { return degree_; }

    const Node& node(std::size_t j) const { return nodes_.at(j); }
    const S& alpha(std::size_t j) const { return nodes_.at(j).alpha; }
    std::size_t multiplicity(std::size_t j) const { return nodes_.at(j).multiplicity; }

    std::span<const Node> nodes() const { return nodes_; }

    /// P expanded into the monomial basis.
    Polynomial<S> expanded() const {
        Polynomial<S> p = Polynomial<S>::constant(S(1));
        for (const Node& node : nodes_) p *= pow(linear_factor(node.alpha), node.multiplicity);
        return p;
    }

    /// True iff every multiplicity is 1 (the usual Vandermonde case).
    bool all_simple() const {
        for (const Node& node : nodes_)
            if (node.multiplicity != 1) return false;
        return true;
    }

    friend bool operator==(const NodeSystem& a, const NodeSystem& b) {
        if (a.nodes_.size() != b.nodes_.size()) return false;
        for (std::size_t j = 0; j < a.nodes_.size(); ++j)
            if (!(a.nodes_[j].alpha == b.nodes_[j].alpha) ||
                a.nodes_[j].multiplicity != b.nodes_[j].multiplicity)
                return false;
        return true;
    }

private:
    std::vector<Node> nodes_;
    std::size_t degree_ = 0;
};

/// Convenience builder: {(alpha, multiplicity), ...}.
template <FieldScalar S>
NodeSystem<S> make_system(std::initializer_list<std::pair<S, std::size_t>> nodes) {
    std::vector<typename NodeSystem<S>::Node> out;
    out.reserve(nodes.size());
    for (const auto& [alpha, m] : nodes) out.push_back({alpha, m});
    return NodeSystem<S>(std::move(out));
}

/// System with all multiplicities 1 over the given alphas.
template <FieldScalar S>
NodeSystem<S> simple_system(const std::vector<S>& alphas) {
    std::vector<typename NodeSystem<S>::Node> out;
    out.reserve(alphas.size());
    for (const S& alpha : alphas) out.push_back({alpha, 1});
    return NodeSystem<S>(std::move(out));
}

}  // namespace vander
