#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "vander/companion.hpp"
#include "vander/hermite.hpp"
#include "vander/matrix.hpp"
#include "vander/node_system.hpp"
#include "vander/polynomial.hpp"
#include "vander/scalar.hpp"
#include "vander/vandermonde.hpp"

namespace vander {

using json = nlohmann::json;

namespace detail {

inline const json& require_field(const json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
    return *it;
}

template <FieldScalar S>
S scalar_from_json(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("scalars must be JSON strings");
    return ScalarTraits<S>::parse(j.template get<std::string>());
}

}  // namespace detail

/// {"nodes":[{"alpha":"p/q","multiplicity":m},...]}
template <FieldScalar S>
NodeSystem<S> node_system_from_json(const json& j) {
    const json& nodes = detail::require_field(j, "nodes");
    if (!nodes.is_array() || nodes.empty())
        throw std::invalid_argument("\"nodes\" must be a non-empty array");
    std::vector<typename NodeSystem<S>::Node> out;
    out.reserve(nodes.size());
    for (const json& node : nodes) {
        const json& m = detail::require_field(node, "multiplicity");
        if (!m.is_number_unsigned() || m.template get<unsigned long>() == 0)
            throw std::invalid_argument("\"multiplicity\" must be a positive integer");
        out.push_back({detail::scalar_from_json<S>(detail::require_field(node, "alpha")),
                       m.template get<std::size_t>()});
    }
    return NodeSystem<S>(std::move(out));
}

/// "exponents":[[r11,...],...] — one row of nonnegative integers per node.
inline ExponentTable exponent_table_from_json(const json& j) {
    const json& rows = detail::require_field(j, "exponents");
    if (!rows.is_array()) throw std::invalid_argument("\"exponents\" must be an array of arrays");
    ExponentTable table;
    table.reserve(rows.size());
    for (const json& row : rows) {
        if (!row.is_array()) throw std::invalid_argument("\"exponents\" must be an array of arrays");
        std::vector<unsigned long> r;
        r.reserve(row.size());
        for (const json& e : row) {
            if (!e.is_number_unsigned())
                throw std::invalid_argument("exponents must be nonnegative integers");
            r.push_back(e.template get<unsigned long>());
        }
        table.push_back(std::move(r));
    }
    return table;
}

template <FieldScalar S>
std::vector<S> scalar_list_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument(std::string("\"") + what + "\" must be a non-empty array");
    std::vector<S> out;
    out.reserve(j.size());
    for (const json& entry : j) out.push_back(detail::scalar_from_json<S>(entry));
    return out;
}

template <FieldScalar S>
DenseVector<S> vector_from_json(const json& j, const char* what) {
    const std::vector<S> values = scalar_list_from_json<S>(j, what);
    DenseVector<S> v(static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Eigen::Index>(i)) = values[i];
    return v;
}

/// {"rows":n,"cols":n,"entries":[["p/q",...],...]} — row-major.
template <FieldScalar S>
json matrix_to_json(const DenseMatrix<S>& m) {
    json entries = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(ScalarTraits<S>::to_string(m(i, j)));
        entries.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

template <FieldScalar S>
json vector_to_json(const DenseVector<S>& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(ScalarTraits<S>::to_string(v(i)));
    return out;
}

/// Ascending coefficients as strings; the zero polynomial is [].
template <FieldScalar S>
json polynomial_to_json(const Polynomial<S>& p) {
    json out = json::array();
    for (const S& c : p.coefficients()) out.push_back(ScalarTraits<S>::to_string(c));
    return out;
}

/// [{"node":j,"exponent":e,"coefficient":"p/q"},...] with 1-based node
/// indices.
template <FieldScalar S>
json partial_fractions_to_json(const PartialFractionExpansion<S>& terms) {
    json out = json::array();
    for (const PartialFractionTerm<S>& term : terms)
        out.push_back(json{{"node", term.node + 1},
                           {"exponent", term.exponent},
                           {"coefficient", ScalarTraits<S>::to_string(term.coefficient)}});
    return out;
}

/// {"ok":bool,"first_mismatch":{"row":i,"col":j,"lhs":...,"rhs":...}|null}
/// with 1-based positions.
template <FieldScalar S>
json report_to_json(const SimilarityReport<S>& report) {
    json j{{"ok", report.ok}, {"first_mismatch", nullptr}};
    if (report.first_mismatch) {
        const auto& mm = *report.first_mismatch;
        j["first_mismatch"] = json{{"row", mm.row + 1},
                                   {"col", mm.col + 1},
                                   {"lhs", ScalarTraits<S>::to_string(mm.lhs)},
                                   {"rhs", ScalarTraits<S>::to_string(mm.rhs)}};
    }
    return j;
}

/// One matrix row per line, comma-separated scalar strings.
template <FieldScalar S>
std::string matrix_to_csv(const DenseMatrix<S>& m) {
    std::string out;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) out += ',';
            out += ScalarTraits<S>::to_string(m(i, j));
        }
        out += '\n';
    }
    return out;
}

template <FieldScalar S>
std::string vector_to_csv(const DenseVector<S>& v) {
    std::string out;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += ScalarTraits<S>::to_string(v(i));
    }
    out += '\n';
    return out;
}

template <FieldScalar S>
std::string polynomial_to_csv_line(const Polynomial<S>& p) {
    std::string out;
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
        if (i) out += ',';
        out += ScalarTraits<S>::to_string(p.coefficients()[i]);
    }
    out += '\n';
    return out;
}

template <FieldScalar S>
std::string partial_fractions_to_csv(const PartialFractionExpansion<S>& terms) {
    std::string out;
    for (const PartialFractionTerm<S>& term : terms) {
        out += std::to_string(term.node + 1);
        out += ',';
        out += std::to_string(term.exponent);
        out += ',';
        out += ScalarTraits<S>::to_string(term.coefficient);
        out += '\n';
    }
    return out;
}

}  // namespace vander
