// Command-line front door: JSON payloads in (file or stdin), JSON or CSV out.
//
// Exit codes: 0 success, 2 invalid input, 3 numeric failure in the floating
// realization, 64 usage error.

#include <cmath>
#include <cstddef>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "vander/companion.hpp"
#include "vander/hermite.hpp"
#include "vander/matrix.hpp"
#include "vander/node_system.hpp"
#include "vander/rational.hpp"
#include "vander/scalar.hpp"
#include "vander/serialize.hpp"
#include "vander/vandermonde.hpp"

namespace {

using vander::json;

constexpr int kExitInvalidInput = 2;
constexpr int kExitNumericFailure = 3;
constexpr int kExitUsage = 64;

/// Floating-realization defect beyond tolerance, or a non-finite result.
struct NumericFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string command;
    std::string input_path;  // empty means stdin
    bool use_float = false;
    std::string format = "json";
    std::optional<double> tolerance;
};

struct CommandResult {
    json body;
    std::string csv;
    std::optional<double> residual;  // floating realization only
};

json load_payload(const Options& opt) {
    std::string text;
    if (opt.input_path.empty()) {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream file(opt.input_path);
        if (!file) throw std::invalid_argument("cannot open input file '" + opt.input_path + "'");
        std::ostringstream buffer;
        buffer << file.rdbuf();
        text = buffer.str();
    }
    return json::parse(text);
}

/// Identity-defect tolerance when none was given; grows with the matrix
/// order because Vandermonde conditioning does. Documented in the README as
/// a default, not a guarantee.
double default_tolerance(std::size_t n) {
    if (n <= 6) return 1e-9;
    if (n <= 8) return 1e-6;
    return 1e-3;
}

void gate_residual(double residual, std::size_t n, const Options& opt) {
    const double tol = opt.tolerance ? *opt.tolerance : default_tolerance(n);
    if (!std::isfinite(residual))
        throw NumericFailure("non-finite result in the floating realization");
    if (residual > tol)
        throw NumericFailure("residual " + vander::ScalarTraits<double>::to_string(residual) +
                             " exceeds tolerance " + vander::ScalarTraits<double>::to_string(tol));
}

/// Max |coefficient| of p - 1, the defect of an expansion that should
/// recombine to the constant 1.
double unit_defect(const vander::Polynomial<double>& p) {
    const vander::Polynomial<double> diff = p - vander::Polynomial<double>::constant(1.0);
    double worst = 0.0;
    for (double c : diff.coefficients()) worst = std::max(worst, std::abs(c));
    return worst;
}

template <vander::FieldScalar S>
CommandResult run_command(const Options& opt, const json& payload) {
    using vander::DenseMatrix;
    using vander::DenseVector;
    constexpr bool exact = vander::ScalarTraits<S>::is_exact;
    CommandResult result;

    if (opt.command == "invert" || opt.command == "invert-rs") {
        const auto system = vander::node_system_from_json<S>(payload);
        DenseMatrix<S> forward, inverse;
        if (opt.command == "invert") {
            inverse = vander::invert_confluent(system);
            if constexpr (!exact) forward = vander::build_confluent(system);
        } else {
            const vander::ExponentTable table = vander::exponent_table_from_json(payload);
            inverse = vander::invert_rs(system, table);
            if constexpr (!exact) forward = vander::build_rs(system, table);
        }
        if constexpr (!exact) {
            if (!vander::all_finite(inverse))
                throw NumericFailure("non-finite result in the floating realization");
            result.residual = vander::identity_residual(forward * inverse);
            gate_residual(*result.residual, system.degree(), opt);
        }
        result.body = vander::matrix_to_json(inverse);
        if (result.residual) result.body["residual"] = *result.residual;
        result.csv = vander::matrix_to_csv(inverse);
        return result;
    }

    if (opt.command == "invert-usual") {
        const auto alphas =
            vander::scalar_list_from_json<S>(vander::detail::require_field(payload, "alphas"), "alphas");
        const DenseMatrix<S> inverse = vander::invert_usual(alphas);
        if constexpr (!exact) {
            if (!vander::all_finite(inverse))
                throw NumericFailure("non-finite result in the floating realization");
            result.residual = vander::identity_residual(vander::build_usual(alphas) * inverse);
            gate_residual(*result.residual, alphas.size(), opt);
        }
        result.body = vander::matrix_to_json(inverse);
        if (result.residual) result.body["residual"] = *result.residual;
        result.csv = vander::matrix_to_csv(inverse);
        return result;
    }

    if (opt.command == "solve" || opt.command == "solve-usual") {
        DenseVector<S> x;
        DenseMatrix<S> forward;
        std::size_t n = 0;
        const DenseVector<S> rhs =
            vander::vector_from_json<S>(vander::detail::require_field(payload, "rhs"), "rhs");
        if (opt.command == "solve") {
            const auto system = vander::node_system_from_json<S>(payload);
            n = system.degree();
            x = vander::solve_confluent(system, rhs);
            if constexpr (!exact) forward = vander::build_confluent(system);
        } else {
            const auto alphas = vander::scalar_list_from_json<S>(
                vander::detail::require_field(payload, "alphas"), "alphas");
            n = alphas.size();
            x = vander::solve_usual(alphas, rhs);
            if constexpr (!exact) forward = vander::build_usual(alphas);
        }
        if constexpr (!exact) {
            if (!vander::all_finite(x))
                throw NumericFailure("non-finite result in the floating realization");
            result.residual = vander::max_abs(DenseVector<S>(forward * x - rhs));
            gate_residual(*result.residual, n, opt);
        }
        result.body = json{{"solution", vander::vector_to_json(x)}};
        if (result.residual) result.body["residual"] = *result.residual;
        result.csv = vander::vector_to_csv(x);
        return result;
    }

    if (opt.command == "partfrac") {
        const auto system = vander::node_system_from_json<S>(payload);
        const auto terms = vander::partial_fractions(system);
        result.body = vander::partial_fractions_to_json(terms);
        if constexpr (!exact) {
            result.residual = unit_defect(vander::recombine_over_common_denominator(system, terms));
            gate_residual(*result.residual, system.degree(), opt);
            result.body = json{{"terms", std::move(result.body)}, {"residual", *result.residual}};
        }
        result.csv = vander::partial_fractions_to_csv(terms);
        return result;
    }

    if (opt.command == "basis") {
        const auto system = vander::node_system_from_json<S>(payload);
        const auto basis = vander::hermite_basis(system);
        json polys = json::array();
        for (std::size_t j = 0; j < system.node_count(); ++j)
            for (std::size_t k = 0; k < system.multiplicity(j); ++k) {
                polys.push_back(vander::polynomial_to_json(basis.at(j, k)));
                result.csv += vander::polynomial_to_csv_line(basis.at(j, k));
            }
        if constexpr (!exact) {
            // Delta-property defect: jets of L_{jk} at every node against
            // the Kronecker pattern.
            double worst = 0.0;
            for (std::size_t j = 0; j < system.node_count(); ++j)
                for (std::size_t k = 0; k < system.multiplicity(j); ++k)
                    for (std::size_t i = 0; i < system.node_count(); ++i) {
                        const auto jet = vander::taylor_coefficients_at(
                            basis.at(j, k), system.alpha(i), system.multiplicity(i));
                        for (std::size_t l = 0; l < jet.size(); ++l) {
                            const double expected = (i == j && l == k) ? 1.0 : 0.0;
                            worst = std::max(worst, std::abs(jet[l] - expected));
                        }
                    }
            result.residual = worst;
            gate_residual(worst, system.degree(), opt);
            result.body = json{{"basis", std::move(polys)}, {"residual", worst}};
        } else {
            result.body = std::move(polys);
        }
        return result;
    }

    if (opt.command == "companion") {
        const auto system = vander::node_system_from_json<S>(payload);
        const DenseMatrix<S> c = vander::companion_matrix(vander::expand_monic(system));
        const DenseMatrix<S> j = vander::jordan_form(system);
        const DenseMatrix<S> v = vander::build_confluent(system);
        bool similarity_ok;
        if constexpr (exact) {
            similarity_ok = vander::verify_similarity(system).ok;
        } else {
            const DenseMatrix<S> defect = c * v - v * j;
            result.residual = vander::max_abs(defect);
            gate_residual(*result.residual, system.degree(), opt);
            const double tol = opt.tolerance ? *opt.tolerance : default_tolerance(system.degree());
            similarity_ok = *result.residual <= tol;
        }
        result.body = json{{"companion", vander::matrix_to_json(c)},
                           {"jordan", vander::matrix_to_json(j)},
                           {"vandermonde", vander::matrix_to_json(v)},
                           {"similarity_ok", similarity_ok}};
        if (result.residual) result.body["residual"] = *result.residual;
        result.csv = vander::matrix_to_csv(c) + "\n" + vander::matrix_to_csv(j) + "\n" +
                     vander::matrix_to_csv(v) + "\nsimilarity_ok," +
                     (similarity_ok ? "true" : "false") + "\n";
        return result;
    }

    throw std::logic_error("unhandled command " + opt.command);
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"Confluent Vandermonde matrices: exact construction, inversion, and solving"};
    app.require_subcommand(1);

    static const char* kCommands[] = {"invert",      "invert-rs", "invert-usual", "solve",
                                      "solve-usual", "partfrac",  "basis",        "companion"};
    static const char* kDescriptions[] = {
        "Invert the confluent Vandermonde matrix of a node system",
        "Invert an exponent-rescaled confluent Vandermonde matrix",
        "Invert the usual Vandermonde matrix of distinct alphas",
        "Solve the confluent Vandermonde system V x = rhs",
        "Solve the usual Vandermonde system V x = rhs",
        "Partial fraction expansion of 1/P for the node system",
        "Hermite interpolation basis polynomials in block order",
        "Companion matrix, Jordan form, and the similarity check"};
    for (std::size_t i = 0; i < std::size(kCommands); ++i) {
        CLI::App* sub = app.add_subcommand(kCommands[i], kDescriptions[i]);
        sub->add_option("--input", opt.input_path, "Input JSON file (default: stdin)");
        sub->add_flag("--float", opt.use_float, "Use the 64-bit floating realization");
        sub->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--tolerance", [&opt](const CLI::results_t& vals) {
                opt.tolerance = std::stod(vals.at(0));
                return true;
            },
            "Residual tolerance (floating realization only)");
        sub->callback([&opt, name = std::string(kCommands[i])] { opt.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (opt.tolerance && !opt.use_float) {
        std::cerr << "error: --tolerance requires --float\n";
        return kExitUsage;
    }

    try {
        const json payload = load_payload(opt);
        const CommandResult result = opt.use_float ? run_command<double>(opt, payload)
                                                   : run_command<vander::Rational>(opt, payload);
        if (opt.format == "csv")
            std::cout << result.csv;
        else
            std::cout << result.body.dump() << "\n";
        return 0;
    } catch (const NumericFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumericFailure;
    } catch (const json::exception& e) {
        std::cerr << "error: invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
}
