#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "corpus.hpp"
#include "vander/hermite.hpp"
#include "vander/node_system.hpp"
#include "vander/rational.hpp"
#include "vander/vandermonde.hpp"

using vander::make_system;
using vander::NodeSystem;
using vander::Polynomial;
using vander::Rational;
using Poly = Polynomial<Rational>;
using System = NodeSystem<Rational>;

namespace {

Poly from_ints(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return Poly(std::move(c));
}

bool delta_property_holds(const vander::HermiteBasis<Rational>& basis) {
    const System& system = basis.system();
    for (std::size_t j = 0; j < system.node_count(); ++j)
        for (std::size_t k = 0; k < system.multiplicity(j); ++k)
            for (std::size_t i = 0; i < system.node_count(); ++i) {
                const auto jet = taylor_coefficients_at(basis.at(j, k), system.alpha(i),
                                                        system.multiplicity(i));
                for (std::size_t l = 0; l < jet.size(); ++l) {
                    const Rational expected(i == j && l == k ? 1 : 0);
                    if (!(jet[l] == expected)) return false;
                }
            }
    return true;
}

}  // namespace

TEST_CASE("node system validation") {
    CHECK_THROWS_AS(make_system<Rational>({{Rational(1), 1}, {Rational(1), 2}}), std::invalid_argument);
    CHECK_THROWS_AS(make_system<Rational>({{Rational(1), 0}}), std::invalid_argument);
    CHECK_THROWS_AS(System({}), std::invalid_argument);
    CHECK_THROWS_WITH_AS(make_system<Rational>({{Rational(1, 2), 1}, {Rational(1, 2), 1}}),
                         "duplicate node alpha = 1/2", std::invalid_argument);

    const System system = make_system<Rational>({{Rational(0), 3}, {Rational(1), 1}});
    CHECK(system.degree() == 4);
    CHECK(system.node_count() == 2);
    CHECK(system.expanded() == from_ints({0, 0, 0, -1, 1}));
    CHECK_FALSE(system.all_simple());
}

TEST_CASE("cofactor polynomials") {
    const System example = make_system<Rational>({{Rational(0), 3}, {Rational(1), 1}});
    CHECK(cofactor(example, 1) == Poly::monomial(3));
    CHECK(cofactor(example, 0) == from_ints({-1, 1}));

    const System single = make_system<Rational>({{Rational(7), 2}});
    CHECK(cofactor(single, 0) == from_ints({1}));

    const System three = make_system<Rational>({{Rational(1), 2}, {Rational(2), 1}, {Rational(3), 1}});
    CHECK(cofactor(three, 0) == from_ints({6, -5, 1}));

    CHECK_THROWS_AS(cofactor(single, 1), std::invalid_argument);
}

TEST_CASE("basis polynomials of the worked two-node system") {
    const vander::HermiteBasis<Rational> basis =
        hermite_basis(make_system<Rational>({{Rational(0), 3}, {Rational(1), 1}}));
    CHECK(basis.at(1, 0) == Poly::monomial(3));           // (x-0)^3 / (1-0)^3
    CHECK(basis.at(0, 2) == from_ints({0, 0, 1, -1}));    // x^2 (1 - x)
    CHECK(basis.at(0, 0) == from_ints({1, 0, 0, -1}));
    CHECK(basis.at(0, 1) == from_ints({0, 1, 0, -1}));
}

TEST_CASE("single node basis is the shifted monomial family") {
    const Rational alpha(-5, 3);
    const vander::HermiteBasis<Rational> basis = hermite_basis(make_system<Rational>({{alpha, 4}}));
    for (std::size_t k = 0; k < 4; ++k)
        CHECK(basis.at(0, k) == vander::pow(vander::linear_factor(alpha), k));
}

TEST_CASE("delta property on corpus systems") {
    for (const System& system : corpus::systems())
        CHECK(delta_property_holds(hermite_basis(system)));
}

TEST_CASE("basis coefficient matrix is nonsingular") {
    // Elimination-oracle check of linear independence, small systems only.
    for (const System& system : corpus::systems()) {
        if (system.degree() > 8) continue;
        CHECK_NOTHROW(gauss_invert(invert_confluent(system)));
    }
}

TEST_CASE("interpolation matches prescribed jets") {
    const System system = make_system<Rational>({{Rational(0), 2}, {Rational(1), 2}});

    vander::JetData<Rational> zeros;
    for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k) zeros[{j, k}] = Rational(0);
    CHECK(interpolate(system, zeros).is_zero());

    vander::JetData<Rational> constants = zeros;
    constants[{0, 0}] = Rational(1);
    constants[{1, 0}] = Rational(1);
    CHECK(interpolate(system, constants) == from_ints({1}));

    vander::JetData<Rational> square = zeros;
    square[{1, 0}] = Rational(1);
    square[{1, 1}] = Rational(2);
    CHECK(interpolate(system, square) == Poly::monomial(2));
}

TEST_CASE("interpolation rejects malformed constraint sets") {
    const System system = make_system<Rational>({{Rational(0), 2}, {Rational(1), 1}});
    vander::JetData<Rational> data;
    data[{0, 0}] = Rational(1);
    CHECK_THROWS_AS(interpolate(system, data), std::invalid_argument);  // missing keys
    data[{0, 1}] = Rational(0);
    data[{1, 0}] = Rational(0);
    data[{2, 0}] = Rational(0);  // no such node
    CHECK_THROWS_AS(interpolate(system, data), std::invalid_argument);
    data.erase({2, 0});
    data[{0, 2}] = Rational(0);  // beyond the multiplicity
    CHECK_THROWS_AS(interpolate(system, data), std::invalid_argument);
}

TEST_CASE("interpolation round-trip and partition of unity") {
    corpus::Rng rng(555);
    for (const System& system : corpus::systems()) {
        const vander::HermiteBasis<Rational> basis = hermite_basis(system);

        Poly unity;
        for (std::size_t j = 0; j < system.node_count(); ++j) unity += basis.at(j, 0);
        CHECK(unity == from_ints({1}));

        for (int trial = 0; trial < 5; ++trial) {
            const Poly q = corpus::random_polynomial(rng, system.degree() - 1);
            CHECK(interpolate(basis, derivative_data(q, system)) == q);
        }
    }
}

TEST_CASE("partial fraction expansions") {
    SUBCASE("single node is the bare power") {
        const auto terms = partial_fractions(make_system<Rational>({{Rational(5, 2), 3}}));
        REQUIRE(terms.size() == 3);
        CHECK(terms[0].exponent == 3);
        CHECK(terms[0].coefficient == Rational(1));
        CHECK(terms[1].coefficient == Rational(0));
        CHECK(terms[2].coefficient == Rational(0));
    }

    SUBCASE("two simple nodes") {
        const auto terms = partial_fractions(make_system<Rational>({{Rational(0), 1}, {Rational(1), 1}}));
        REQUIRE(terms.size() == 2);
        CHECK(terms[0].node == 0);
        CHECK(terms[0].exponent == 1);
        CHECK(terms[0].coefficient == Rational(-1));
        CHECK(terms[1].node == 1);
        CHECK(terms[1].exponent == 1);
        CHECK(terms[1].coefficient == Rational(1));
    }

    SUBCASE("double node") {
        const System system = make_system<Rational>({{Rational(0), 2}, {Rational(1), 1}});
        const auto terms = partial_fractions(system);
        REQUIRE(terms.size() == 3);
        CHECK(terms[0].exponent == 2);
        CHECK(terms[0].coefficient == Rational(-1));
        CHECK(terms[1].exponent == 1);
        CHECK(terms[1].coefficient == Rational(-1));
        CHECK(terms[2].coefficient == Rational(1));
        // Spot value of 1/P at x = 2 equals the recombined terms there.
        CHECK(Rational(-1, 4) + Rational(-1, 2) + Rational(1) == Rational(1, 4));
    }
}

TEST_CASE("partial fractions recombine to one over the corpus") {
    for (const System& system : corpus::systems()) {
        const auto terms = partial_fractions(system);
        std::size_t expected_terms = system.degree();
        CHECK(terms.size() == expected_terms);  // zero coefficients retained
        CHECK(recombine_over_common_denominator(system, terms) == from_ints({1}));
    }
}
