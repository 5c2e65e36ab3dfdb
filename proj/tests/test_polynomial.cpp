#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "corpus.hpp"
#include "vander/polynomial.hpp"
#include "vander/rational.hpp"

using vander::Polynomial;
using vander::Rational;
using Poly = Polynomial<Rational>;

namespace {

Poly from_ints(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return Poly(std::move(c));
}

}  // namespace

TEST_CASE("normalization and degree") {
    CHECK(Poly().is_zero());
    CHECK(Poly().degree() == Poly::zero_degree);
    CHECK(from_ints({0, 0, 0}).is_zero());
    CHECK(from_ints({5}).degree() == 0);
    CHECK(from_ints({0, 0, 3, 0}).degree() == 2);
    CHECK(Poly::monomial(4).degree() == 4);
}

TEST_CASE("arithmetic") {
    const Poly x_minus_1 = vander::linear_factor(Rational(1));
    const Poly x_plus_1 = vander::linear_factor(Rational(-1));
    CHECK(x_minus_1 * x_plus_1 == from_ints({-1, 0, 1}));

    const Poly p = from_ints({2, -3, 7});
    CHECK(p + Poly() == p);
    CHECK(p - p == Poly());
    CHECK(p * Rational(0) == Poly());

    // (x-1)^3 (x-2) expanded; cross-checked by evaluation at 0..3.
    const Poly q = vander::pow(x_minus_1, 3) * vander::linear_factor(Rational(2));
    CHECK(q == from_ints({2, -7, 9, -5, 1}));
    for (long x = 0; x <= 3; ++x) {
        const Rational expected = vander::pow(Rational(x - 1), 3) * Rational(x - 2);
        CHECK(q(Rational(x)) == expected);
    }
}

TEST_CASE("evaluation") {
    CHECK(from_ints({-1, 0, 1})(Rational(3)) == Rational(8));
    CHECK(Poly()(Rational(9)) == Rational(0));
    const Poly q = vander::pow(vander::linear_factor(Rational(1)), 3) * vander::linear_factor(Rational(2));
    CHECK(q(Rational(5)) == Rational(192));
}

TEST_CASE("derivatives") {
    CHECK(vander::derivative(Poly::monomial(3)) == from_ints({0, 0, 3}));
    CHECK(vander::derivative(from_ints({0, 1}), 2) == Poly());
    CHECK(vander::derivative(Poly::monomial(3), 3)(Rational(0)) == Rational(6));
    CHECK(vander::derivative(from_ints({4}), 0) == from_ints({4}));
}

TEST_CASE("taylor coefficients by synthetic division") {
    const std::vector<Rational> jet = taylor_coefficients_at(Poly::monomial(2), Rational(1), 3);
    REQUIRE(jet.size() == 3);
    CHECK(jet[0] == Rational(1));
    CHECK(jet[1] == Rational(2));
    CHECK(jet[2] == Rational(1));

    // alpha = 0 returns the leading coefficients unchanged.
    const Poly p = from_ints({3, -1, 4, -1, 5});
    const std::vector<Rational> at_zero = taylor_coefficients_at(p, Rational(0), 3);
    CHECK(at_zero == std::vector<Rational>{Rational(3), Rational(-1), Rational(4)});

    // Root of multiplicity 3 yields leading zeros.
    const Poly q = vander::pow(vander::linear_factor(Rational(1)), 3) * vander::linear_factor(Rational(2));
    const std::vector<Rational> at_root = taylor_coefficients_at(q, Rational(1), 2);
    CHECK(at_root == std::vector<Rational>{Rational(0), Rational(0)});

    CHECK_THROWS_AS(taylor_coefficients_at(p, Rational(0), 0), std::invalid_argument);
}

TEST_CASE("series reciprocal jets") {
    const Poly x_minus_1 = vander::linear_factor(Rational(1));
    CHECK(series_reciprocal_at(x_minus_1, Rational(0), 3) ==
          std::vector<Rational>{Rational(-1), Rational(-1), Rational(-1)});

    const Poly x_plus_1 = vander::linear_factor(Rational(-1));
    CHECK(series_reciprocal_at(x_plus_1, Rational(0), 3) ==
          std::vector<Rational>{Rational(1), Rational(-1), Rational(1)});

    CHECK(series_reciprocal_at(from_ints({1, 1, 1}), Rational(0), 3) ==
          std::vector<Rational>{Rational(1), Rational(-1), Rational(0)});

    CHECK_THROWS_AS(series_reciprocal_at(x_minus_1, Rational(1), 2), std::domain_error);
}

TEST_CASE("taylor expansion round-trips through the shifted basis") {
    corpus::Rng rng(99);
    for (int trial = 0; trial < 80; ++trial) {
        const Poly p = corpus::random_polynomial(rng, 8);
        const Rational alpha = corpus::small_rational(rng);
        const std::size_t order = static_cast<std::size_t>(p.degree() + 2);
        const std::vector<Rational> jet = taylor_coefficients_at(p, alpha, order);
        CHECK(polynomial_from_taylor(jet, alpha) == p);
    }
}

TEST_CASE("reciprocal jet multiplies back to one") {
    corpus::Rng rng(1234);
    for (int trial = 0; trial < 80; ++trial) {
        const Poly p = corpus::random_polynomial(rng, 6);
        const Rational alpha = corpus::small_rational(rng);
        if (p(alpha) == Rational(0)) continue;
        const std::size_t order = 1 + static_cast<std::size_t>(rng.range(0, 7));
        const std::vector<Rational> recip = series_reciprocal_at(p, alpha, order);
        const std::vector<Rational> shifted = taylor_coefficients_at(p, alpha, order);
        // Truncated product of the two jets must be (1, 0, ..., 0).
        for (std::size_t k = 0; k < order; ++k) {
            Rational acc(0);
            for (std::size_t i = 0; i <= k; ++i) acc += shifted[i] * recip[k - i];
            CHECK(acc == Rational(k == 0 ? 1 : 0));
        }
    }
}

TEST_CASE("Leibniz rule on random pairs") {
    corpus::Rng rng(31415);
    for (int trial = 0; trial < 60; ++trial) {
        const Poly p = corpus::random_polynomial(rng, 6);
        const Poly q = corpus::random_polynomial(rng, 6);
        CHECK(vander::derivative(p * q) ==
              vander::derivative(p) * q + p * vander::derivative(q));
    }
}
