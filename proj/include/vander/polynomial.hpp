#pragma once

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vander/scalar.hpp"

namespace vander {

/// Dense univariate polynomial with ascending coefficients. The zero
/// polynomial is the empty sequence; every constructor normalizes by
/// stripping trailing zero coefficients, so equality is plain sequence
/// equality.
template <FieldScalar S>
class Polynomial {
public:
    /// degree() of the zero polynomial; stands in for "minus infinity"
    /// (real degrees are always >= 0).
    static constexpr int zero_degree = -1;

    Polynomial() = default;
    explicit Polynomial(std::vector<S> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

    static Polynomial constant(S value) { return Polynomial(std::vector<S>{std::move(value)}); }

    /// c * x^degree
    static Polynomial monomial(std::size_t degree, S coefficient = S(1)) {
        std::vector<S> c(degree + 1, S(0));
        c.back() = std::move(coefficient);
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<S>& coefficients() const { return coeffs_; }

    /// Coefficient of x^i; zero beyond the degree.
    S coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : S(0); }

    /// Horner evaluation.
    S operator()(const S& x) const {
        S acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    friend bool operator==(const Polynomial& p, const Polynomial& q) {
        if (p.coeffs_.size() != q.coeffs_.size()) return false;
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
            if (!(p.coeffs_[i] == q.coeffs_[i])) return false;
        return true;
    }
    friend bool operator!=(const Polynomial& p, const Polynomial& q) { return !(p == q); }

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
        std::vector<S> c(std::max(p.coeffs_.size(), q.coeffs_.size()), S(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coefficient(i) + q.coefficient(i);
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& p, const Polynomial& q) {
        std::vector<S> c(std::max(p.coeffs_.size(), q.coeffs_.size()), S(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coefficient(i) - q.coefficient(i);
        return Polynomial(std::move(c));
    }

    Polynomial operator-() const {
        std::vector<S> c(coeffs_.size(), S(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
        if (p.is_zero() || q.is_zero()) return Polynomial();
        std::vector<S> c(p.coeffs_.size() + q.coeffs_.size() - 1, S(0));
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
                c[i + j] += p.coeffs_[i] * q.coeffs_[j];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& p, const S& k) {
        std::vector<S> c(p.coeffs_.size(), S(0));
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i) c[i] = p.coeffs_[i] * k;
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const S& k, const Polynomial& p) { return p * k; }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        os << "poly[";
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
            if (i) os << ", ";
            os << ScalarTraits<S>::to_string(p.coeffs_[i]);
        }
        return os << "]";
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == S(0)) coeffs_.pop_back();
    }

    std::vector<S> coeffs_;
};

/// x - alpha
template <FieldScalar S>
Polynomial<S> linear_factor(const S& alpha) {
    return Polynomial<S>(std::vector<S>{-alpha, S(1)});
}

template <FieldScalar S>
Polynomial<S> pow(const Polynomial<S>& p, unsigned long e) {
    Polynomial<S> result = Polynomial<S>::constant(S(1));
    for (unsigned long i = 0; i < e; ++i) result *= p;
    return result;
}

/// order-th derivative (order 0 is the polynomial itself).
template <FieldScalar S>
Polynomial<S> derivative(const Polynomial<S>& p, unsigned long order = 1) {
    std::vector<S> c = p.coefficients();
    for (unsigned long pass = 0; pass < order && !c.empty(); ++pass) {
        std::vector<S> d(c.size() - 1, S(0));
        for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * S(static_cast<long>(i));
        c = std::move(d);
    }
    return Polynomial<S>(std::move(c));
}

/// First `order` coefficients of p in the (x - alpha) basis, i.e.
/// (p(alpha), p'(alpha)/1!, ..., p^(order-1)(alpha)/(order-1)!),
/// computed by repeated synthetic division rather than differentiation.
template <FieldScalar S>
std::vector<S> taylor_coefficients_at(const Polynomial<S>& p, const S& alpha, std::size_t order) {
    if (order == 0) throw std::invalid_argument("taylor_coefficients_at: order must be >= 1");
    std::vector<S> work = p.coefficients();
    std::vector<S> jet;
    jet.reserve(order);
    for (std::size_t k = 0; k < order; ++k) {
        if (work.empty()) {
            jet.push_back(S(0));
            continue;
        }
        // Divide by (x - alpha): quotient replaces work, remainder is the jet entry.
        std::vector<S> quotient(work.size() - 1, S(0));
        S carry = work.back();
        for (std::size_t i = work.size() - 1; i-- > 0;) {
            quotient[i] = carry;
            carry = work[i] + alpha * carry;
        }
        jet.push_back(carry);
        work = std::move(quotient);
    }
    return jet;
}

/// Rebuilds sum_i jet[i] * (x - alpha)^i in the monomial basis (the inverse
/// of taylor_coefficients_at when the jet is long enough).
template <FieldScalar S>
Polynomial<S> polynomial_from_taylor(const std::vector<S>& jet, const S& alpha) {
    const Polynomial<S> shift = linear_factor(alpha);
    Polynomial<S> result;
    for (std::size_t i = jet.size(); i-- > 0;) result = result * shift + Polynomial<S>::constant(jet[i]);
    return result;
}

/// Jet of 1/p at alpha: (g(alpha), g'(alpha)/1!, ..., g^(order-1)(alpha)/(order-1)!)
/// with g = 1/p, obtained by long division of 1 by the shifted coefficients
/// of p. Requires p(alpha) != 0.
template <FieldScalar S>
std::vector<S> series_reciprocal_at(const Polynomial<S>& p, const S& alpha, std::size_t order) {
    if (order == 0) throw std::invalid_argument("series_reciprocal_at: order must be >= 1");
    const std::vector<S> a = taylor_coefficients_at(p, alpha, order);
    if (a[0] == S(0))
        throw std::domain_error("series_reciprocal_at: reciprocal undefined, p(alpha) = 0");
    std::vector<S> b(order, S(0));
    b[0] = S(1) / a[0];
    for (std::size_t k = 1; k < order; ++k) {
        S acc(0);
        for (std::size_t i = 1; i <= k; ++i) acc += a[i] * b[k - i];
        b[k] = -acc / a[0];
    }
    return b;
}

}  // namespace vander
