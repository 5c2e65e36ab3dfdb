#pragma once

#include <cctype>
#include <iosfwd>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <Eigen/Core>
#include <gmpxx.h>

#include "vander/scalar.hpp"

namespace vander {

/// Exact rational number, the default field realization. Always canonical:
/// positive denominator, gcd(|num|, den) = 1, zero stored as 0/1.
///
/// The wrapper materializes every arithmetic result (no gmpxx expression
/// templates escape), which keeps the type safe to use as an Eigen scalar.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}  // NOLINT: implicit integer embedding is intended
    Rational(int n) : value_(static_cast<long>(n)) {}
    Rational(const Integer& n) : value_(n) {}
    Rational(const Integer& num, const Integer& den) : value_(num, den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        value_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    const Integer numerator() const { return value_.get_num(); }
    const Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return mpq_sgn(value_.get_mpq_t()) == 0; }
    int sign() const { return mpq_sgn(value_.get_mpq_t()); }

    /// Multiplicative inverse; zero has none.
    Rational inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        return Rational(value_.get_den(), value_.get_num());
    }

    double to_double() const { return value_.get_d(); }

    /// Canonical text form: "p/q", or just "p" when q = 1.
    std::string str() const { return value_.get_str(); }

    /// Parses `[-]?digits` or `[-]?digits/digits`; anything else is an error,
    /// as is a zero denominator. The result is reduced to canonical form.
    static Rational parse(std::string_view text) {
        const auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rational(parse_integer(text), Integer(1));
        const Integer num = parse_integer(text.substr(0, slash));
        const std::string_view den_text = text.substr(slash + 1);
        if (!den_text.empty() && den_text.front() == '-')
            throw std::invalid_argument("malformed scalar '" + std::string(text) +
                                        "': sign belongs on the numerator");
        const Integer den = parse_integer(den_text);
        if (den == 0) throw std::invalid_argument("scalar '" + std::string(text) + "': zero denominator");
        return Rational(num, den);
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return wrap(a.value_ + b.value_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return wrap(a.value_ - b.value_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return wrap(a.value_ * b.value_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        return wrap(a.value_ / b.value_);
    }
    Rational operator-() const { return wrap(-value_); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.value_; }

private:
    static Rational wrap(mpq_class v) {
        Rational r;
        r.value_ = std::move(v);  // gmpxx arithmetic results are already canonical
        return r;
    }

    static Integer parse_integer(std::string_view text) {
        std::string_view digits = text;
        if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
        if (digits.empty())
            throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
        for (char c : digits)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
        return Integer(std::string(text), 10);
    }

    mpq_class value_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

template <>
struct ScalarTraits<Rational> {
    static constexpr bool is_exact = true;

    static Rational from_integer(const Integer& z) { return Rational(z); }
    static Rational parse(std::string_view text) { return Rational::parse(text); }
    static std::string to_string(const Rational& r) { return r.str(); }
    static double to_double(const Rational& r) { return r.to_double(); }
    static bool abs_less(const Rational& a, const Rational& b) { return abs(a) < abs(b); }
};

}  // namespace vander

namespace Eigen {

template <>
struct NumTraits<vander::Rational> : GenericNumTraits<vander::Rational> {
    using Real = vander::Rational;
    using NonInteger = vander::Rational;
    using Nested = vander::Rational;

    static inline Real epsilon() { return {}; }
    static inline Real dummy_precision() { return {}; }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 100,
        MulCost = 100,
    };
};

}  // namespace Eigen
