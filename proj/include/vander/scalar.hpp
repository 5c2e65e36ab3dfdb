#pragma once

#include <charconv>
#include <cmath>
#include <concepts>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>

#include <gmpxx.h>

namespace vander {

/// Arbitrary-precision integer, the subring in which factorials and
/// binomial coefficients are accumulated before embedding into a field.
using Integer = mpz_class;

/// Per-realization hooks of the field abstraction. Every scalar type used
/// by the library specializes this: `Rational` (exact, the default) and
/// `double` (opt-in floating realization).
template <typename S>
struct ScalarTraits;

/// An element of a characteristic-zero field: closed under +,-,*,/ with
/// exact equality, constructible from small integers, and described by a
/// ScalarTraits specialization.
template <typename S>
concept FieldScalar = requires(const S a, const S b, long k) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { a == b } -> std::convertible_to<bool>;
    S(k);
    { ScalarTraits<S>::is_exact } -> std::convertible_to<bool>;
    { ScalarTraits<S>::from_integer(Integer{}) } -> std::convertible_to<S>;
    { ScalarTraits<S>::parse(std::string_view{}) } -> std::convertible_to<S>;
    { ScalarTraits<S>::to_string(a) } -> std::convertible_to<std::string>;
};

/// 64-bit binary floating point realization. Parsing accepts decimal
/// literals as well as the `p/q` fraction syntax shared with the exact
/// realization, so the same payloads drive both.
template <>
struct ScalarTraits<double> {
    static constexpr bool is_exact = false;

    static double from_integer(const Integer& z) { return z.get_d(); }

    static double parse(std::string_view text) {
        if (auto slash = text.find('/'); slash != std::string_view::npos) {
            const double num = parse_decimal(text.substr(0, slash));
            const double den = parse_decimal(text.substr(slash + 1));
            if (den == 0.0) throw std::invalid_argument("scalar '" + std::string(text) + "': zero denominator");
            return num / den;
        }
        return parse_decimal(text);
    }

    /// Shortest representation that round-trips.
    static std::string to_string(double x) {
        char buf[64];
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
        if (ec != std::errc{}) throw std::runtime_error("float formatting failed");
        return std::string(buf, ptr);
    }

    static double to_double(double x) { return x; }

    static bool abs_less(double a, double b) { return std::abs(a) < std::abs(b); }

private:
    static double parse_decimal(std::string_view text) {
        double value = 0.0;
        const char* end = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(text.data(), end, value);
        if (ec != std::errc{} || ptr != end)
            throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
        return value;
    }
};

/// k! embedded into S, accumulated exactly over the integers.
template <FieldScalar S>
S factorial(unsigned long k) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return ScalarTraits<S>::from_integer(f);
}

/// Binomial coefficient C(q, p), with C(q, p) = 0 whenever p > q so that
/// band structure falls out of the formulas without special cases.
template <FieldScalar S>
S binomial(long q, long p) {
    if (p < 0 || q < 0 || p > q) return S(0);
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(p));
    return ScalarTraits<S>::from_integer(b);
}

/// x^e for a nonnegative exponent; pow(0, 0) = 1.
template <FieldScalar S>
S pow(const S& x, unsigned long e) {
    S result(1);
    S base = x;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

}  // namespace vander
