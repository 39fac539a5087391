#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace simplexcert {

// Exact rational scalar backed by GMP. Values are always canonical: the
// denominator is positive and shares no factor with the numerator, so
// equality is structural.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(long numerator, long denominator);

    // Both strings are base-10 integers; the result is reduced.
    static Rational from_strings(std::string_view numerator, std::string_view denominator);
    // Accepts "p" or "p/q" with an optional leading '-'.
    static Rational parse(std::string_view text);

    std::string numerator_string() const;
    std::string denominator_string() const;
    // "p" for integers, "p/q" otherwise.
    std::string str() const;
    double to_double() const { return value_.get_d(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const;
    Rational abs() const;
    Rational reciprocal() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& value);

    friend bool operator==(const Rational& lhs, const Rational& rhs);
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class value);

    mpq_class value_;
};

// Square root when the argument is the square of a rational, otherwise empty.
std::optional<Rational> exact_sqrt(const Rational& value);

std::ostream& operator<<(std::ostream& os, const Rational& value);

} // namespace simplexcert
