#include "simplexcert/rational.hpp"

#include <stdexcept>
#include <utility>

namespace simplexcert {

namespace {

bool is_decimal_integer(std::string_view text, bool allow_sign)
{
    if (allow_sign && !text.empty() && text.front() == '-')
        text.remove_prefix(1);
    if (text.empty())
        return false;
    for (char c : text)
        if (c < '0' || c > '9')
            return false;
    return true;
}

mpz_class parse_integer(std::string_view text, bool allow_sign)
{
    if (!is_decimal_integer(text, allow_sign))
        throw std::invalid_argument("malformed integer: '" + std::string(text) + "'");
    return mpz_class(std::string(text), 10);
}

} // namespace

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational::Rational(long numerator, long denominator)
{
    if (denominator == 0)
        throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
    value_.canonicalize();
}

Rational Rational::from_strings(std::string_view numerator, std::string_view denominator)
{
    mpz_class num = parse_integer(numerator, true);
    mpz_class den = parse_integer(denominator, true);
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    return Rational(mpq_class(num, den));
}

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(mpq_class(parse_integer(text, true)));
    // Sign belongs to the numerator only.
    auto den = text.substr(slash + 1);
    if (!is_decimal_integer(den, false))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    return from_strings(text.substr(0, slash), den);
}

std::string Rational::numerator_string() const { return value_.get_num().get_str(10); }

std::string Rational::denominator_string() const { return value_.get_den().get_str(10); }

std::string Rational::str() const
{
    if (is_integer())
        return numerator_string();
    return numerator_string() + "/" + denominator_string();
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::reciprocal() const
{
    if (is_zero())
        throw std::domain_error("reciprocal of zero");
    return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero())
        throw std::domain_error("division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational operator-(const Rational& value) { return Rational(mpq_class(-value.value_)); }

bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs)
{
    int c = cmp(lhs.value_, rhs.value_);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::optional<Rational> exact_sqrt(const Rational& value)
{
    if (value.sign() < 0)
        return std::nullopt;
    const mpz_class& num = value.raw().get_num();
    const mpz_class& den = value.raw().get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class root_num = sqrt(num);
    mpz_class root_den = sqrt(den);
    return Rational::from_strings(root_num.get_str(10), root_den.get_str(10));
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

} // namespace simplexcert
