#pragma once

// Exact rational numbers backed by GMP.
//
// The value is always kept in canonical form: positive denominator and
// numerator/denominator coprime. There is no floating point anywhere in
// the library, and this type deliberately offers no conversion to double.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chiy {

using Integer = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(int v) : value_(v) {}
    Rational(long v) : value_(v) {}
    Rational(long long v) : value_(static_cast<long>(v)) {}
    Rational(const Integer& v) : value_(v) {}

    Rational(const Integer& num, const Integer& den)
    {
        if (den == 0)
            throw std::domain_error("rational with zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    /// Parses "p" or "p/q" (optional leading '-' on p only, q > 0).
    static Rational parse(std::string_view text)
    {
        auto valid_digits = [](std::string_view s, bool allow_sign) {
            if (allow_sign && !s.empty() && s.front() == '-')
                s.remove_prefix(1);
            if (s.empty())
                return false;
            for (char c : s)
                if (c < '0' || c > '9')
                    return false;
            return true;
        };
        auto slash = text.find('/');
        std::string_view num = text.substr(0, slash);
        if (!valid_digits(num, true))
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        if (slash == std::string_view::npos)
            return Rational(Integer{std::string(num)});
        std::string_view den = text.substr(slash + 1);
        if (!valid_digits(den, false))
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        Integer d{std::string(den)};
        if (d == 0)
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return Rational(Integer{std::string(num)}, d);
    }

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational inverse() const
    {
        if (is_zero())
            throw std::domain_error("inverse of zero");
        Rational r;
        r.value_ = 1 / value_;
        return r;
    }

    /// "p" when integral, "p/q" otherwise.
    std::string to_string() const { return value_.get_str(); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero())
            throw std::domain_error("division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a)
    {
        Rational r;
        r.value_ = -a.value_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_;
};

inline Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Integer factorial(long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

/// (-1)^k
inline int sign_power(long k) { return (k % 2 == 0) ? 1 : -1; }

} // namespace chiy

template <>
struct std::hash<chiy::Rational> {
    std::size_t operator()(const chiy::Rational& r) const noexcept
    {
        return std::hash<std::string>{}(r.to_string());
    }
};
