#pragma once

// Dense univariate polynomials with rational coefficients.

#include "chiy/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace chiy {

class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& c) : coeffs_{c} { trim(); }
    Polynomial(int c) : Polynomial(Rational(c)) {}
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

    /// The monomial c * var^k.
    static Polynomial monomial(const Rational& c, std::size_t k)
    {
        std::vector<Rational> v(k + 1);
        v[k] = c;
        return Polynomial(std::move(v));
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Coefficient of var^k (zero beyond the degree).
    Rational operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational evaluate(const Rational& x) const
    {
        Rational acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) { return *this += -o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a)
    {
        for (auto& c : a.coeffs_)
            c = -c;
        return a;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero())
                continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(r));
    }

    Polynomial pow(unsigned k) const
    {
        Polynomial r(1), base = *this;
        while (k) {
            if (k & 1)
                r *= base;
            base *= base;
            k >>= 1;
        }
        return r;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Human-readable rendering in the given variable, e.g. "1 - y + y^2".
    std::string to_string(const std::string& var = "y") const
    {
        if (is_zero())
            return "0";
        std::string s;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            const Rational& c = coeffs_[k];
            if (c.is_zero())
                continue;
            Rational mag = c.sign() < 0 ? -c : c;
            if (s.empty())
                s += c.sign() < 0 ? "-" : "";
            else
                s += c.sign() < 0 ? " - " : " + ";
            bool unit = mag == Rational(1);
            if (k == 0 || !unit)
                s += mag.to_string();
            if (k > 0) {
                if (!unit)
                    s += '*';
                s += var;
                if (k > 1)
                    s += '^' + std::to_string(k);
            }
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back().is_zero())
            coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// Inverse of a unit in the coefficient ring, if it is one.
inline std::optional<Rational> unit_inverse(const Rational& c)
{
    if (c.is_zero())
        return std::nullopt;
    return c.inverse();
}

/// Only nonzero constants are units in Q[y].
inline std::optional<Polynomial> unit_inverse(const Polynomial& c)
{
    if (!c.is_constant() || c.is_zero())
        return std::nullopt;
    return Polynomial(c[0].inverse());
}

inline bool is_zero(const Rational& c) { return c.is_zero(); }
inline bool is_zero(const Polynomial& c) { return c.is_zero(); }

} // namespace chiy
