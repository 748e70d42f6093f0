#pragma once

// Power series in a formal variable x truncated at a fixed order: terms of
// x-degree above order() are discarded by every operation. The coefficient
// ring C is Rational or Polynomial (the latter for series whose coefficients
// are polynomials in a second variable y).

#include "chiy/polynomial.hpp"
#include "chiy/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace chiy {

/// Raised when a series division has no solution in the power series ring.
class SeriesDivisionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

template <typename C>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : coeffs_(checked_size(order)) {}

    TruncatedSeries(int order, std::vector<C> coeffs) : coeffs_(checked_size(order))
    {
        for (std::size_t k = 0; k < coeffs.size() && k < coeffs_.size(); ++k)
            coeffs_[k] = std::move(coeffs[k]);
    }

    /// The constant series c.
    static TruncatedSeries constant(int order, const C& c)
    {
        TruncatedSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    /// c * x^k (zero if k exceeds the order).
    static TruncatedSeries monomial(int order, const C& c, int k)
    {
        TruncatedSeries s(order);
        if (k >= 0 && k <= order)
            s.coeffs_[static_cast<std::size_t>(k)] = c;
        return s;
    }

    /// exp(a x) = sum (a x)^k / k!.
    static TruncatedSeries exp_linear(int order, const Rational& a)
    {
        TruncatedSeries s(order);
        Rational term(1);
        for (int k = 0; k <= order; ++k) {
            s.coeffs_[static_cast<std::size_t>(k)] = C(term);
            term = term * a / Rational(k + 1);
        }
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const C& operator[](std::size_t k) const { return coeffs_.at(k); }
    const std::vector<C>& coefficients() const { return coeffs_; }

    /// Lowest k with a nonzero coefficient, or order()+1 for the zero series.
    int valuation() const
    {
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            if (!is_zero(coeffs_[k]))
                return static_cast<int>(k);
        return order() + 1;
    }

    /// The series with x replaced by -x.
    TruncatedSeries negate_variable() const
    {
        TruncatedSeries r = *this;
        for (std::size_t k = 1; k < r.coeffs_.size(); k += 2)
            r.coeffs_[k] = -r.coeffs_[k];
        return r;
    }

    /// Same series viewed at a lower (or equal) truncation order.
    TruncatedSeries truncate(int order) const
    {
        if (order > this->order())
            throw std::invalid_argument("cannot raise truncation order");
        return TruncatedSeries(order, coeffs_);
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o)
    {
        shrink_to(o.order());
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            coeffs_[k] += o.coeffs_[k];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o)
    {
        shrink_to(o.order());
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            coeffs_[k] -= o.coeffs_[k];
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator-(TruncatedSeries a)
    {
        for (auto& c : a.coeffs_)
            c = -c;
        return a;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        int n = std::min(a.order(), b.order());
        TruncatedSeries r(n);
        for (int i = 0; i <= n; ++i) {
            const C& ai = a.coeffs_[static_cast<std::size_t>(i)];
            if (is_zero(ai))
                continue;
            for (int j = 0; i + j <= n; ++j)
                r.coeffs_[static_cast<std::size_t>(i + j)] += ai * b.coeffs_[static_cast<std::size_t>(j)];
        }
        return r;
    }

    friend TruncatedSeries operator*(const C& c, TruncatedSeries s)
    {
        for (auto& v : s.coeffs_)
            v = c * v;
        return s;
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    static std::size_t checked_size(int order)
    {
        if (order < 0)
            throw std::invalid_argument("truncation order must be nonnegative");
        return static_cast<std::size_t>(order) + 1;
    }

    void shrink_to(int order)
    {
        if (order < this->order())
            coeffs_.resize(static_cast<std::size_t>(order) + 1);
    }

    std::vector<C> coeffs_;
};

/// Quotient numerator / denominator.
///
/// When the denominator has valuation v > 0 (its lowest nonzero term is
/// c x^v) the common factor x^v is cancelled first; the numerator must then
/// vanish below x^v, and the quotient is only determined up to order
/// min(orders) - v. The leading coefficient c must be a unit of C.
template <typename C>
TruncatedSeries<C> series_divide(const TruncatedSeries<C>& numerator, const TruncatedSeries<C>& denominator)
{
    const int order = std::min(numerator.order(), denominator.order());
    const int v = denominator.valuation();
    if (v > order)
        throw SeriesDivisionError("division by a series that vanishes to the truncation order");
    for (int k = 0; k < v; ++k)
        if (!is_zero(numerator[static_cast<std::size_t>(k)]))
            throw SeriesDivisionError("numerator is not divisible by x^" + std::to_string(v));

    auto lead_inv = unit_inverse(denominator[static_cast<std::size_t>(v)]);
    if (!lead_inv)
        throw SeriesDivisionError("leading coefficient of the divisor is not invertible");

    const int out_order = order - v;
    std::vector<C> q(static_cast<std::size_t>(out_order) + 1);
    for (int k = 0; k <= out_order; ++k) {
        C acc = numerator[static_cast<std::size_t>(k + v)];
        for (int j = 1; j <= k; ++j)
            acc -= denominator[static_cast<std::size_t>(j + v)] * q[static_cast<std::size_t>(k - j)];
        q[static_cast<std::size_t>(k)] = *lead_inv * acc;
    }
    return TruncatedSeries<C>(out_order, std::move(q));
}

} // namespace chiy
