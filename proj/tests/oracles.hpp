#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the code paths it is used to check.

#include "chiy/chern_polynomial.hpp"
#include "chiy/partition.hpp"
#include "chiy/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using chiy::Integer;
using chiy::Rational;

/// p(w) by Euler's pentagonal number recurrence.
inline std::vector<Integer> partition_counts(int max_w)
{
    std::vector<Integer> p(static_cast<std::size_t>(max_w) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= max_w; ++n) {
        Integer acc = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > n)
                break;
            int sign = (k % 2 == 1) ? 1 : -1;
            acc += sign * p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n)
                acc += sign * p[static_cast<std::size_t>(n - g2)];
        }
        p[static_cast<std::size_t>(n)] = acc;
    }
    return p;
}

/// Bernoulli numbers B_0..B_m with B_1 = -1/2, from
/// sum_{k=0}^{m} binom(m+1, k) B_k = 0.
inline std::vector<Rational> bernoulli(int m)
{
    std::vector<Rational> b(static_cast<std::size_t>(m) + 1);
    b[0] = Rational(1);
    for (int n = 1; n <= m; ++n) {
        Rational acc;
        for (int k = 0; k < n; ++k)
            acc += Rational(chiy::binomial(n + 1, k)) * b[static_cast<std::size_t>(k)];
        b[static_cast<std::size_t>(n)] = -acc / Rational(n + 1);
    }
    return b;
}

/// Sparse multivariate polynomial with integer coefficients in explicit
/// variables x_1..x_v; exponent vectors have length v.
struct MultiPoly {
    int vars = 0;
    std::map<std::vector<int>, Rational> terms;

    static MultiPoly constant(int vars, const Rational& c)
    {
        MultiPoly p{vars, {}};
        if (!c.is_zero())
            p.terms[std::vector<int>(static_cast<std::size_t>(vars), 0)] = c;
        return p;
    }

    MultiPoly& operator+=(const MultiPoly& o)
    {
        for (const auto& [e, c] : o.terms) {
            auto& slot = terms[e];
            slot += c;
            if (slot.is_zero())
                terms.erase(e);
        }
        return *this;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
    {
        MultiPoly r{a.vars, {}};
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) {
                std::vector<int> e(ea);
                for (std::size_t i = 0; i < e.size(); ++i)
                    e[i] += eb[i];
                auto& slot = r.terms[e];
                slot += ca * cb;
                if (slot.is_zero())
                    r.terms.erase(e);
            }
        return r;
    }

    friend MultiPoly operator*(const Rational& s, MultiPoly p)
    {
        if (s.is_zero())
            return MultiPoly{p.vars, {}};
        for (auto& [e, c] : p.terms)
            c *= s;
        return p;
    }

    Rational coefficient(const std::vector<int>& e) const
    {
        auto it = terms.find(e);
        return it == terms.end() ? Rational() : it->second;
    }

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;
};

/// e_k(x_1..x_v) by summing over k-subsets.
inline MultiPoly elementary(int k, int vars)
{
    MultiPoly p{vars, {}};
    if (k > vars)
        return p;
    std::vector<int> mask(static_cast<std::size_t>(vars), 0);
    std::fill(mask.end() - k, mask.end(), 1);
    do {
        p.terms[mask] = Rational(1);
    } while (std::next_permutation(mask.begin(), mask.end()));
    return p;
}

/// m_lambda(x_1..x_v) by summing over distinct permutations of the padded
/// exponent vector.
inline MultiPoly monomial_symmetric(const chiy::Partition& lambda, int vars)
{
    MultiPoly p{vars, {}};
    if (lambda.length() > vars)
        return p;
    std::vector<int> e(static_cast<std::size_t>(vars), 0);
    std::copy(lambda.parts().begin(), lambda.parts().end(), e.begin());
    std::sort(e.begin(), e.end());
    do {
        p.terms[e] = Rational(1);
    } while (std::next_permutation(e.begin(), e.end()));
    return p;
}

/// Substitutes c_i -> e_i(x_1..x_v) into a Chern polynomial.
inline MultiPoly expand_in_roots(const chiy::ChernPolynomial& poly, int vars)
{
    MultiPoly out{vars, {}};
    for (const auto& [lambda, coeff] : poly.terms()) {
        MultiPoly term = MultiPoly::constant(vars, coeff);
        for (int part : lambda.parts())
            term = term * elementary(part, vars);
        out += term;
    }
    return out;
}

/// Values e_0..e_v at a point, from prod (1 + x_i t).
inline std::vector<Integer> elementary_at(const std::vector<Integer>& x)
{
    std::vector<Integer> e(x.size() + 1, 0);
    e[0] = 1;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t k = i + 1; k >= 1; --k)
            e[k] += x[i] * e[k - 1];
    return e;
}

/// m_lambda at a point, by direct summation over distinct exponent permutations.
inline Integer monomial_symmetric_at(const chiy::Partition& lambda, const std::vector<Integer>& x)
{
    const auto vars = x.size();
    if (static_cast<std::size_t>(lambda.length()) > vars)
        return 0;
    std::vector<int> e(vars, 0);
    std::copy(lambda.parts().begin(), lambda.parts().end(), e.begin());
    std::sort(e.begin(), e.end());
    Integer total = 0;
    do {
        Integer term = 1;
        for (std::size_t i = 0; i < vars; ++i) {
            Integer pw;
            mpz_pow_ui(pw.get_mpz_t(), x[i].get_mpz_t(), static_cast<unsigned long>(e[i]));
            term *= pw;
        }
        total += term;
    } while (std::next_permutation(e.begin(), e.end()));
    return total;
}

/// Random rational with numerator and denominator of up to `digits` digits.
inline Rational random_rational(std::mt19937_64& rng, int digits)
{
    auto random_digits = [&](bool nonzero) {
        std::uniform_int_distribution<int> len(1, digits), dig(0, 9);
        std::string s;
        int n = len(rng);
        for (int i = 0; i < n; ++i)
            s += static_cast<char>('0' + dig(rng));
        Integer v(s, 10);
        if (nonzero && v == 0)
            v = 1;
        return v;
    };
    Integer num = random_digits(false);
    if (rng() % 2)
        num = -num;
    return Rational(num, random_digits(true));
}

} // namespace oracle
