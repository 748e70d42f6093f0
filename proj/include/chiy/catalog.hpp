#pragma once

// Reference manifolds: projective spaces, complex tori, smooth
// hypersurfaces, products, and compact quotients built from a compact dual
// by proportionality of Chern numbers.

#include "chiy/genus.hpp"
#include "chiy/manifold.hpp"
#include "chiy/partition.hpp"
#include "chiy/rational.hpp"
#include "chiy/truncated_series.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace chiy {

namespace detail {

// Fills every weight-n Chern number from the individual Chern classes
// c_i = classes[i] * generator^i, with generator^n[M] = top.
inline ManifoldChernData from_chern_classes(std::string name, int n, const std::vector<Rational>& classes,
                                            const Rational& top)
{
    ManifoldChernData m{std::move(name), n, {}, std::nullopt};
    for (const Partition& p : partitions(n)) {
        Rational v = top;
        for (int part : p.parts())
            v *= classes[static_cast<std::size_t>(part)];
        m.chern_numbers.emplace(p, v);
    }
    return m;
}

inline void check_dim(int n)
{
    if (n < 1)
        throw std::invalid_argument("dimension must be at least 1");
}

} // namespace detail

/// CP^n: total Chern class (1+h)^{n+1}, h^n[CP^n] = 1.
inline ManifoldChernData projective_space(int n)
{
    detail::check_dim(n);
    std::vector<Rational> classes;
    for (int i = 0; i <= n; ++i)
        classes.emplace_back(binomial(n + 1, i));
    auto m = detail::from_chern_classes("CP^" + std::to_string(n), n, classes, Rational(1));
    HodgeGrid h(static_cast<std::size_t>(n) + 1, std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 0));
    for (int p = 0; p <= n; ++p)
        h[static_cast<std::size_t>(p)][static_cast<std::size_t>(p)] = 1;
    m.hodge = std::move(h);
    return m;
}

/// Complex torus of dimension n: all Chern numbers zero.
inline ManifoldChernData complex_torus(int n)
{
    detail::check_dim(n);
    ManifoldChernData m{"T^" + std::to_string(n), n, {}, std::nullopt};
    for (const Partition& p : partitions(n))
        m.chern_numbers.emplace(p, Rational());
    HodgeGrid h(static_cast<std::size_t>(n) + 1, std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1));
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q)
            h[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = Integer(binomial(n, p) * binomial(n, q)).get_si();
    m.hodge = std::move(h);
    return m;
}

/// Smooth degree-d hypersurface X in CP^{n+1}:
/// c(X) = (1+h)^{n+2} / (1+dh), and h^n[X] = d.
inline ManifoldChernData hypersurface(int n, int d)
{
    detail::check_dim(n);
    if (d < 1)
        throw std::invalid_argument("hypersurface degree must be at least 1");
    using Series = TruncatedSeries<Rational>;
    std::vector<Rational> ambient;
    for (int i = 0; i <= n; ++i)
        ambient.emplace_back(binomial(n + 2, i));
    Series normal(n, {Rational(1), Rational(d)});
    Series total = series_divide(Series(n, ambient), normal);
    return detail::from_chern_classes("X_" + std::to_string(d) + "^" + std::to_string(n), n, total.coefficients(),
                                      Rational(d));
}

/// Chern numbers of a compact quotient X/G from its compact dual:
/// c_lambda(X/G) = todd * c_lambda(dual), todd = chi^0(X/G).
inline ManifoldChernData proportionality(const ManifoldChernData& dual, const Rational& todd)
{
    if (todd.is_zero())
        throw std::invalid_argument("proportionality factor (a Todd genus) must be nonzero");
    ManifoldChernData m{"proportionality(" + dual.name + ", " + todd.to_string() + ")", dual.dim, {}, std::nullopt};
    for (const auto& [p, v] : dual.chern_numbers)
        m.chern_numbers.emplace(p, v * todd);
    return m;
}

/// Compact ball quotient B^n/G with chi^0 = (-1)^n; its compact dual is CP^n.
inline ManifoldChernData ball_quotient(int n)
{
    detail::check_dim(n);
    auto m = proportionality(projective_space(n), Rational(sign_power(n)));
    m.name = "ball_quotient(" + std::to_string(n) + ")";
    return m;
}

namespace detail {

// Enumerates splits c_{k} -> c_a(M) c_{k-a}(N) of each factor of lambda and
// accumulates the products of the M- and N-part Chern numbers whose weights
// match dim M and dim N exactly.
inline void accumulate_whitney(const std::vector<int>& parts, std::size_t idx, int m_weight,
                               std::vector<int>& m_parts, std::vector<int>& n_parts, const ManifoldChernData& a,
                               const ManifoldChernData& b, Rational& acc)
{
    if (m_weight > a.dim)
        return;
    if (idx == parts.size()) {
        if (m_weight != a.dim)
            return;
        Rational va = a.chern_number(Partition::from_unsorted(m_parts));
        if (va.is_zero())
            return;
        acc += va * b.chern_number(Partition::from_unsorted(n_parts));
        return;
    }
    const int k = parts[idx];
    for (int i = std::max(0, k - b.dim); i <= std::min(k, a.dim); ++i) {
        if (i > 0)
            m_parts.push_back(i);
        if (k - i > 0)
            n_parts.push_back(k - i);
        accumulate_whitney(parts, idx + 1, m_weight + i, m_parts, n_parts, a, b, acc);
        if (k - i > 0)
            n_parts.pop_back();
        if (i > 0)
            m_parts.pop_back();
    }
}

} // namespace detail

/// M x N via the Whitney sum formula; Hodge diamonds by Kuenneth.
inline ManifoldChernData product(const ManifoldChernData& a, const ManifoldChernData& b)
{
    if (a.dim < 1 || b.dim < 1)
        throw std::invalid_argument("product factors need dimension >= 1");
    if (a.chern_numbers.empty() || b.chern_numbers.empty())
        throw std::invalid_argument("product factors need Chern data");
    const int n = a.dim + b.dim;
    ManifoldChernData m{a.name + " x " + b.name, n, {}, std::nullopt};
    for (const Partition& p : partitions(n)) {
        Rational acc;
        std::vector<int> mp, np;
        detail::accumulate_whitney(p.parts(), 0, 0, mp, np, a, b, acc);
        m.chern_numbers.emplace(p, acc);
    }
    if (a.hodge && b.hodge) {
        const auto& ha = *a.hodge;
        const auto& hb = *b.hodge;
        HodgeGrid h(static_cast<std::size_t>(n) + 1, std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 0));
        for (std::size_t p1 = 0; p1 < ha.size(); ++p1)
            for (std::size_t q1 = 0; q1 < ha.size(); ++q1)
                for (std::size_t p2 = 0; p2 < hb.size(); ++p2)
                    for (std::size_t q2 = 0; q2 < hb.size(); ++q2)
                        h[p1 + p2][q1 + q2] += ha[p1][q1] * hb[p2][q2];
        m.hodge = std::move(h);
    }
    return m;
}

} // namespace chiy
