#pragma once

// The chi_y-genus as a universal polynomial in Chern numbers.
//
// By Hirzebruch-Riemann-Roch, chi_y(M) is the integral over M of
// prod_i Q(x_i), where x_i are the Chern roots and
//
//     Q(x) = x (1 + y e^{-x}) / (1 - e^{-x}) = sum_k q_k(y) x^k.
//
// Only the weight-n part of the product survives integration. Writing it
// in the monomial symmetric basis, the coefficient of m_lambda is
// q_0^{n - len(lambda)} * prod_j q_{lambda_j}; converting each m_lambda to
// elementary symmetric functions (Chern classes) gives the universal
// polynomials chi^p, the coefficients of y^p.
//
// K_j are the Taylor coefficients at y = -1:
//     chi_y = sum_j K_j (y + 1)^j,
// obtained by the exact substitution y = t - 1.

#include "chiy/chern_polynomial.hpp"
#include "chiy/manifold.hpp"
#include "chiy/matrix.hpp"
#include "chiy/partition.hpp"
#include "chiy/polynomial.hpp"
#include "chiy/rational.hpp"
#include "chiy/symmetric.hpp"
#include "chiy/truncated_series.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chiy {

/// chi_y = sum_p chi^p y^p with exactly dim+1 coefficients. C is
/// ChernPolynomial for the universal form and Rational once evaluated.
template <typename C>
struct GenusPolynomial {
    int dim = 0;
    std::vector<C> coeffs;

    const C& operator[](std::size_t p) const { return coeffs.at(p); }

    friend bool operator==(const GenusPolynomial&, const GenusPolynomial&) = default;
};

using UniversalGenus = GenusPolynomial<ChernPolynomial>;
using EvaluatedGenus = GenusPolynomial<Rational>;

inline Polynomial to_polynomial(const EvaluatedGenus& g) { return Polynomial(g.coeffs); }

inline Rational evaluate_at(const EvaluatedGenus& g, const Rational& y) { return to_polynomial(g).evaluate(y); }

/// Every chi^p is an integer (necessary for genuine manifold data).
inline bool all_integral(const EvaluatedGenus& g)
{
    for (const auto& c : g.coeffs)
        if (!c.is_integer())
            return false;
    return true;
}

/// Re-expansion about y = -1: returns K with sum_p a_p y^p = sum_j K_j (y+1)^j,
/// K_j = sum_{p >= j} binom(p, j) (-1)^{p-j} a_p.
template <typename C>
std::vector<C> expand_about_minus_one(const std::vector<C>& a)
{
    std::vector<C> k;
    k.reserve(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        C acc = Rational(0) * a[j];
        for (std::size_t p = j; p < a.size(); ++p) {
            Integer w = binomial(static_cast<long>(p), static_cast<long>(j)) * sign_power(static_cast<long>(p - j));
            acc += Rational(w) * a[p];
        }
        k.push_back(std::move(acc));
    }
    return k;
}

/// Coefficients q_0, ..., q_n of Q(x) as polynomials in y.
inline std::vector<Polynomial> q_coefficients(int n)
{
    if (n < 1)
        throw std::invalid_argument("dimension must be at least 1");
    using Series = TruncatedSeries<Polynomial>;
    // x / (1 - e^{-x}); one extra order is consumed by cancelling x.
    Series x = Series::monomial(n + 1, Polynomial(1), 1);
    Series one_minus_exp = Series::constant(n + 1, Polynomial(1)) - Series::exp_linear(n + 1, Rational(-1));
    Series todd_factor = series_divide(x, one_minus_exp);

    const Polynomial y = Polynomial::monomial(Rational(1), 1);
    Series twist = Series::constant(n, Polynomial(1)) + y * Series::exp_linear(n, Rational(-1));
    Series q = todd_factor * twist;
    return q.coefficients();
}

namespace detail {

inline UniversalGenus compute_chi_y_universal(int n)
{
    auto q = q_coefficients(n);
    UniversalGenus g{n, std::vector<ChernPolynomial>(static_cast<std::size_t>(n) + 1, ChernPolynomial(n))};
    for (const Partition& lambda : partitions(n)) {
        Polynomial coef = q[0].pow(static_cast<unsigned>(n - lambda.length()));
        for (int part : lambda.parts())
            coef *= q[static_cast<std::size_t>(part)];
        if (coef.is_zero())
            continue;
        ChernPolynomial m = monomial_to_elementary(lambda, n);
        for (int p = 0; p <= coef.degree(); ++p)
            if (!coef[static_cast<std::size_t>(p)].is_zero())
                g.coeffs[static_cast<std::size_t>(p)] += coef[static_cast<std::size_t>(p)] * m;
    }
    return g;
}

template <typename T>
class DimensionCache {
public:
    template <typename F>
    std::shared_ptr<const T> get(int n, F&& build)
    {
        {
            std::lock_guard lock(mutex_);
            if (auto it = entries_.find(n); it != entries_.end())
                return it->second;
        }
        auto value = std::make_shared<const T>(build(n));
        std::lock_guard lock(mutex_);
        return entries_.try_emplace(n, std::move(value)).first->second;
    }

private:
    std::mutex mutex_;
    std::map<int, std::shared_ptr<const T>> entries_;
};

} // namespace detail

/// Universal chi_y-genus of complex dimension n. Cached per n.
inline const UniversalGenus& chi_y_universal(int n)
{
    if (n < 1)
        throw std::invalid_argument("dimension must be at least 1");
    static detail::DimensionCache<UniversalGenus> cache;
    // entries are never evicted, so the reference stays valid
    return *cache.get(n, detail::compute_chi_y_universal);
}

/// Universal polynomial computing chi^p(M).
inline const ChernPolynomial& chi_p(int n, int p)
{
    if (p < 0 || p > n)
        throw std::out_of_range("chi^p index " + std::to_string(p) + " outside [0, " + std::to_string(n) + "]");
    return chi_y_universal(n).coeffs[static_cast<std::size_t>(p)];
}

struct KTable {
    int dim = 0;
    std::vector<ChernPolynomial> entries;

    const ChernPolynomial& operator[](std::size_t j) const { return entries.at(j); }
};

inline const KTable& k_table(int n)
{
    if (n < 1)
        throw std::invalid_argument("dimension must be at least 1");
    static detail::DimensionCache<KTable> cache;
    return *cache.get(n, [](int dim) { return KTable{dim, expand_about_minus_one(chi_y_universal(dim).coeffs)}; });
}

// ---------------------------------------------------------------------------
// Closed forms for K_0 .. K_4 in terms of c_n, c_1 c_{n-1}, ...

namespace detail {

struct ClosedFormTerm {
    Rational coeff;
    std::vector<int> chern_indices;
};

// Materializes sum coeff * c_{i1} c_{i2} ... at weight n with c_0 = 1 and
// c_k = 0 for k < 0 or k > n.
inline ChernPolynomial materialize(int n, const std::vector<ClosedFormTerm>& terms)
{
    ChernPolynomial out(n);
    for (const auto& t : terms) {
        std::vector<int> parts;
        bool vanishes = false;
        for (int i : t.chern_indices) {
            if (i < 0 || i > n)
                vanishes = true;
            else if (i > 0)
                parts.push_back(i);
        }
        if (vanishes)
            continue;
        Partition p = Partition::from_unsorted(std::move(parts));
        if (p.weight() != n)
            throw std::logic_error("closed-form term of wrong weight");
        out.add_term(p, t.coeff);
    }
    return out;
}

} // namespace detail

/// Closed form of K_j, 0 <= j <= 4, at dimension n.
inline ChernPolynomial k_closed_form(int n, int j)
{
    using detail::ClosedFormTerm;
    const Rational N(n);
    std::vector<ClosedFormTerm> terms;
    switch (j) {
    case 0:
        terms = {{Rational(1), {n}}};
        break;
    case 1:
        terms = {{-N / Rational(2), {n}}};
        break;
    case 2: {
        Rational s = Rational(1, 12);
        terms = {{s * N * (Rational(3) * N - Rational(5)) / Rational(2), {n}}, {s, {1, n - 1}}};
        break;
    }
    case 3: {
        Rational s = Rational(-1, 24);
        terms = {{s * N * (N - Rational(2)) * (N - Rational(3)) / Rational(2), {n}},
                 {s * (N - Rational(2)), {1, n - 1}}};
        break;
    }
    case 4: {
        Rational s = Rational(1, 5760);
        Rational a = N * (Rational(15) * N * N * N - Rational(150) * N * N + Rational(485) * N - Rational(502));
        Rational b = Rational(4) * (Rational(15) * N * N - Rational(85) * N + Rational(108));
        terms = {
            {s * a, {n}},
            {s * b, {1, n - 1}},
            // 8 (c_1^2 + 3 c_2) c_{n-2}
            {s * Rational(8), {1, 1, n - 2}},
            {s * Rational(24), {2, n - 2}},
            // -8 (c_1^3 - 3 c_1 c_2 + 3 c_3) c_{n-3}
            {s * Rational(-8), {1, 1, 1, n - 3}},
            {s * Rational(24), {1, 2, n - 3}},
            {s * Rational(-24), {3, n - 3}},
        };
        break;
    }
    default:
        throw std::out_of_range("closed forms are known for K_0 .. K_4 only");
    }
    return detail::materialize(n, terms);
}

struct ClosedFormCheck {
    int j = 0;
    ChernPolynomial computed;
    ChernPolynomial expected;
    ChernPolynomial discrepancy; // computed - expected
    bool matches() const { return discrepancy.is_zero(); }
};

struct ClosedFormReport {
    int dim = 0;
    std::vector<ClosedFormCheck> checks;
    bool all_match() const
    {
        for (const auto& c : checks)
            if (!c.matches())
                return false;
        return true;
    }
};

/// Compares K_0 .. K_min(n,4) from k_table against the closed forms.
inline ClosedFormReport verify_k_closed_forms(int n)
{
    const KTable& table = k_table(n);
    ClosedFormReport report{n, {}};
    for (int j = 0; j <= std::min(n, 4); ++j) {
        ClosedFormCheck c;
        c.j = j;
        c.computed = table[static_cast<std::size_t>(j)];
        c.expected = k_closed_form(n, j);
        c.discrepancy = c.computed - c.expected;
        report.checks.push_back(std::move(c));
    }
    return report;
}

// ---------------------------------------------------------------------------
// Structure of the K_j.

/// K_{2i+1} = sum_{j <= i} coefficients[j] * K_{2j}.
struct OddRelation {
    int odd_index = 0; // 2i+1
    bool solved = false;
    std::vector<Rational> coefficients;
    bool residual_zero = false;
};

struct OddDependence {
    int dim = 0;
    std::vector<OddRelation> relations;
    bool all_hold() const
    {
        for (const auto& r : relations)
            if (!r.solved || !r.residual_zero)
                return false;
        return true;
    }
};

inline OddDependence odd_k_dependence(int n)
{
    const KTable& table = k_table(n);
    const auto basis = partitions(n);
    OddDependence out{n, {}};
    for (int i = 0; 2 * i + 1 <= n; ++i) {
        OddRelation rel;
        rel.odd_index = 2 * i + 1;
        RationalMatrix a(basis.size(), static_cast<std::size_t>(i) + 1);
        std::vector<Rational> b(basis.size());
        for (std::size_t r = 0; r < basis.size(); ++r) {
            for (int j = 0; j <= i; ++j)
                a(r, static_cast<std::size_t>(j)) = table[static_cast<std::size_t>(2 * j)].coefficient(basis[r]);
            b[r] = table[static_cast<std::size_t>(2 * i + 1)].coefficient(basis[r]);
        }
        if (auto x = solve(a, b)) {
            rel.solved = true;
            rel.coefficients = *x;
            ChernPolynomial residual = table[static_cast<std::size_t>(2 * i + 1)];
            for (int j = 0; j <= i; ++j)
                residual -= rel.coefficients[static_cast<std::size_t>(j)] * table[static_cast<std::size_t>(2 * j)];
            rel.residual_zero = residual.is_zero();
        }
        out.relations.push_back(std::move(rel));
    }
    return out;
}

/// Chern indices occurring in K_j, for even j <= n.
inline std::set<int> k_support(int n, int j)
{
    if (j < 0 || j > n || j % 2 != 0)
        throw std::invalid_argument("k_support needs an even index j with 0 <= j <= n");
    return k_table(n)[static_cast<std::size_t>(j)].chern_indices();
}

/// The index set {1..2i-1} u {n-2i+1..n} allowed in K_{2i}. The list always
/// ends in c_n, so for i = 0 it is {n} (K_0 = c_n).
inline std::set<int> k_support_bound(int n, int j)
{
    std::set<int> allowed;
    for (int k = 1; k <= j - 1; ++k)
        allowed.insert(k);
    for (int k = std::max(1, std::min(n - j + 1, n)); k <= n; ++k)
        allowed.insert(k);
    return allowed;
}

// ---------------------------------------------------------------------------
// Evaluation against a manifold.

/// Pairs poly with the fundamental class: c_lambda -> c_lambda[M].
inline Rational evaluate(const ChernPolynomial& poly, const ManifoldChernData& m)
{
    if (poly.dim() != m.dim)
        throw std::invalid_argument("polynomial of weight " + std::to_string(poly.dim()) +
                                    " evaluated on a manifold of dimension " + std::to_string(m.dim));
    Rational acc;
    for (const auto& [p, c] : poly.terms())
        acc += c * m.chern_number(p);
    return acc;
}

inline EvaluatedGenus evaluate_genus(const ManifoldChernData& m)
{
    if (m.dim < 1)
        throw std::invalid_argument("manifold dimension must be at least 1");
    const UniversalGenus& u = chi_y_universal(m.dim);
    EvaluatedGenus g{m.dim, {}};
    for (const auto& c : u.coeffs)
        g.coeffs.push_back(evaluate(c, m));
    return g;
}

/// K_0(M) .. K_n(M).
inline std::vector<Rational> evaluate_k(const ManifoldChernData& m)
{
    return expand_about_minus_one(evaluate_genus(m).coeffs);
}

/// chi^p = sum_q (-1)^q h^{p,q}.
inline EvaluatedGenus chi_y_from_hodge(const HodgeGrid& h)
{
    const int n = static_cast<int>(h.size()) - 1;
    if (n < 0)
        throw std::invalid_argument("empty Hodge grid");
    EvaluatedGenus g{n, {}};
    for (const auto& row : h) {
        if (row.size() != h.size())
            throw std::invalid_argument("Hodge grid is not square");
        Rational acc;
        for (std::size_t q = 0; q < row.size(); ++q)
            acc += Rational(static_cast<long>(row[q]) * sign_power(static_cast<long>(q)));
        g.coeffs.push_back(acc);
    }
    return g;
}

} // namespace chiy
