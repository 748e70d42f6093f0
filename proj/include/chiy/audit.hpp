#pragma once

// Chern number audits for Kaehler hyperbolic and Kaehler non-elliptic
// manifolds, and the Yau inequality.
//
// Every check is a necessary condition: a passing audit never certifies
// that the manifold is hyperbolic or non-elliptic. Comparisons are exact.
//
// Canonical forms, with K_j the Taylor coefficients of chi_y at y = -1:
//   hyperbolic   (-1)^n K_{2i}(M) >= K_{2i}(CP^n) = binom(n+1, 2i+1)
//   nonelliptic  (-1)^n K_{2i}(M) >= 0
//   yau          c_2 (-c_1)^{n-2}[M] >= n / (2(n+1)) * (-c_1)^n[M]
// for 0 <= i <= n/2. The non-elliptic bound is the even-j case of
// (-1)^{n+j} K_j >= 0; it is sometimes displayed with an additional
// (-1)^n factor in front of A_i = (-1)^n K_{2i}, which would flip the sign
// for odd n. The form checked here is the one that follows from the
// L^2-index argument.
//
// Hyperbolic reports also carry the rescaled values A_0 = (-1)^n K_0,
// A_1 = 12 (-1)^n K_2, A_2 = 5760 (-1)^n K_4, which clear the denominators
// of K_0, K_2, K_4; positive scaling leaves every verdict unchanged.

#include "chiy/genus.hpp"
#include "chiy/manifold.hpp"
#include "chiy/partition.hpp"
#include "chiy/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chiy {

enum class AuditMode { hyperbolic, nonelliptic, yau };
enum class Verdict { strict, equality, violated };

inline std::string to_string(AuditMode m)
{
    switch (m) {
    case AuditMode::hyperbolic: return "hyperbolic";
    case AuditMode::nonelliptic: return "nonelliptic";
    case AuditMode::yau: return "yau";
    }
    return "?";
}

inline std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::strict: return "strict";
    case Verdict::equality: return "equality";
    case Verdict::violated: return "violated";
    }
    return "?";
}

inline Verdict compare(const Rational& left, const Rational& right)
{
    if (left > right)
        return Verdict::strict;
    if (left == right)
        return Verdict::equality;
    return Verdict::violated;
}

/// A_i as printed with cleared denominators: factor * left >= factor * right.
struct DisplayedValue {
    Rational factor;
    Rational left;
    Rational right;
    friend bool operator==(const DisplayedValue&, const DisplayedValue&) = default;
};

struct InequalityCheck {
    int index = 0;
    Rational left;
    Rational right;
    Verdict verdict = Verdict::equality;
    std::optional<DisplayedValue> display;
    friend bool operator==(const InequalityCheck&, const InequalityCheck&) = default;
};

/// Candidate h^{p,n-p}_{(2)} = (-1)^{n-p} chi^p.
struct L2Value {
    int p = 0;
    Rational value;
    bool integral = false;
    bool positive = false;
    bool nonnegative = false;
    friend bool operator==(const L2Value&, const L2Value&) = default;
};

struct AuditReport {
    std::string manifold;
    int dim = 0;
    AuditMode mode = AuditMode::hyperbolic;
    std::vector<InequalityCheck> checks;
    std::vector<Rational> chi_p;
    /// Smallest p0 with chi^p = (-1)^{n-p} for all p0 <= p <= n.
    std::optional<int> chi_p_pattern_from;
    /// chi_y(M) = (-1)^n chi_y(CP^n).
    bool full_cpn_pattern = false;
    std::vector<L2Value> l2_reconstruction;
    std::vector<std::string> notes;
    std::vector<std::string> warnings;

    bool any_violated() const
    {
        for (const auto& c : checks)
            if (c.verdict == Verdict::violated)
                return true;
        return false;
    }

    friend bool operator==(const AuditReport&, const AuditReport&) = default;
};

struct Specializations {
    Rational euler;     // y = -1
    Rational todd;      // y = 0
    Rational signature; // y = 1
    friend bool operator==(const Specializations&, const Specializations&) = default;
};

inline Specializations specializations(const EvaluatedGenus& g)
{
    return {evaluate_at(g, Rational(-1)), evaluate_at(g, Rational(0)), evaluate_at(g, Rational(1))};
}

struct SerreVerdict {
    bool symmetric = false;   // h^{p,q} = h^{n-p,n-q}
    bool chi_duality = false; // chi^p = (-1)^n chi^{n-p}
    bool passed() const { return symmetric && chi_duality; }
};

inline SerreVerdict serre_check(const HodgeGrid& h)
{
    const std::size_t size = h.size();
    for (const auto& row : h)
        if (row.size() != size)
            throw std::invalid_argument("Hodge grid is not square");
    if (size == 0)
        throw std::invalid_argument("empty Hodge grid");
    const std::size_t n = size - 1;
    SerreVerdict v;
    v.symmetric = true;
    for (std::size_t p = 0; p <= n; ++p)
        for (std::size_t q = 0; q <= n; ++q)
            if (h[p][q] != h[n - p][n - q])
                v.symmetric = false;
    EvaluatedGenus g = chi_y_from_hodge(h);
    v.chi_duality = true;
    for (std::size_t p = 0; p <= n; ++p)
        if (g.coeffs[p] != Rational(sign_power(static_cast<long>(n))) * g.coeffs[n - p])
            v.chi_duality = false;
    return v;
}

namespace detail {

inline const char* necessary_only_note(AuditMode mode)
{
    switch (mode) {
    case AuditMode::hyperbolic:
        return "necessary conditions only: passing does not show that the manifold is Kaehler hyperbolic";
    case AuditMode::nonelliptic:
        return "necessary conditions only: passing does not show that the manifold is Kaehler non-elliptic";
    case AuditMode::yau:
        return "necessary condition only: the inequality holds when the canonical bundle is ample "
               "(in particular for Kaehler hyperbolic manifolds)";
    }
    return "";
}

// Fills chi^p, the CP^n patterns, the L^2 candidates and the shared warnings.
inline AuditReport report_skeleton(const ManifoldChernData& m, AuditMode mode, const EvaluatedGenus& g)
{
    AuditReport r;
    r.manifold = m.name;
    r.dim = m.dim;
    r.mode = mode;
    r.chi_p = g.coeffs;
    const int n = m.dim;

    std::optional<int> from;
    for (int p = n; p >= 0; --p) {
        if (g.coeffs[static_cast<std::size_t>(p)] != Rational(sign_power(n - p)))
            break;
        from = p;
    }
    r.chi_p_pattern_from = from;
    r.full_cpn_pattern = from == 0;

    bool all_positive = true, all_nonnegative = true;
    for (int p = 0; p <= n; ++p) {
        L2Value v;
        v.p = p;
        v.value = Rational(sign_power(n - p)) * g.coeffs[static_cast<std::size_t>(p)];
        v.integral = v.value.is_integer();
        v.positive = v.value.sign() > 0;
        v.nonnegative = v.value.sign() >= 0;
        all_positive = all_positive && v.integral && v.positive;
        all_nonnegative = all_nonnegative && v.integral && v.nonnegative;
        r.l2_reconstruction.push_back(v);
    }

    r.notes.emplace_back(necessary_only_note(mode));
    if (!m.integral())
        r.warnings.emplace_back("non-integral Chern numbers: not the data of a compact complex manifold");
    if (!all_integral(g))
        r.warnings.emplace_back("non-integral chi^p: not the Chern data of any compact complex manifold");
    if (mode == AuditMode::hyperbolic && !all_positive)
        r.warnings.emplace_back("L2 reconstruction: some (-1)^{n-p} chi^p is not a positive integer, "
                                "as required for a Kaehler hyperbolic manifold");
    if (mode == AuditMode::nonelliptic && !all_nonnegative)
        r.warnings.emplace_back("L2 reconstruction: some (-1)^{n-p} chi^p is not a nonnegative integer, "
                                "as required for a Kaehler non-elliptic manifold");
    return r;
}

inline void check_data(const ManifoldChernData& m)
{
    if (m.dim < 1)
        throw std::invalid_argument("manifold dimension must be at least 1");
}

} // namespace detail

/// sum_{p=j}^n binom(p, j); equals binom(n+1, j+1).
inline Rational cpn_k_bound(int n, int j)
{
    Integer s = 0;
    for (int p = j; p <= n; ++p)
        s += binomial(p, j);
    return Rational(s);
}

inline AuditReport hyperbolic_audit(const ManifoldChernData& m)
{
    detail::check_data(m);
    const int n = m.dim;
    EvaluatedGenus g = evaluate_genus(m);
    std::vector<Rational> k = expand_about_minus_one(g.coeffs);
    AuditReport r = detail::report_skeleton(m, AuditMode::hyperbolic, g);
    const Rational display_factor[] = {Rational(1), Rational(12), Rational(5760)};
    for (int i = 0; 2 * i <= n; ++i) {
        InequalityCheck c;
        c.index = i;
        c.left = Rational(sign_power(n)) * k[static_cast<std::size_t>(2 * i)];
        c.right = cpn_k_bound(n, 2 * i);
        c.verdict = compare(c.left, c.right);
        if (i < 3) {
            const Rational& f = display_factor[i];
            c.display = DisplayedValue{f, f * c.left, f * c.right};
        }
        r.checks.push_back(std::move(c));
    }
    return r;
}

inline AuditReport nonelliptic_audit(const ManifoldChernData& m)
{
    detail::check_data(m);
    const int n = m.dim;
    EvaluatedGenus g = evaluate_genus(m);
    std::vector<Rational> k = expand_about_minus_one(g.coeffs);
    AuditReport r = detail::report_skeleton(m, AuditMode::nonelliptic, g);
    for (int i = 0; 2 * i <= n; ++i) {
        InequalityCheck c;
        c.index = i;
        c.left = Rational(sign_power(n)) * k[static_cast<std::size_t>(2 * i)];
        c.right = Rational(0);
        c.verdict = compare(c.left, c.right);
        r.checks.push_back(std::move(c));
    }
    return r;
}

inline AuditReport yau_audit(const ManifoldChernData& m)
{
    detail::check_data(m);
    const int n = m.dim;
    if (n < 2)
        throw std::invalid_argument("the Yau inequality needs dimension at least 2");
    std::vector<int> c2c1(static_cast<std::size_t>(n - 1), 1);
    c2c1[0] = 2;
    const Partition c2_c1pow(c2c1);
    const Partition c1pow(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (const Partition& p : {c2_c1pow, c1pow})
        if (!m.chern_numbers.contains(p))
            throw std::invalid_argument("Yau audit needs the Chern number " + p.monomial());

    EvaluatedGenus g = evaluate_genus(m);
    AuditReport r = detail::report_skeleton(m, AuditMode::yau, g);
    InequalityCheck c;
    c.index = 0;
    c.left = Rational(sign_power(n - 2)) * m.chern_number(c2_c1pow);
    c.right = Rational(n, 2 * (n + 1)) * Rational(sign_power(n)) * m.chern_number(c1pow);
    c.verdict = compare(c.left, c.right);
    if (c.verdict == Verdict::equality)
        r.notes.emplace_back("equality: for a manifold with ample canonical bundle this holds exactly when it is "
                             "covered by the unit ball in C^n");
    r.checks.push_back(std::move(c));
    return r;
}

inline AuditReport audit(const ManifoldChernData& m, AuditMode mode)
{
    switch (mode) {
    case AuditMode::hyperbolic: return hyperbolic_audit(m);
    case AuditMode::nonelliptic: return nonelliptic_audit(m);
    case AuditMode::yau: return yau_audit(m);
    }
    throw std::invalid_argument("unknown audit mode");
}

} // namespace chiy
