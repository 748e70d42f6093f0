#pragma once

// Rational linear combinations of Chern monomials c_lambda of a fixed
// weight. Zero coefficients are never stored, so equality is plain map
// equality.

#include "chiy/partition.hpp"
#include "chiy/rational.hpp"

#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace chiy {

class ChernPolynomial {
public:
    using Terms = std::map<Partition, Rational, ReverseLex>;

    ChernPolynomial() = default;
    explicit ChernPolynomial(int dim) : dim_(dim)
    {
        if (dim < 0)
            throw std::invalid_argument("negative weight");
    }

    static ChernPolynomial monomial(const Partition& p, const Rational& c = Rational(1))
    {
        ChernPolynomial r(p.weight());
        r.add_term(p, c);
        return r;
    }

    /// The weight-0 polynomial 1 (c_0).
    static ChernPolynomial one() { return monomial(Partition()); }

    int dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Partition& p) const
    {
        auto it = terms_.find(p);
        return it == terms_.end() ? Rational() : it->second;
    }

    void add_term(const Partition& p, const Rational& c)
    {
        if (p.weight() != dim_)
            throw std::invalid_argument("monomial " + p.monomial() + " does not have weight " + std::to_string(dim_));
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    /// Chern indices i such that c_i occurs in some monomial.
    std::set<int> chern_indices() const
    {
        std::set<int> out;
        for (const auto& [p, c] : terms_)
            out.insert(p.parts().begin(), p.parts().end());
        return out;
    }

    ChernPolynomial& operator+=(const ChernPolynomial& o)
    {
        check_same_dim(o);
        for (const auto& [p, c] : o.terms_)
            add_term(p, c);
        return *this;
    }
    ChernPolynomial& operator-=(const ChernPolynomial& o)
    {
        check_same_dim(o);
        for (const auto& [p, c] : o.terms_)
            add_term(p, -c);
        return *this;
    }
    ChernPolynomial& operator*=(const Rational& s)
    {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [p, c] : terms_)
            c *= s;
        return *this;
    }

    friend ChernPolynomial operator+(ChernPolynomial a, const ChernPolynomial& b) { return a += b; }
    friend ChernPolynomial operator-(ChernPolynomial a, const ChernPolynomial& b) { return a -= b; }
    friend ChernPolynomial operator-(ChernPolynomial a) { return a *= Rational(-1); }
    friend ChernPolynomial operator*(const Rational& s, ChernPolynomial a) { return a *= s; }
    friend ChernPolynomial operator*(ChernPolynomial a, const Rational& s) { return a *= s; }

    /// Product of polynomials; weights add.
    friend ChernPolynomial operator*(const ChernPolynomial& a, const ChernPolynomial& b)
    {
        ChernPolynomial r(a.dim_ + b.dim_);
        for (const auto& [pa, ca] : a.terms_)
            for (const auto& [pb, cb] : b.terms_)
                r.add_term(pa * pb, ca * cb);
        return r;
    }

    friend bool operator==(const ChernPolynomial&, const ChernPolynomial&) = default;

    /// e.g. "1/12*c2 + 1/12*c1^2"; "0" when empty.
    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        for (const auto& [p, c] : terms_) {
            Rational mag = c.sign() < 0 ? -c : c;
            if (s.empty())
                s += c.sign() < 0 ? "-" : "";
            else
                s += c.sign() < 0 ? " - " : " + ";
            if (p.empty()) {
                s += mag.to_string();
                continue;
            }
            if (mag != Rational(1))
                s += mag.to_string() + "*";
            s += p.monomial();
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const ChernPolynomial& p) { return os << p.to_string(); }

private:
    void check_same_dim(const ChernPolynomial& o) const
    {
        if (o.dim_ != dim_)
            throw std::invalid_argument("adding Chern polynomials of weights " + std::to_string(dim_) + " and " +
                                        std::to_string(o.dim_));
    }

    int dim_ = 0;
    Terms terms_;
};

} // namespace chiy
