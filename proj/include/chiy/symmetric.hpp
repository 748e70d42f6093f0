#pragma once

// Change of basis between monomial symmetric functions m_lambda and
// products of elementary symmetric functions e_mu, with e_i read as the
// Chern class c_i of the Chern roots.
//
// The e -> m transition matrix is built combinatorially: the coefficient
// of m_lambda in e_mu1 ... e_muk counts 0-1 matrices with row sums mu and
// column sums lambda. Inverting it exactly gives m -> e.

#include "chiy/chern_polynomial.hpp"
#include "chiy/matrix.hpp"
#include "chiy/partition.hpp"
#include "chiy/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chiy {

namespace detail {

// Counts 0-1 matrices whose rows have the given sums and whose column sums
// are `cols`. Columns with equal remaining sums are interchangeable, so the
// state is the sorted column multiset.
class ZeroOneCounter {
public:
    explicit ZeroOneCounter(std::vector<int> rows) : rows_(std::move(rows)) {}

    Integer count(std::vector<int> cols)
    {
        std::sort(cols.begin(), cols.end(), std::greater<>());
        while (!cols.empty() && cols.back() == 0)
            cols.pop_back();
        return count_from(0, cols);
    }

private:
    Integer count_from(std::size_t row, const std::vector<int>& cols)
    {
        if (row == rows_.size())
            return cols.empty() ? Integer(1) : Integer(0);
        auto key = std::make_pair(row, cols);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;

        // groups of equal remaining column sums: (value, multiplicity)
        std::vector<std::pair<int, int>> groups;
        for (int v : cols) {
            if (!groups.empty() && groups.back().first == v)
                ++groups.back().second;
            else
                groups.emplace_back(v, 1);
        }
        Integer total = 0;
        std::vector<int> take(groups.size(), 0);
        distribute(row, groups, take, 0, rows_[row], Integer(1), total);
        memo_.emplace(std::move(key), total);
        return total;
    }

    void distribute(std::size_t row, const std::vector<std::pair<int, int>>& groups, std::vector<int>& take,
                    std::size_t g, int left, const Integer& ways, Integer& total)
    {
        if (g == groups.size()) {
            if (left != 0)
                return;
            std::vector<int> next;
            for (std::size_t i = 0; i < groups.size(); ++i) {
                auto [v, k] = groups[i];
                next.insert(next.end(), static_cast<std::size_t>(k - take[i]), v);
                if (v > 1)
                    next.insert(next.end(), static_cast<std::size_t>(take[i]), v - 1);
            }
            std::sort(next.begin(), next.end(), std::greater<>());
            total += ways * count_from(row + 1, next);
            return;
        }
        for (int t = 0; t <= std::min(left, groups[g].second); ++t) {
            take[g] = t;
            distribute(row, groups, take, g + 1, left - t, ways * binomial(groups[g].second, t), total);
        }
        take[g] = 0;
    }

    std::vector<int> rows_;
    std::map<std::pair<std::size_t, std::vector<int>>, Integer> memo_;
};

struct BasisChange {
    std::vector<Partition> order;
    RationalMatrix e_to_m;
    RationalMatrix m_to_e;
};

inline RationalMatrix build_e_to_m(const std::vector<Partition>& order)
{
    RationalMatrix m(order.size(), order.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        ZeroOneCounter counter(order[r].parts());
        for (std::size_t c = 0; c < order.size(); ++c)
            m(r, c) = Rational(counter.count(order[c].parts()));
    }
    return m;
}

inline std::shared_ptr<const BasisChange> basis_change(int w)
{
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const BasisChange>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(w); it != cache.end())
            return it->second;
    }
    // Built outside the lock; a concurrent duplicate is identical.
    auto data = std::make_shared<BasisChange>();
    data->order = partitions(w);
    data->e_to_m = build_e_to_m(data->order);
    auto inv = inverse(data->e_to_m);
    if (!inv)
        throw std::logic_error("e -> m transition matrix is singular at weight " + std::to_string(w));
    data->m_to_e = std::move(*inv);
    std::lock_guard lock(mutex);
    return cache.try_emplace(w, std::move(data)).first->second;
}

} // namespace detail

/// Entry (mu, lambda) is the coefficient of m_lambda in e_mu1 ... e_muk.
/// Rows and columns are indexed by partitions(w).
inline RationalMatrix elementary_to_monomial_matrix(int w)
{
    if (w < 1)
        throw std::invalid_argument("transition matrix needs weight >= 1");
    return detail::basis_change(w)->e_to_m;
}

/// m_lambda(x_1, ..., x_n) expanded in e_1, ..., e_n, written as a Chern
/// polynomial. The weight of lambda must equal the number of variables.
inline ChernPolynomial monomial_to_elementary(const Partition& lambda, int n)
{
    if (lambda.weight() != n)
        throw std::invalid_argument("partition " + lambda.key() + " does not have weight " + std::to_string(n));
    ChernPolynomial out(n);
    if (n == 0) {
        out.add_term(Partition(), Rational(1));
        return out;
    }
    auto data = detail::basis_change(n);
    std::size_t row = partition_index(data->order, lambda);
    for (std::size_t col = 0; col < data->order.size(); ++col)
        out.add_term(data->order[col], data->m_to_e(row, col));
    return out;
}

} // namespace chiy
