#pragma once

#include "chiy/partition.hpp"
#include "chiy/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace chiy {

/// h^{p,q} stored as grid[p][q], 0 <= p, q <= n.
using HodgeGrid = std::vector<std::vector<std::int64_t>>;

/// A compact complex manifold as seen through its characteristic numbers:
/// the dimension, Chern numbers c_lambda[M] keyed by partitions of weight n,
/// and optionally the Hodge diamond.
struct ManifoldChernData {
    std::string name;
    int dim = 0;
    std::map<Partition, Rational, ReverseLex> chern_numbers;
    std::optional<HodgeGrid> hodge;

    /// Missing partitions read as zero.
    Rational chern_number(const Partition& p) const
    {
        auto it = chern_numbers.find(p);
        return it == chern_numbers.end() ? Rational() : it->second;
    }

    /// True when every Chern number is an integer.
    bool integral() const
    {
        for (const auto& [p, v] : chern_numbers)
            if (!v.is_integer())
                return false;
        return true;
    }

    friend bool operator==(const ManifoldChernData&, const ManifoldChernData&) = default;
};

} // namespace chiy
