#pragma once

// Integer partitions. A partition indexes a Chern monomial: (2,1,1) is
// c_2 c_1^2. The canonical order is reverse-lexicographic, so partitions(4)
// yields (4), (3,1), (2,2), (2,1,1), (1,1,1,1).

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chiy {

class Partition {
public:
    Partition() = default;

    /// Parts must already be positive and weakly decreasing.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i - 1] < parts_[i])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts arbitrary positive parts into a partition.
    static Partition from_unsorted(std::vector<int> parts)
    {
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    /// Parses "2,1,1". The empty string is the empty partition.
    static Partition parse(std::string_view text)
    {
        std::vector<int> parts;
        if (text.empty())
            return Partition();
        std::size_t pos = 0;
        while (true) {
            auto comma = text.find(',', pos);
            auto piece = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
            if (piece.empty() || piece.size() > 6)
                throw std::invalid_argument("malformed partition key '" + std::string(text) + "'");
            int v = 0;
            for (char c : piece) {
                if (c < '0' || c > '9')
                    throw std::invalid_argument("malformed partition key '" + std::string(text) + "'");
                v = v * 10 + (c - '0');
            }
            parts.push_back(v);
            if (comma == std::string_view::npos)
                break;
            pos = comma + 1;
        }
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    /// Union of parts (the Chern monomial product).
    friend Partition operator*(const Partition& a, const Partition& b)
    {
        std::vector<int> merged;
        merged.reserve(a.parts_.size() + b.parts_.size());
        std::merge(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end(),
                   std::back_inserter(merged), std::greater<>());
        Partition r;
        r.parts_ = std::move(merged);
        return r;
    }

    /// "2,1,1"; the descriptor key format.
    std::string key() const
    {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    /// "c2*c1^2"; "1" for the empty partition.
    std::string monomial() const
    {
        if (parts_.empty())
            return "1";
        std::string s;
        for (std::size_t i = 0; i < parts_.size();) {
            std::size_t j = i;
            while (j < parts_.size() && parts_[j] == parts_[i])
                ++j;
            if (!s.empty())
                s += '*';
            s += 'c' + std::to_string(parts_[i]);
            if (j - i > 1)
                s += '^' + std::to_string(j - i);
            i = j;
        }
        return s;
    }

    friend bool operator==(const Partition&, const Partition&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << '(' << p.key() << ')'; }

private:
    std::vector<int> parts_;
};

/// Strict weak order placing partitions in reverse-lexicographic order.
struct ReverseLex {
    bool operator()(const Partition& a, const Partition& b) const
    {
        return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                            a.parts().begin(), a.parts().end());
    }
};

namespace detail {

inline void fill_partitions(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        fill_partitions(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

} // namespace detail

/// All partitions of w in reverse-lexicographic order.
inline std::vector<Partition> partitions(int w)
{
    if (w < 0)
        throw std::invalid_argument("partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<int> prefix;
    detail::fill_partitions(w, w, prefix, out);
    return out;
}

/// Position of p within partitions(p.weight()).
inline std::size_t partition_index(const std::vector<Partition>& ordered, const Partition& p)
{
    auto it = std::lower_bound(ordered.begin(), ordered.end(), p, ReverseLex{});
    if (it == ordered.end() || !(*it == p))
        throw std::invalid_argument("partition not in list");
    return static_cast<std::size_t>(it - ordered.begin());
}

} // namespace chiy
