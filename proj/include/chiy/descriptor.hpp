#pragma once

// Manifold descriptor documents (JSON).
//
//   {
//     "name": "CP^2",                        optional
//     "dim": 2,
//     "chern_numbers": {"2": "3", "1,1": "9"},
//     "hodge": [[1,0,0],[0,1,0],[0,0,1]]     optional, row p, column q
//   }
//
// Keys of chern_numbers are weakly decreasing positive integers joined by
// commas; values are exact rationals written "p" or "p/q" (JSON integers are
// accepted too). Output documents list partitions in reverse-lexicographic
// order.

#include "chiy/genus.hpp"
#include "chiy/manifold.hpp"
#include "chiy/partition.hpp"
#include "chiy/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace chiy {

using Json = nlohmann::ordered_json;

class DescriptorError : public std::runtime_error {
public:
    enum class Kind {
        malformed_document,
        bad_dimension,
        malformed_key,
        duplicate_key,
        malformed_value,
        weight_mismatch,
        malformed_hodge,
        hodge_mismatch,
    };

    DescriptorError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

struct ParsedDescriptor {
    ManifoldChernData manifold;
    std::vector<std::string> warnings;
};

inline Json to_descriptor(const ManifoldChernData& m)
{
    Json doc;
    doc["name"] = m.name;
    doc["dim"] = m.dim;
    Json chern = Json::object();
    for (const auto& [p, v] : m.chern_numbers)
        chern[p.key()] = v.to_string();
    doc["chern_numbers"] = std::move(chern);
    if (m.hodge)
        doc["hodge"] = *m.hodge;
    return doc;
}

namespace detail {

inline Rational parse_chern_value(const Json& v, const std::string& key)
{
    using K = DescriptorError::Kind;
    try {
        if (v.is_string())
            return Rational::parse(v.get<std::string>());
        if (v.is_number_integer())
            return Rational(Integer(v.dump()));
    } catch (const std::invalid_argument& e) {
        throw DescriptorError(K::malformed_value, "chern_numbers[\"" + key + "\"]: " + e.what());
    }
    throw DescriptorError(K::malformed_value,
                          "chern_numbers[\"" + key + "\"] must be a rational string such as \"3\" or \"-1/2\"");
}

inline HodgeGrid parse_hodge(const Json& h, int n)
{
    using K = DescriptorError::Kind;
    const auto size = static_cast<std::size_t>(n) + 1;
    if (!h.is_array() || h.size() != size)
        throw DescriptorError(K::malformed_hodge, "hodge must be an array of " + std::to_string(size) + " rows");
    HodgeGrid grid;
    for (const auto& row : h) {
        if (!row.is_array() || row.size() != size)
            throw DescriptorError(K::malformed_hodge, "each hodge row must have " + std::to_string(size) + " entries");
        std::vector<std::int64_t> r;
        for (const auto& v : row) {
            if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
                throw DescriptorError(K::malformed_hodge, "hodge entries must be nonnegative integers");
            r.push_back(v.get<std::int64_t>());
        }
        grid.push_back(std::move(r));
    }
    return grid;
}

} // namespace detail

/// Validates and converts a descriptor. Missing partitions are filled with
/// zero and reported as warnings; a Hodge diamond, when given, must produce
/// the same chi_y as the Chern numbers. Dimensions above max_dim are
/// rejected before any universal polynomial is computed.
inline ParsedDescriptor from_descriptor(const Json& doc, int max_dim = 14)
{
    using K = DescriptorError::Kind;
    if (!doc.is_object())
        throw DescriptorError(K::malformed_document, "descriptor must be a JSON object");

    ParsedDescriptor out;
    ManifoldChernData& m = out.manifold;

    auto dim_it = doc.find("dim");
    if (dim_it == doc.end() || !dim_it->is_number_integer())
        throw DescriptorError(K::bad_dimension, "descriptor needs an integer \"dim\"");
    auto dim = dim_it->get<std::int64_t>();
    if (dim < 1 || dim > max_dim)
        throw DescriptorError(K::bad_dimension,
                              "dim " + std::to_string(dim) + " outside [1, " + std::to_string(max_dim) + "]");
    m.dim = static_cast<int>(dim);

    if (auto it = doc.find("name"); it != doc.end()) {
        if (!it->is_string())
            throw DescriptorError(K::malformed_document, "\"name\" must be a string");
        m.name = it->get<std::string>();
    } else {
        m.name = "unnamed";
    }

    auto chern_it = doc.find("chern_numbers");
    if (chern_it == doc.end() || !chern_it->is_object())
        throw DescriptorError(K::malformed_document, "descriptor needs a \"chern_numbers\" object");
    for (const auto& [key, value] : chern_it->items()) {
        Partition p;
        try {
            p = Partition::parse(key);
        } catch (const std::invalid_argument& e) {
            throw DescriptorError(K::malformed_key, e.what());
        }
        if (p.empty())
            throw DescriptorError(K::malformed_key, "empty partition key");
        if (p.weight() != m.dim)
            throw DescriptorError(K::weight_mismatch, "partition " + key + " has weight " +
                                                          std::to_string(p.weight()) + ", expected " +
                                                          std::to_string(m.dim));
        Rational v = detail::parse_chern_value(value, key);
        if (!m.chern_numbers.emplace(p, v).second)
            throw DescriptorError(K::duplicate_key, "partition " + p.key() + " given twice");
    }
    for (const Partition& p : partitions(m.dim)) {
        if (!m.chern_numbers.contains(p)) {
            out.warnings.push_back("missing Chern number " + p.monomial() + " (key \"" + p.key() + "\"), read as 0");
            m.chern_numbers.emplace(p, Rational());
        }
    }
    if (!m.integral())
        out.warnings.push_back("non-integral Chern numbers: not the data of a compact complex manifold");

    if (auto it = doc.find("hodge"); it != doc.end() && !it->is_null()) {
        m.hodge = detail::parse_hodge(*it, m.dim);
        EvaluatedGenus from_hodge = chi_y_from_hodge(*m.hodge);
        EvaluatedGenus from_chern = evaluate_genus(m);
        if (!(from_hodge == from_chern))
            throw DescriptorError(K::hodge_mismatch, "chi_y from the Hodge diamond (" +
                                                         to_polynomial(from_hodge).to_string() +
                                                         ") differs from chi_y of the Chern numbers (" +
                                                         to_polynomial(from_chern).to_string() + ")");
    }
    return out;
}

inline ParsedDescriptor parse_descriptor(const std::string& text, int max_dim = 14)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw DescriptorError(DescriptorError::Kind::malformed_document, std::string("invalid JSON: ") + e.what());
    }
    return from_descriptor(doc, max_dim);
}

} // namespace chiy
