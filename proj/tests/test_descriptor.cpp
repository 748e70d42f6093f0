#include "chiy/catalog.hpp"
#include "chiy/descriptor.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace chiy;
using Kind = DescriptorError::Kind;

namespace {

Kind failure_kind(const std::string& text, int max_dim = 14)
{
    try {
        parse_descriptor(text, max_dim);
    } catch (const DescriptorError& e) {
        return e.kind();
    }
    ADD_FAILURE() << "accepted: " << text;
    return Kind::malformed_document;
}

} // namespace

TEST(Descriptor, ProjectivePlane)
{
    auto parsed = parse_descriptor(R"({"dim":2, "chern_numbers":{"2":"3","1,1":"9"}})");
    EXPECT_TRUE(parsed.warnings.empty());
    EXPECT_EQ(parsed.manifold.chern_numbers, projective_space(2).chern_numbers);
    EXPECT_EQ(parsed.manifold.name, "unnamed");
}

TEST(Descriptor, MissingKeysReadAsZeroWithWarnings)
{
    auto parsed = parse_descriptor(R"({"dim":2, "chern_numbers":{}})");
    EXPECT_EQ(parsed.manifold.chern_numbers, complex_torus(2).chern_numbers);
    ASSERT_EQ(parsed.warnings.size(), 2u);
    EXPECT_NE(parsed.warnings[0].find("c2"), std::string::npos);
    EXPECT_NE(parsed.warnings[1].find("c1^2"), std::string::npos);
}

TEST(Descriptor, WeightMismatch)
{
    EXPECT_EQ(failure_kind(R"({"dim":2, "chern_numbers":{"3":"1"}})"), Kind::weight_mismatch);
}

TEST(Descriptor, DistinctFailureKinds)
{
    EXPECT_EQ(failure_kind("not json"), Kind::malformed_document);
    EXPECT_EQ(failure_kind("[1,2]"), Kind::malformed_document);
    EXPECT_EQ(failure_kind(R"({"dim":2})"), Kind::malformed_document);
    EXPECT_EQ(failure_kind(R"({"dim":2, "name":3, "chern_numbers":{}})"), Kind::malformed_document);
    EXPECT_EQ(failure_kind(R"({"chern_numbers":{}})"), Kind::bad_dimension);
    EXPECT_EQ(failure_kind(R"({"dim":"2", "chern_numbers":{}})"), Kind::bad_dimension);
    EXPECT_EQ(failure_kind(R"({"dim":0, "chern_numbers":{}})"), Kind::bad_dimension);
    EXPECT_EQ(failure_kind(R"({"dim":15, "chern_numbers":{}})"), Kind::bad_dimension);
    EXPECT_EQ(failure_kind(R"({"dim":5, "chern_numbers":{}})", 4), Kind::bad_dimension);
    EXPECT_EQ(failure_kind(R"({"dim":2, "chern_numbers":{"1,2":"1"}})"), Kind::malformed_key);
    EXPECT_EQ(failure_kind(R"({"dim":2, "chern_numbers":{"c2":"1"}})"), Kind::malformed_key);
    EXPECT_EQ(failure_kind(R"({"dim":2, "chern_numbers":{"":"1"}})"), Kind::malformed_key);
    EXPECT_EQ(failure_kind(R"({"dim":2, "chern_numbers":{"2":"3","02":"3"}})"), Kind::duplicate_key);
    EXPECT_EQ(failure_kind(R"({"dim":2, "chern_numbers":{"2":"1/0"}})"), Kind::malformed_value);
    EXPECT_EQ(failure_kind(R"({"dim":2, "chern_numbers":{"2":1.5}})"), Kind::malformed_value);
    EXPECT_EQ(failure_kind(R"({"dim":2, "chern_numbers":{"2":"3","1,1":"9"}, "hodge":[[1,0],[0,1]]})"),
              Kind::malformed_hodge);
    EXPECT_EQ(failure_kind(R"({"dim":1, "chern_numbers":{"1":"2"}, "hodge":[[1,-1],[0,1]]})"), Kind::malformed_hodge);
    EXPECT_EQ(failure_kind(R"({"dim":2, "chern_numbers":{"2":"3","1,1":"9"},
                               "hodge":[[1,0,0],[0,2,0],[0,0,1]]})"),
              Kind::hodge_mismatch);
}

TEST(Descriptor, HodgeCrossCheckAccepted)
{
    auto parsed = parse_descriptor(R"({"name":"K3","dim":2,"chern_numbers":{"2":"24","1,1":"0"},
                                        "hodge":[[1,0,1],[0,20,0],[1,0,1]]})");
    EXPECT_EQ(parsed.manifold.name, "K3");
    ASSERT_TRUE(parsed.manifold.hodge.has_value());
    EXPECT_EQ((*parsed.manifold.hodge)[1][1], 20);
}

TEST(Descriptor, RationalValuesAreFlagged)
{
    auto parsed = parse_descriptor(R"({"dim":1, "chern_numbers":{"1":"1/2"}})");
    EXPECT_EQ(parsed.manifold.chern_number(Partition{1}), Rational(1, 2));
    ASSERT_EQ(parsed.warnings.size(), 1u);
    EXPECT_NE(parsed.warnings[0].find("non-integral"), std::string::npos);
    auto integer = parse_descriptor(R"({"dim":1, "chern_numbers":{"1":-4}})");
    EXPECT_EQ(integer.manifold.chern_number(Partition{1}), Rational(-4));
}

TEST(Descriptor, RoundTripsCatalogMembers)
{
    std::vector<ManifoldChernData> members = {projective_space(3), complex_torus(2), hypersurface(3, 5),
                                              ball_quotient(4), product(projective_space(1), complex_torus(2))};
    for (const auto& m : members) {
        Json doc = to_descriptor(m);
        auto parsed = from_descriptor(doc);
        EXPECT_EQ(parsed.manifold, m) << m.name;
        EXPECT_TRUE(parsed.warnings.empty());
        EXPECT_EQ(to_descriptor(parsed.manifold).dump(), doc.dump());
    }
}

TEST(Descriptor, CanonicalKeyOrder)
{
    Json doc = to_descriptor(projective_space(3));
    std::vector<std::string> keys;
    for (const auto& [k, v] : doc["chern_numbers"].items())
        keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"3", "2,1", "1,1,1"}));
    EXPECT_EQ(doc["chern_numbers"]["1,1,1"], "64");
}
