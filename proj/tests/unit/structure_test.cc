#include "helpers.hh"

#include <mpart/canonical.hh>
#include <mpart/error.hh>
#include <mpart/structure.hh>

#include <doctest.h>

using namespace mpart;

TEST_CASE("default and override lookup")
{
    LStructure s(Signature::parse("E/2"), Category::CatStar, 3);
    s.set_label(0, std::vector<Element>{0, 1}, Label::Star);
    CHECK(s.get_label(0, std::vector<Element>{0, 1}) == Label::Star);
    CHECK(s.get_label(0, std::vector<Element>{1, 0}) == Label::Zero);
    CHECK_THROWS_AS(s.get_label(0, std::vector<Element>{0, 5}), ValidationError);
}

TEST_CASE("labels outside the category are rejected")
{
    LStructure s(Signature::parse("E/2"), Category::Cat01, 2);
    CHECK_THROWS_AS(s.set_default(0, Label::Star), ValidationError);
}

TEST_CASE("induced substructures")
{
    auto k2 = testing::k2();
    std::vector<Element> all{0, 1};
    CHECK(is_isomorphic(induced_substructure(k2, all), k2));
    CHECK(induced_substructure(k2, std::vector<Element>{}).size() == 0);
    auto one = delete_element(k2, 1);
    CHECK(one.size() == 1);
    CHECK(one.get_label(0, std::vector<Element>{0, 0}) == Label::Zero);
}

TEST_CASE("trivial targets")
{
    CHECK(is_trivial_target(testing::loop("star", '*')));
    CHECK_FALSE(is_trivial_target(testing::k2()));
    auto rs = testing::mps("category star\nsignature R/2 S/1\ndomain 1\ndefault R *\ndefault S 0\n");
    CHECK_FALSE(is_trivial_target(rs));
}

TEST_CASE("normalized keeps semantics and picks the majority default")
{
    LStructure s(Signature::parse("E/2"), Category::Cat01, 2);
    for (Element a = 0; a < 2; ++a)
        for (Element b = 0; b < 2; ++b)
            if (a != b || a == 0)
                s.set_label(0, std::vector<Element>{a, b}, Label::One);
    auto n = s.normalized();
    CHECK(n == s);
    CHECK(n.default_label(0) == Label::One);
    CHECK(n.overrides(0).size() == 1);
}
