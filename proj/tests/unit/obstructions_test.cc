#include "helpers.hh"

#include <mpart/canonical.hh>
#include <mpart/homomorphism.hh>
#include <mpart/obstructions.hh>

#include <doctest.h>

#include <algorithm>

using namespace mpart;

namespace {
    auto contains(const ObstructionReport & r, const LStructure & s) -> bool
    {
        return std::find(r.members.begin(), r.members.end(), canonical_form(s)) != r.members.end();
    }

    // Two vertices with loops 0 and both cross pairs *; `back` overrides E(v, u).
    auto star_pair(char back) -> LStructure
    {
        return testing::mps(std::string("category star\nsignature E/2\ndomain 2\ndefault E *\nE 0 0 = 0\nE 1 1 = 0\nE 1 0 = ") +
            back + "\n");
    }
}

TEST_CASE("enumeration counts")
{
    auto e = Signature::parse("E/2");
    CHECK(enumerate_structures(e, 1, Category::CatStar).size() == 3);
    CHECK(enumerate_structures(e, 1, Category::CatEmpty).size() == 4);
    CHECK(enumerate_structures(e, 2, Category::Cat01).size() == 10);
}

TEST_CASE("enumerated structures round trip through their forms")
{
    for (auto & s : enumerate_structures(Signature::parse("E/2"), 2, Category::CatStar))
        CHECK(structure_from_canonical_form(canonical_form(s)) == s);
}

TEST_CASE("inclusion-minimal predicate")
{
    auto k2 = testing::k2();
    CHECK(is_inclusion_minimal_obstruction(testing::loop("01", '1'), k2));
    CHECK(is_inclusion_minimal_obstruction(odd_cycle_empty(3), k2));
    CHECK_FALSE(is_inclusion_minimal_obstruction(k2, k2));
    CHECK(is_inclusion_minimal_obstruction(odd_cycle_empty(5), k2));
    CHECK_FALSE(is_inclusion_minimal_obstruction(odd_cycle_empty(4), k2));
}

TEST_CASE("the star pair is inclusion-minimal but not hom-minimal")
{
    auto k2 = testing::k2();
    auto g = star_pair('*');
    auto lower = star_pair('0');
    CHECK(is_inclusion_minimal_obstruction(g, k2));
    CHECK(find_homomorphism(lower, g));
    CHECK_FALSE(find_homomorphism(g, lower));
    CHECK_FALSE(find_homomorphism(lower, k2));
    CHECK_FALSE(is_hom_minimal_obstruction(g, k2, 2));
}

TEST_CASE("a 1-loop is hom-minimal for K2")
{
    CHECK(is_hom_minimal_obstruction(testing::loop("01", '1'), testing::k2(), 3));
}

TEST_CASE("odd cycles")
{
    auto c3 = odd_cycle_empty(3);
    CHECK(c3.size() == 3);
    for (Element x = 0; x < 3; ++x)
        for (Element y = 0; y < 3; ++y)
            CHECK(c3.get_label(0, std::vector<Element>{x, y}) == ((x + 1) % 3 == y ? Label::One : Label::Empty));
    auto k2 = testing::k2();
    CHECK_FALSE(find_homomorphism(c3, k2));
    CHECK(find_homomorphism(odd_cycle_empty(4), k2));
    for (Element x = 0; x < 3; ++x)
        CHECK(find_homomorphism(delete_element(c3, x), k2));
}

TEST_CASE("obstruction sets for K2")
{
    auto k2 = testing::k2();
    auto inc = inclusion_minimal_obstructions(k2, Category::Cat01, 3);
    CHECK(contains(inc, testing::loop("01", '1')));
    auto hom = hom_minimal_obstructions(k2, Category::Cat01, 3, 3);
    CHECK(inc.members == hom.members);

    auto cycles = inclusion_minimal_among(k2, Category::CatEmpty, {odd_cycle_empty(3), odd_cycle_empty(4), odd_cycle_empty(5)});
    CHECK(contains(cycles, odd_cycle_empty(3)));
    CHECK(contains(cycles, odd_cycle_empty(5)));
    CHECK_FALSE(contains(cycles, odd_cycle_empty(4)));
}

TEST_CASE("trivial targets have no obstructions")
{
    CHECK(inclusion_minimal_obstructions(testing::loop("star", '*'), Category::CatStar, 2).members.empty());
}

TEST_CASE("duality checks")
{
    auto k2 = testing::k2();
    auto hom = hom_minimal_obstructions(k2, Category::Cat01, 3, 3);
    std::vector<LStructure> family;
    for (auto & f : hom.members)
        family.push_back(structure_from_canonical_form(f));
    CHECK(duality_holds(family, k2, Category::Cat01, 3).holds);

    auto none = duality_holds({}, k2.with_category(Category::CatEmpty), Category::CatEmpty, 3);
    CHECK_FALSE(none.holds);
    REQUIRE(none.counterexample);
    CHECK_FALSE(find_homomorphism(*none.counterexample, k2));

    auto bad = duality_holds({k2}, k2, Category::Cat01, 3);
    CHECK_FALSE(bad.holds);
    CHECK(*bad.counterexample == k2);
}

TEST_CASE("report hash depends only on the target")
{
    auto k2 = testing::k2();
    CHECK(report_target_hash(k2) == report_target_hash(testing::k2()));
    CHECK(report_target_hash(k2) != report_target_hash(testing::loop("01", '0')));
}
