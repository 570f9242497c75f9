#include "helpers.hh"

#include <mpart/canonical.hh>
#include <mpart/random.hh>

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace mpart;

TEST_CASE("canonical form is permutation invariant")
{
    std::mt19937_64 rng(3);
    auto sig = Signature::parse("R/2 S/3");
    for (int trial = 0; trial < 50; ++trial) {
        auto s = random_structure(sig, Category::CatEmpty, 1, 5, rng);
        std::vector<Element> perm(s.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(s) == canonical_form(permute(s, perm)));
    }
}

TEST_CASE("distinct structures get distinct forms")
{
    auto k2 = testing::k2();
    auto independent = testing::mps("category 01\nsignature E/2\ndomain 2\ndefault E 0\n");
    CHECK(canonical_form(k2) != canonical_form(independent));
    CHECK_FALSE(is_isomorphic(k2, independent));
}

TEST_CASE("empty structure has a fixed form")
{
    LStructure e(Signature::parse("E/2"), Category::Cat01, 0);
    CHECK(canonical_form(e) == "01|E/2|0|");
}

TEST_CASE("cores")
{
    CHECK(is_core(testing::k2()));
    CHECK(is_core(testing::loop("star", '*')));
    auto independent = testing::mps("category 01\nsignature E/2\ndomain 2\ndefault E 0\n");
    CHECK_FALSE(is_core(independent));
    auto core = core_of(independent);
    CHECK(core.size() == 1);
    CHECK(core.get_label(0, std::vector<Element>{0, 0}) == Label::Zero);
}

TEST_CASE("core is hom-equivalent and idempotent")
{
    std::mt19937_64 rng(5);
    auto sig = Signature::parse("E/2");
    for (int trial = 0; trial < 60; ++trial) {
        auto s = random_structure(sig, Category::CatStar, 1, 5, rng);
        auto c = core_of(s);
        CHECK(is_core(c));
        CHECK(find_homomorphism(s, c));
        CHECK(find_homomorphism(c, s));
    }
}
