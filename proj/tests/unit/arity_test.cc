#include "helpers.hh"

#include <mpart/arity.hh>
#include <mpart/canonical.hh>
#include <mpart/homomorphism.hh>
#include <mpart/random.hh>

#include <doctest.h>

#include <random>

using namespace mpart;

namespace {
    const auto base = Signature::parse("R/2 S/3");
    constexpr Element c = 9;
}

TEST_CASE("packed tuples are classified by their marker runs")
{
    auto a1 = classify_packed_tuple(std::vector<Element>{1, 2, c, c}, base, c);
    CHECK(a1.kind == TupleFamily::Kind::A1);
    CHECK(a1.symbol == 0);
    CHECK(a1.payload == Tuple{1, 2});

    auto a1s = classify_packed_tuple(std::vector<Element>{c, 1, 2, 3}, base, c);
    CHECK(a1s.kind == TupleFamily::Kind::A1);
    CHECK(a1s.symbol == 1);
    CHECK(a1s.payload == Tuple{1, 2, 3});

    CHECK(classify_packed_tuple(std::vector<Element>{c, c, c, c}, base, c).kind == TupleFamily::Kind::A2);
    CHECK(classify_packed_tuple(std::vector<Element>{1, c, 2, c}, base, c).kind == TupleFamily::Kind::A3);
    CHECK(classify_packed_tuple(std::vector<Element>{c, 1, 2, c}, base, c).kind == TupleFamily::Kind::A3);
}

TEST_CASE("packing labels A2 with 1 and A3 with 0")
{
    auto a = testing::fixture("ternary.mps");
    auto p = pack_structure(a);
    CHECK(p.signature().to_string() == "R/4");
    Element m = Element(a.size());
    CHECK(p.get_label(0, std::vector<Element>{m, m, m, m}) == Label::One);
    for_each_tuple(p.size(), 4, [&](const Tuple & t) {
        auto f = classify_packed_tuple(t, base, m);
        if (f.kind == TupleFamily::Kind::A3)
            CHECK(p.get_label(0, t) == Label::Zero);
        else if (f.kind == TupleFamily::Kind::A1)
            CHECK(p.get_label(0, t) == a.get_label(f.symbol, f.payload));
    });
}

TEST_CASE("pack preserves homomorphisms and unpack inverts it")
{
    std::mt19937_64 rng(23);
    for (auto sig : {Signature::parse("R/2 S/1"), Signature::parse("R/2 S/3")}) {
        for (int trial = 0; trial < 25; ++trial) {
            auto b = random_structure(sig, Category::CatStar, 1, 3, rng);
            auto a = random_structure(sig, Category::CatStar, 1, 2, rng);
            CHECK(hom_exists_bruteforce(b, a) == bool(find_homomorphism(pack_structure(b), pack_structure(a))));
            auto back = unpack_instance(pack_structure(b), sig);
            REQUIRE(std::holds_alternative<LStructure>(back));
            CHECK(is_isomorphic(std::get<LStructure>(back), b));
        }
    }
}

TEST_CASE("a star diagonal has no certificate")
{
    LStructure g(packed_signature(base), Category::CatStar, 1);
    g.set_default(0, Label::Star);
    auto r = unpack_instance(g, base);
    REQUIRE(std::holds_alternative<NoCertificate>(r));
    CHECK(std::get<NoCertificate>(r).reason == NoCertificate::Reason::StarLoop);
}

TEST_CASE("a nonzero mixed tuple has no certificate")
{
    LStructure g(packed_signature(base), Category::Cat01, 2);
    g.set_label(0, std::vector<Element>{1, 1, 1, 1}, Label::One);
    g.set_label(0, std::vector<Element>{0, 1, 0, 1}, Label::One);
    auto r = unpack_instance(g, base);
    REQUIRE(std::holds_alternative<NoCertificate>(r));
    CHECK(std::get<NoCertificate>(r).reason == NoCertificate::Reason::NonzeroMixedTuple);
}

TEST_CASE("collapsed marker elements join their labels")
{
    // 0 stays, 1 and 2 have 1-diagonals and collapse into the marker.
    LStructure g(packed_signature(base), Category::CatStar, 3);
    for_each_tuple(2, 4, [&](const Tuple & t) {
        Tuple shifted(t);
        for (auto & e : shifted)
            ++e;
        g.set_label(0, shifted, Label::One);
    });
    g.set_label(0, std::vector<Element>{0, 0, 2, 2}, Label::One);
    auto r = unpack_instance(g, base);
    REQUIRE(std::holds_alternative<LStructure>(r));
    auto & a = std::get<LStructure>(r);
    CHECK(a.size() == 1);
    CHECK(a.get_label(0, std::vector<Element>{0, 0}) == Label::Star);
}

TEST_CASE("designated no instance maps nowhere non-trivial")
{
    auto no = designated_no_instance(base);
    CHECK(no.size() == 1);
    CHECK(is_trivial_target(no));
    CHECK_FALSE(find_homomorphism(no, testing::fixture("ternary.mps")));
}

TEST_CASE("binary to many target")
{
    auto k2 = testing::k2();
    auto r3 = binary_to_many_target(k2, Signature::parse("R/3"));
    for (Element x = 0; x < 2; ++x) {
        CHECK(r3.get_label(0, std::vector<Element>{0, 1, x}) == Label::One);
        CHECK(r3.get_label(0, std::vector<Element>{0, 0, x}) == Label::Zero);
    }
    auto rs = binary_to_many_target(k2, Signature::parse("R/3 S/2"));
    CHECK(rs.default_label(1) == Label::Star);
    CHECK(rs.overrides(1).empty());
}

TEST_CASE("many to binary instance")
{
    auto g = testing::fixture("star_pair.mps");
    CHECK(many_to_binary_instance(binary_to_many_instance(g, Signature::parse("R/2 S/1"))) == g);

    LStructure b(Signature::parse("R/3"), Category::Cat01, 2);
    b.set_label(0, std::vector<Element>{0, 1, 1}, Label::One);
    CHECK(many_to_binary_instance(b).get_label(0, std::vector<Element>{0, 1}) == Label::Star);
}

TEST_CASE("graph rewrite preserves homomorphisms")
{
    std::mt19937_64 rng(29);
    auto sigma = Signature::parse("R/3 S/2");
    auto e = Signature::parse("E/2");
    for (int trial = 0; trial < 30; ++trial) {
        auto g = random_structure(e, Category::CatStar, 1, 3, rng);
        auto h = random_structure(e, Category::CatStar, 1, 2, rng);
        auto expected = hom_exists_bruteforce(g, h);
        CHECK(expected == hom_exists_bruteforce(binary_to_many_instance(g, sigma), binary_to_many_target(h, sigma)));
        CHECK(expected == hom_exists_bruteforce(many_to_binary_instance(binary_to_many_instance(g, sigma)), h));
    }
}
