#include "helpers.hh"

#include <mpart/error.hh>
#include <mpart/mps.hh>
#include <mpart/random.hh>

#include <doctest.h>

#include <random>

using namespace mpart;

TEST_CASE("K2 parses")
{
    auto k2 = testing::k2();
    CHECK(k2.size() == 2);
    CHECK(k2.get_label(0, std::vector<Element>{0, 0}) == Label::Zero);
    CHECK(k2.get_label(0, std::vector<Element>{0, 1}) == Label::One);
    CHECK(k2.get_label(0, std::vector<Element>{1, 0}) == Label::One);
}

TEST_CASE("parse errors carry line numbers")
{
    auto line_of = [](const std::string & text) -> std::size_t {
        try {
            parse_mps(text);
        }
        catch (const ParseError & e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("category 01\nsignature E/2\ndomain 1\ndefault E *\n") == 4);
    CHECK(line_of("category 01\nsignature E/2\ndomain 2\ndefault E 0\nE 0 1 = 1\nE 0 1 = 0\n") == 6);
    CHECK(line_of("category 01\nsignature E/2\ndomain 2\ndefault E 0\nE 0 2 = 1\n") == 5);
    CHECK(line_of("category 01\nsignature E/2\ndomain 2\ndefault E 0\nE 0 = 1\n") == 5);
    CHECK(line_of("category 01\nsignature E/2\ndomain 2\ndefault E 0\nF 0 0 = 1\n") == 5);
    CHECK(line_of("category 01\nsignature E/2\ndomain 2\n") == 4);
    CHECK(line_of("signature E/2\ncategory 01\n") == 1);
    CHECK(line_of("category bogus\n") == 1);
}

TEST_CASE("comments and override order are irrelevant")
{
    auto a = parse_mps("# x\ncategory 01\nsignature E/2\ndomain 2\ndefault E 0\nE 1 0 = 1 # tail\nE 0 1 = 1\n");
    auto b = parse_mps("category 01\nsignature E/2\ndomain 2\ndefault E 0\nE 0 1 = 1\nE 1 0 = 1\n");
    CHECK(a == b);
    CHECK(serialize_mps(a) == serialize_mps(b));
}

TEST_CASE("serialization round trips and is idempotent")
{
    std::mt19937_64 rng(37);
    auto sig = Signature::parse("R/2 S/1 T/3");
    for (auto cat : all_categories) {
        for (int trial = 0; trial < 40; ++trial) {
            auto s = random_structure(sig, cat, 0, 4, rng);
            auto text = serialize_mps(s);
            auto back = parse_mps(text);
            CHECK(back == s);
            CHECK(serialize_mps(back) == text);
        }
    }
}

TEST_CASE("maps round trip")
{
    HomMap m{3, {2, 0, 1, 1}};
    CHECK(parse_map(serialize_map(m), 3) == m);
    CHECK_THROWS_AS(parse_map("0 -> 3\n", 3), ValidationError);
}
