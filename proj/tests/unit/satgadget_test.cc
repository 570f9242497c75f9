#include "helpers.hh"

#include <mpart/error.hh>
#include <mpart/homomorphism.hh>
#include <mpart/satgadget.hh>

#include <doctest.h>

#include <random>

using namespace mpart;

TEST_CASE("DIMACS parsing is strict")
{
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 -2 0\n"), ParseError);
    auto f = parse_dimacs("c comment\np cnf 3 1\nc another\n1 2 3 0\n");
    CHECK(f.num_vars == 3);
    REQUIRE(f.clauses.size() == 1);
    CHECK(f.clauses[0] == std::array{1, 2, 3});
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2 3 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 2\n1 2 2 0\n"), ParseError);
    CHECK(parse_dimacs(serialize_dimacs(f)).clauses == f.clauses);
}

TEST_CASE("brute force SAT")
{
    CHECK(brute_force_sat(parse_dimacs("p cnf 1 1\n1 1 1 0\n")) == std::vector<bool>{true});
    CHECK_FALSE(brute_force_sat(parse_dimacs("p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n")));
}

TEST_CASE("variable paths")
{
    auto p = variable_path(1, 1);
    CHECK(p.size() == 6);
    CHECK(p.get_label(0, std::vector<Element>{2, 1}) == Label::One);
    CHECK(p.get_label(0, std::vector<Element>{1, 2}) == Label::Zero);
    CHECK(p.get_label(0, std::vector<Element>{0, 1}) == Label::One);
    std::size_t edges = 0;
    for (auto & [index, label] : p.overrides(0))
        edges += label == Label::One;
    CHECK((p.default_label(0) == Label::Zero && edges == 5));
}

TEST_CASE("variable paths are pairwise incomparable")
{
    for (std::size_t n : {4, 8})
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j)
                CHECK(bool(find_homomorphism(variable_path(i, n), variable_path(j, n))) == (i == j));
}

TEST_CASE("clause paths use the binary index")
{
    CHECK(clause_path(0, 0, 0) == variable_path(1, 8));
    CHECK(clause_path(1, 1, 1) == variable_path(8, 8));
}

TEST_CASE("gadget sizes")
{
    for (auto [n, m] : {std::pair{1, 1}, {3, 2}, {2, 4}}) {
        Cnf3 f;
        f.num_vars = std::size_t(n);
        for (int c = 0; c < m; ++c)
            f.clauses.push_back({1, -n, c % 2 ? n : -1});
        auto g = build_gadget(f);
        CHECK(g.tree.size() == 1 + std::size_t(m) * (3 * std::size_t(n) + 25));
        CHECK(g.target.size() == 1 + std::size_t(m) * (21 * std::size_t(n) + 103));
        CHECK(g.tree.size() == expected_tree_size(std::size_t(n), std::size_t(m)));
        CHECK(g.target.size() == expected_target_size(std::size_t(n), std::size_t(m)));
        CHECK(g.tree.category() == Category::Cat01);
        CHECK(g.target.category() == Category::CatStar);
        for (auto & branches : g.target_branches)
            CHECK(branches.size() == 7);
    }
    Cnf3 empty;
    empty.num_vars = 2;
    CHECK(build_gadget(empty).tree.size() == 1);
}

TEST_CASE("the instance tree is a tree")
{
    auto g = build_gadget(parse_dimacs("p cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n"));
    auto n = g.tree.size();
    std::vector<Element> parent(n);
    for (Element x = 0; x < n; ++x)
        parent[x] = x;
    auto find = [&](Element x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t edges = 0;
    bool acyclic = true;
    for (auto & [index, label] : g.tree.overrides(0)) {
        REQUIRE(g.tree.default_label(0) == Label::Zero);
        if (label != Label::One)
            continue;
        auto t = g.tree.tuple_at(0, index);
        ++edges;
        auto a = find(t[0]), b = find(t[1]);
        acyclic = acyclic && a != b;
        parent[a] = b;
    }
    CHECK(acyclic);
    CHECK(edges == n - 1);
}

TEST_CASE("the falsifying assignment has no branch")
{
    auto g = build_gadget(parse_dimacs("p cnf 3 1\n-1 -2 -3 0\n"));
    for (auto & b : g.target_branches[0])
        CHECK(b.assignment != 7);
}

TEST_CASE("assignments become homomorphisms and read back")
{
    auto f = parse_dimacs("p cnf 3 1\n1 2 3 0\n");
    auto g = build_gadget(f);
    std::vector<bool> v{false, false, true};
    auto h = assignment_to_hom(g, v);
    CHECK(is_homomorphism(g.tree, g.target, h));
    CHECK(h.image[g.root_tree] == g.root_target);
    CHECK(hom_to_assignment(g, h) == v);
    CHECK_THROWS_AS(assignment_to_hom(g, {false, false, false}), ValidationError);
}

TEST_CASE("cross edges join 1-tagged to 0-tagged copies of one variable")
{
    auto g = build_gadget(parse_dimacs("p cnf 2 2\n1 2 2 0\n-1 2 -2 0\n"));
    for (auto & [index, label] : g.target.overrides(0)) {
        if (label != Label::One)
            continue;
        auto t = g.target.tuple_at(0, index);
        auto & a = g.target_places[t[0]];
        auto & b = g.target_places[t[1]];
        if (a.part == GadgetPlace::Part::VariablePath && b.part == GadgetPlace::Part::VariablePath &&
            (a.branch != b.branch || a.clause != b.clause)) {
            CHECK(a.variable == b.variable);
            CHECK(a.tag == 1);
            CHECK(b.tag == 0);
        }
    }
}

TEST_CASE("unsatisfiable formulas have no homomorphism")
{
    auto r = verify_reduction(parse_dimacs("p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n"));
    CHECK_FALSE(r.sat);
    CHECK_FALSE(r.hom);
    CHECK(r.passed());
}

TEST_CASE("random formulas agree")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        Cnf3 f;
        f.num_vars = 1 + rng() % 3;
        auto m = 1 + rng() % 2;
        for (std::size_t c = 0; c < m; ++c) {
            std::array<int, 3> clause{};
            for (auto & l : clause)
                l = int(1 + rng() % f.num_vars) * (rng() % 2 ? 1 : -1);
            f.clauses.push_back(clause);
        }
        auto r = verify_reduction(f);
        CHECK(r.passed());
    }
}
