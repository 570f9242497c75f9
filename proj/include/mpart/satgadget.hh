#pragma once

#include <mpart/homomorphism.hh>
#include <mpart/structure.hh>

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mpart {

// A 3-CNF. Literals follow DIMACS: +v is x_v, -v is ¬x_v, variables 1..num_vars.
// Clause (l1 ∨ l2 ∨ l3) is read as ¬(¬l1 ∧ ¬l2 ∧ ¬l3).
struct Cnf3
{
    std::size_t num_vars = 0;
    std::vector<std::array<int, 3>> clauses;
};

// Strict DIMACS: a `p cnf V C` header, `c` comment lines, every clause exactly three
// non-zero literals in range and terminated by 0, exactly C clauses, optional `%` trailer.
auto parse_dimacs(std::string_view text) -> Cnf3;
auto serialize_dimacs(const Cnf3 & cnf) -> std::string;

// Sign of the j-th conjunct inside the negated conjunction: 1 when that conjunct
// is a negated variable, i.e. when the DIMACS literal is positive.
auto conjunct_signs(const std::array<int, 3> & clause) -> std::array<int, 3>;

auto satisfies(const Cnf3 & cnf, const std::vector<bool> & assignment) -> bool;

// Exhaustive search over all 2^n assignments; returns the least satisfying one
// (x_1 most significant) or an empty vector.
auto brute_force_sat(const Cnf3 & cnf) -> std::optional<std::vector<bool>>;

inline constexpr std::size_t max_brute_force_vars = 24;

// Oriented path on n+5 elements 0..n+4. Edge j (1-based) joins elements j-1 and j
// and points forward, except edge i+1, which points backward.
auto variable_path(std::size_t i, std::size_t n) -> LStructure;

// variable_path(4*n1 + 2*n2 + n3 + 1, 8).
auto clause_path(int n1, int n2, int n3) -> LStructure;

// Where an element of the instance tree or the target sits in the construction.
struct GadgetPlace
{
    enum class Part
    {
        Root,
        ClausePath,
        Head,
        VariablePath,
    };

    Part part = Part::Root;
    std::size_t clause = 0;
    // Branch index within the clause (target only; 0 for the instance tree).
    std::size_t branch = 0;
    // Literal position 0..2 within the clause.
    std::size_t slot = 0;
    std::size_t variable = 0;
    // Assignment value of the branch copy (target only; -1 for the instance tree).
    int tag = -1;
    std::size_t position = 0;
    bool in_target = false;
};

struct GadgetPair
{
    Cnf3 cnf;
    LStructure tree;
    LStructure target;
    Element root_tree = 0;
    Element root_target = 0;
    std::vector<GadgetPlace> tree_places;
    std::vector<GadgetPlace> target_places;

    // tree_paths[c][j][p]: element at position p of the j-th variable path of clause c.
    std::vector<std::array<std::vector<Element>, 3>> tree_paths;
    // clause path and head per clause (clause path position 0 is the root).
    std::vector<std::vector<Element>> tree_clause_paths, target_clause_paths;
    std::vector<Element> tree_heads;
    // target_branches[c][b]: assignment bits (4v1 + 2v2 + v3), head, and paths.
    struct Branch
    {
        unsigned assignment;
        Element head;
        std::array<std::vector<Element>, 3> paths;
    };
    std::vector<std::vector<Branch>> target_branches;
};

auto expected_tree_size(std::size_t n, std::size_t m) -> std::size_t;
auto expected_target_size(std::size_t n, std::size_t m) -> std::size_t;

// Builds the instance tree T (a 01-structure) and the target H (emitted as a star
// structure that only uses 0 and 1). Each clause contributes seven branches to H,
// one per assignment of its three literal positions that satisfies it, in
// ascending order of 4v1 + 2v2 + v3. The rightmost element of each variable path
// copy is its endpoint; E(x, y) = 1 whenever x ends a copy tagged 1 and y ends a
// copy tagged 0 of the same variable, in any clauses.
auto build_gadget(const Cnf3 & cnf) -> GadgetPair;

// Maps each clause block of T onto the branch of H selected by `assignment`.
// Throws ValidationError when the assignment falsifies a clause.
auto assignment_to_hom(const GadgetPair & gadget, const std::vector<bool> & assignment) -> HomMap;

// Reads each variable's value from the tags of the copies its paths land in;
// variables that occur nowhere get 0. Throws ValidationError when `map` is not a
// homomorphism or the copies disagree.
auto hom_to_assignment(const GadgetPair & gadget, const HomMap & map) -> std::vector<bool>;

struct ReductionReport
{
    bool sat = false;
    bool hom = false;
    // Witness maps r_T to r_H.
    bool root_ok = true;
    // Pinning r_T to r_H finds a witness exactly when the free search does.
    bool pinned_ok = true;
    // With r_T -> r_H forbidden no witness exists.
    bool forbidden_ok = true;
    bool size_ok = true;
    // The assignment read back from the witness satisfies the formula.
    bool readback_ok = true;
    std::size_t tree_size = 0, target_size = 0;
    std::vector<bool> assignment;

    auto equivalent() const -> bool { return sat == hom; }
    auto passed() const -> bool { return equivalent() && root_ok && pinned_ok && forbidden_ok && size_ok && readback_ok; }
};

auto verify_reduction(const Cnf3 & cnf, const SolveOptions & options = {}) -> ReductionReport;

// First line is `SAT=<bool> HOM=<bool> EQUIV=<bool>`.
auto serialize_reduction_report(const Cnf3 & cnf, const ReductionReport & report) -> std::string;

// One line per element: `<element> <description>`.
auto serialize_places(const std::vector<GadgetPlace> & places) -> std::string;

}
