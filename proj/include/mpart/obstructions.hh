#pragma once

#include <mpart/homomorphism.hh>
#include <mpart/structure.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mpart {

// Refuse to enumerate more raw labellings than this before deduplication.
inline constexpr std::uint64_t max_enumeration_labelings = 100'000'000;

// One structure per isomorphism class with domain size exactly n, each in the
// labelling that realises its canonical form, sorted by canonical form.
auto enumerate_structures(const Signature & sigma, std::size_t n, Category cat) -> std::vector<LStructure>;

// The representative whose label string is the canonical form itself.
auto structure_from_canonical_form(std::string_view form) -> LStructure;

// G does not map to H but every one-element deletion does. The empty structure
// is never an obstruction.
auto is_inclusion_minimal_obstruction(const LStructure & g, const LStructure & h, const SolveOptions & options = {})
    -> bool;

// All structures of sizes 1..bound in one category, with a memoised
// homomorphism relation between them. Used as the range of G' in the
// hom-minimality condition.
class Universe
{
public:
    Universe(const Signature & sigma, Category cat, std::size_t bound);
    ~Universe();
    Universe(Universe &&) noexcept;

    auto category() const -> Category { return category_; }
    auto bound() const -> std::size_t { return bound_; }
    auto size() const -> std::size_t { return members_.size(); }
    auto member(std::size_t i) const -> const LStructure & { return members_[i]; }
    auto form(std::size_t i) const -> const std::string & { return forms_[i]; }
    auto index_of(const std::string & form) const -> std::optional<std::size_t>;

    // member(from) -> member(to), computed once.
    auto maps(std::size_t from, std::size_t to) -> bool;

    struct Compiled;
    auto compiled(std::size_t i) const -> const Compiled &;

private:
    Category category_;
    std::size_t bound_;
    std::vector<LStructure> members_;
    std::vector<std::string> forms_;
    std::vector<Compiled> compiled_;
    std::vector<std::int8_t> relation_;
};

// G is a core, G does not map to H, and every G' of the universe with G' -> G
// and G not-> G' maps to H. Certified only relative to the universe.
auto is_hom_minimal_obstruction(const LStructure & g, const LStructure & h, Universe & universe) -> bool;
auto is_hom_minimal_obstruction(const LStructure & g, const LStructure & h, std::size_t universe_bound) -> bool;

enum class ObstructionMode
{
    Inclusion,
    Hom,
};

struct ObstructionReport
{
    LStructure target;
    Category category;
    std::size_t max_size = 0;
    ObstructionMode mode = ObstructionMode::Inclusion;
    std::size_t universe_bound = 0;
    // Canonical forms of the members, sorted.
    std::vector<std::string> members;
};

// Candidates are all structures of sizes 1..max_n in `cat`. A trivial target
// yields no members without any search.
auto inclusion_minimal_obstructions(const LStructure & h, Category cat, std::size_t max_n) -> ObstructionReport;
auto hom_minimal_obstructions(const LStructure & h, Category cat, std::size_t max_n, std::size_t universe_bound)
    -> ObstructionReport;
auto hom_minimal_obstructions(const LStructure & h, std::size_t max_n, Universe & universe) -> ObstructionReport;

// Filters an explicit candidate family instead of the full enumeration; for
// categories and sizes where enumeration is out of reach. max_size in the
// report is the largest candidate size.
auto inclusion_minimal_among(const LStructure & h, Category cat, const std::vector<LStructure> & candidates)
    -> ObstructionReport;

auto report_target_hash(const LStructure & target) -> std::string;
auto serialize_report(const ObstructionReport & report) -> std::string;

struct DualityResult
{
    bool holds = true;
    // First G (by size, then canonical form) violating "G not-> H iff some F -> G";
    // a member of F that maps to H is reported before any enumeration.
    std::optional<LStructure> counterexample;
};

auto duality_holds(const std::vector<LStructure> & family, const LStructure & h, Category cat, std::size_t max_n)
    -> DualityResult;

// v_0 .. v_{n-1} with E(v_i, v_{i+1 mod n}) = 1 and every other pair ∅.
auto odd_cycle_empty(std::size_t n) -> LStructure;

}
