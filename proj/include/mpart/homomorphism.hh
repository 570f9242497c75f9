#pragma once

#include <mpart/structure.hh>

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace mpart {

// A total map from a source domain {0..image.size()-1} into {0..target_size-1}.
struct HomMap
{
    std::size_t target_size = 0;
    std::vector<Element> image;

    auto operator==(const HomMap &) const -> bool = default;
};

// Resource caps and search restrictions for the backtracking solver.
struct SolveOptions
{
    // Decision nodes before giving up with ResourceLimitError; 0 means no cap.
    std::uint64_t max_nodes = 0;
    // Wall-clock budget; zero means no limit.
    std::chrono::milliseconds timeout{0};
    // Worker threads for find_homomorphism. The reported witness does not depend on it.
    unsigned jobs = 1;
    // (source, target) pairs the witness must contain / avoid.
    std::vector<std::pair<Element, Element>> pinned;
    std::vector<std::pair<Element, Element>> forbidden;
};

// Checks R^G(t) ⪯ R^H(map(t)) for every symbol and every tuple of G, loops and
// repeated coordinates included. The order is comparison_category(G, H).
// Throws ValidationError on signature or size mismatch.
auto is_homomorphism(const LStructure & g, const LStructure & h, const HomMap & map) -> bool;

// Backtracking with forward checking. Variables are chosen most-constrained
// first (smallest live domain, lowest index on ties); values ascend. The
// returned witness is the first one this deterministic order reaches.
auto find_homomorphism(const LStructure & g, const LStructure & h, const SolveOptions & options = {})
    -> std::optional<HomMap>;

// Visits every homomorphism exactly once in lexicographic order of the image
// vector; stops early when `visit` returns false. Returns the number visited.
auto enumerate_homomorphisms(const LStructure & g, const LStructure & h,
    const std::function<bool(const HomMap &)> & visit, const SolveOptions & options = {}) -> std::uint64_t;

auto all_homomorphisms(const LStructure & g, const LStructure & h, const SolveOptions & options = {})
    -> std::vector<HomMap>;

inline constexpr std::uint64_t default_bruteforce_cap = 10'000'000;

// Exhaustive oracle: tries all |H|^|G| maps. Throws ResourceLimitError when that
// count exceeds `max_maps`.
auto hom_exists_bruteforce(const LStructure & g, const LStructure & h,
    std::uint64_t max_maps = default_bruteforce_cap) -> bool;

// second ∘ first
auto compose(const HomMap & first, const HomMap & second) -> HomMap;

auto is_surjective(const HomMap & map) -> bool;
auto is_injective(const HomMap & map) -> bool;

// Throws ValidationError unless g and h can be compared.
auto check_comparable(const LStructure & g, const LStructure & h) -> Category;

}
