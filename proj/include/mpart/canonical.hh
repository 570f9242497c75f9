#pragma once

#include <mpart/homomorphism.hh>
#include <mpart/structure.hh>

#include <string>
#include <vector>

namespace mpart {

inline constexpr std::size_t max_canonical_size = 8;

// Byte string that is equal for two structures iff they are isomorphic. Made of
// a header (category, signature, domain size) followed by the lexicographically
// least label string over all relabellings of the domain. Throws
// ValidationError when the domain exceeds max_canonical_size.
auto canonical_form(const LStructure & s) -> std::string;

auto is_isomorphic(const LStructure & g, const LStructure & h) -> bool;

// Every endomorphism is a bijection; equivalently S does not map into S minus
// any single element.
auto is_core(const LStructure & s, const SolveOptions & options = {}) -> bool;

// Elements of S kept by the retraction sequence of core_of, in increasing order.
// At every step the largest element whose deletion still admits S -> S' is
// removed, which makes the kept set the lexicographically least available.
auto core_elements(const LStructure & s, const SolveOptions & options = {}) -> std::vector<Element>;

auto core_of(const LStructure & s, const SolveOptions & options = {}) -> LStructure;

}
