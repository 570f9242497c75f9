#pragma once

#include <mpart/homomorphism.hh>
#include <mpart/structure.hh>

#include <string>
#include <string_view>

namespace mpart {

// Text format, one directive per line, '#' to end of line is a comment:
//
//   category 01|star|empty|csp
//   signature E/2 S/3
//   domain 4
//   default E 0            (exactly one per symbol)
//   E 0 1 = *              (override; each tuple at most once)
//
// category, signature and domain come first, in that order. Errors are
// ParseError with the offending line number.
auto parse_mps(std::string_view text) -> LStructure;

// Canonical text: majority label as each default, overrides in symbol order
// then lexicographic tuple order. parse_mps(serialize_mps(s)) == s.
auto serialize_mps(const LStructure & s) -> std::string;

// One `<element> -> <image>` line per source element.
auto serialize_map(const HomMap & map) -> std::string;
auto parse_map(std::string_view text, std::size_t target_size) -> HomMap;

auto read_file(const std::string & path) -> std::string;
auto write_file(const std::string & path, std::string_view contents) -> void;

}
