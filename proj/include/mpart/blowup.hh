#pragma once

#include <mpart/homomorphism.hh>
#include <mpart/structure.hh>

namespace mpart {

struct BlowupResult
{
    LStructure structure;
    std::size_t block_size = 0;
    // Sends element g*block_size + i to g.
    HomMap projection;
};

// Smallest power of two strictly above 4m²+1.
auto block_size(std::size_t m) -> std::size_t;

// Replaces every element g of G by a block V_g of block_size(m) elements. A tuple
// (v_{g1,i1}, ..., v_{gk,ik}) keeps the label of (g1, ..., gk) unless that label is
// ⋆, in which case it gets (H[i1][i2] + 1) / 2 for the Sylvester matrix H of
// order block_size(m). The result is a 01-structure.
//
// Throws ValidationError when G has a ⋆ label on a unary symbol or m is 0, and
// ResourceLimitError when the blown-up tuple space is too large to build.
auto star_to_01(const LStructure & g, std::size_t m) -> BlowupResult;

}
