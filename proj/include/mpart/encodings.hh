#pragma once

#include <mpart/structure.hh>

namespace mpart {

// R1 R2 ... becomes R1_0 R1_1 R2_0 R2_1 ..., arities preserved.
auto doubled_signature(const Signature & base) -> Signature;

// Inverse of doubled_signature; throws ValidationError if `doubled` is not of that shape.
auto undoubled_signature(const Signature & doubled) -> Signature;

// R_{i,j}(t) = 1 iff j ⪯ R_i(t) in the ∅ order. Accepts Cat01, CatStar and
// CatEmpty inputs; the result is a CatCsp structure on the same domain.
auto to_csp(const LStructure & a) -> LStructure;

// The unique CatEmpty structure whose to_csp image is `a`.
auto from_csp(const LStructure & a) -> LStructure;

}
