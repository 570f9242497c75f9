#pragma once

#include <mpart/structure.hh>

#include <string>
#include <variant>

namespace mpart {

// For a base signature with p symbols of maximum arity k: k + p - 1.
auto packed_arity(const Signature & base) -> unsigned;

// One symbol named R of the packed arity.
auto packed_signature(const Signature & base) -> Signature;

struct TupleFamily
{
    enum class Kind
    {
        A1,
        A2,
        A3,
    };

    Kind kind;
    // For A1: the 0-based symbol index and the marker-free payload.
    std::size_t symbol = 0;
    Tuple payload;
};

// A1(i, t) iff the tuple is marker^(i-1), t, marker^(k+p-k_i-i) with t marker-free of
// length k_i; A2 iff every entry is the marker; A3 otherwise.
auto classify_packed_tuple(std::span<const Element> tuple, const Signature & base, Element marker) -> TupleFamily;

// A plus a marker element appended at index |A|. A1 tuples take the base label,
// the all-marker tuple is 1 and every A3 tuple is 0. A must be a 01 or star structure.
auto pack_structure(const LStructure & a) -> LStructure;

struct NoCertificate
{
    enum class Reason
    {
        StarLoop,
        MarkerLoopStar,
        NonzeroMixedTuple,
    };

    Reason reason;
    std::string detail;
};

auto to_string(NoCertificate::Reason reason) -> std::string_view;

// Recovers a base-signature instance B from a packed instance G̃ so that
// G̃ -> pack(A) iff B -> A, or reports which check proves G̃ maps to no packed
// target. Elements with diagonal label 1 are identified into the marker and
// every tuple is labelled by the join over its class; a tuple whose class is
// empty gets ∅, so B can be an ∅-structure when no diagonal is 1.
//
// Needs at least two base symbols: with one symbol the marker-free tuples are
// themselves A1 tuples and the diagonal no longer identifies the marker.
auto unpack_instance(const LStructure & packed, const Signature & base) -> std::variant<LStructure, NoCertificate>;

// One element whose every diagonal is ⋆; it maps to no structure without a ⋆ loop
// on every symbol.
auto designated_no_instance(const Signature & base) -> LStructure;

// R_1(x_1, ..., x_k) = E(x_1, x_2) and every other symbol ⋆ everywhere. The graph must
// have a single binary symbol and the first symbol of `sigma` arity at least 2.
auto binary_to_many_target(const LStructure & graph, const Signature & sigma) -> LStructure;
auto binary_to_many_instance(const LStructure & graph, const Signature & sigma) -> LStructure;

// E(x, y) = join of R_1(t) over all t with (t_1, t_2) = (x, y). Output signature E/2.
auto many_to_binary_instance(const LStructure & b) -> LStructure;

}
