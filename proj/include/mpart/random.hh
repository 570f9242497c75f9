#pragma once

#include <mpart/structure.hh>

#include <random>

namespace mpart {

// Uniform labelling over the labels admitted by `cat`.
auto random_structure(const Signature & sigma, Category cat, std::size_t n, std::mt19937_64 & rng) -> LStructure;

// Domain size drawn uniformly from [lo, hi].
auto random_structure(const Signature & sigma, Category cat, std::size_t lo, std::size_t hi, std::mt19937_64 & rng)
    -> LStructure;

}
