#include <mpart/random.hh>

namespace mpart {

auto random_structure(const Signature & sigma, Category cat, std::size_t n, std::mt19937_64 & rng) -> LStructure
{
    LStructure s(sigma, cat, n);
    auto labels = labels_of(cat);
    std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
    for (std::size_t r = 0; r < sigma.size(); ++r) {
        std::vector<Label> table(s.tuple_count(r));
        for (auto & l : table)
            l = labels[pick(rng)];
        s.assign_dense(r, table);
    }
    return s;
}

auto random_structure(const Signature & sigma, Category cat, std::size_t lo, std::size_t hi, std::mt19937_64 & rng)
    -> LStructure
{
    std::uniform_int_distribution<std::size_t> size(lo, hi);
    return random_structure(sigma, cat, size(rng), rng);
}

}
