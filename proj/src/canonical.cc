#include <mpart/canonical.hh>
#include <mpart/error.hh>

#include <algorithm>
#include <numeric>

namespace mpart {

namespace {
    auto header(const LStructure & s) -> std::string
    {
        return std::string(to_string(s.category())) + "|" + s.signature().to_string() + "|" + std::to_string(s.size()) +
            "|";
    }
}

auto canonical_form(const LStructure & s) -> std::string
{
    const auto n = s.size();
    if (n > max_canonical_size)
        throw ValidationError("canonical form needs a domain of at most " + std::to_string(max_canonical_size) +
            " elements, got " + std::to_string(n));

    std::vector<std::vector<Label>> tables;
    std::size_t length = 0;
    for (std::size_t r = 0; r < s.signature().size(); ++r) {
        tables.push_back(s.dense(r));
        length += tables.back().size();
    }

    // inverse[u] is the original element placed at position u.
    std::vector<Element> inverse(n);
    std::iota(inverse.begin(), inverse.end(), 0);
    std::string best, candidate;
    candidate.reserve(length);
    bool first = true;
    do {
        candidate.clear();
        // Relation of the candidate prefix to best: 0 equal so far, -1 smaller, +1 larger.
        int order = 0;
        for (std::size_t r = 0; r < tables.size() && order <= 0; ++r) {
            for_each_tuple(n, s.signature()[r].arity, [&](const Tuple & t) {
                if (order > 0)
                    return;
                std::uint64_t index = 0;
                for (auto e : t)
                    index = index * n + inverse[e];
                auto c = to_char(tables[r][index]);
                if (! first && order == 0 && c != best[candidate.size()])
                    order = c < best[candidate.size()] ? -1 : 1;
                candidate.push_back(c);
            });
        }
        if (first || order < 0) {
            best = candidate;
            first = false;
        }
    } while (std::next_permutation(inverse.begin(), inverse.end()));

    return header(s) + best;
}

auto is_isomorphic(const LStructure & g, const LStructure & h) -> bool
{
    if (g.signature() != h.signature() || g.category() != h.category() || g.size() != h.size())
        return false;
    return canonical_form(g) == canonical_form(h);
}

auto is_core(const LStructure & s, const SolveOptions & options) -> bool
{
    for (Element x = 0; x < s.size(); ++x)
        if (find_homomorphism(s, delete_element(s, x), options))
            return false;
    return true;
}

auto core_elements(const LStructure & s, const SolveOptions & options) -> std::vector<Element>
{
    std::vector<Element> kept(s.size());
    std::iota(kept.begin(), kept.end(), 0);
    auto current = s;
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (auto i = kept.size(); i-- > 0;) {
            auto smaller = delete_element(current, Element(i));
            if (find_homomorphism(current, smaller, options)) {
                kept.erase(kept.begin() + std::ptrdiff_t(i));
                current = std::move(smaller);
                shrunk = true;
                break;
            }
        }
    }
    return kept;
}

auto core_of(const LStructure & s, const SolveOptions & options) -> LStructure
{
    return induced_substructure(s, core_elements(s, options));
}

}
