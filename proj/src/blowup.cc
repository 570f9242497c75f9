#include <mpart/blowup.hh>
#include <mpart/error.hh>
#include <mpart/hadamard.hh>

#include <bit>

namespace mpart {

namespace {
    constexpr std::uint64_t max_blowup_tuples = std::uint64_t{1} << 26;
}

auto block_size(std::size_t m) -> std::size_t
{
    if (m == 0)
        throw ValidationError("target size must be positive");
    if (m > (std::size_t{1} << 20))
        throw ValidationError("target size too large");
    std::uint64_t bound = 4 * std::uint64_t(m) * m + 1;
    return std::size_t(std::bit_floor(bound) << 1);
}

auto star_to_01(const LStructure & g, std::size_t m) -> BlowupResult
{
    if (g.category() != Category::Cat01 && g.category() != Category::CatStar)
        throw ValidationError("blow-up expects a 01 or star structure");
    auto b = block_size(m);
    auto k = unsigned(std::countr_zero(b));

    for (std::size_t r = 0; r < g.signature().size(); ++r) {
        if (g.signature()[r].arity >= 2)
            continue;
        auto table = g.dense(r);
        for (auto l : table)
            if (l == Label::Star)
                throw ValidationError("unary symbol " + g.signature()[r].name +
                    " carries a * label, which the blow-up cannot replace");
    }

    auto size = g.size() * b;
    std::uint64_t tuples = 0;
    for (auto & s : g.signature()) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < s.arity; ++i) {
            if (count > max_blowup_tuples / std::max<std::size_t>(size, 1))
                throw ResourceLimitError("blown-up structure would have more than " +
                    std::to_string(max_blowup_tuples) + " tuples");
            count *= size;
        }
        tuples += count;
    }
    if (tuples > max_blowup_tuples)
        throw ResourceLimitError("blown-up structure would have more than " + std::to_string(max_blowup_tuples) +
            " tuples");

    auto h = sylvester(k);
    BlowupResult result{LStructure(g.signature(), Category::Cat01, size), b, HomMap{g.size(), {}}};
    for (std::size_t v = 0; v < size; ++v)
        result.projection.image.push_back(Element(v / b));

    std::vector<Label> table;
    for (std::size_t r = 0; r < g.signature().size(); ++r) {
        auto source = g.dense(r);
        table.clear();
        for_each_tuple(size, g.signature()[r].arity, [&](const Tuple & t) {
            std::uint64_t index = 0;
            for (auto v : t)
                index = index * g.size() + v / b;
            auto l = source[index];
            if (l == Label::Star)
                l = h.at(t[0] % b, t[1] % b) > 0 ? Label::One : Label::Zero;
            table.push_back(l);
        });
        result.structure.assign_dense(r, table);
    }
    return result;
}

}
