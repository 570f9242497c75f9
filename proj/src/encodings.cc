#include <mpart/encodings.hh>
#include <mpart/error.hh>

namespace mpart {

auto doubled_signature(const Signature & base) -> Signature
{
    std::vector<Symbol> symbols;
    for (auto & s : base) {
        symbols.push_back({s.name + "_0", s.arity});
        symbols.push_back({s.name + "_1", s.arity});
    }
    return Signature(std::move(symbols));
}

auto undoubled_signature(const Signature & doubled) -> Signature
{
    if (doubled.size() % 2 != 0)
        throw ValidationError("signature '" + doubled.to_string() + "' is not a doubled signature");
    std::vector<Symbol> symbols;
    for (std::size_t i = 0; i < doubled.size(); i += 2) {
        auto & zero = doubled[i];
        auto & one = doubled[i + 1];
        auto ends_with = [](const std::string & s, std::string_view suffix) {
            return s.size() > suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
        };
        if (! ends_with(zero.name, "_0") || ! ends_with(one.name, "_1") || zero.arity != one.arity ||
            zero.name.substr(0, zero.name.size() - 2) != one.name.substr(0, one.name.size() - 2))
            throw ValidationError("symbols " + zero.name + " and " + one.name + " do not form a doubled pair");
        symbols.push_back({zero.name.substr(0, zero.name.size() - 2), zero.arity});
    }
    return Signature(std::move(symbols));
}

auto to_csp(const LStructure & a) -> LStructure
{
    if (a.category() == Category::CatCsp)
        throw ValidationError("to_csp expects a 01, star or empty structure");
    LStructure out(doubled_signature(a.signature()), Category::CatCsp, a.size());
    for (std::size_t r = 0; r < a.signature().size(); ++r) {
        auto table = a.dense(r);
        for (int j = 0; j < 2; ++j) {
            auto bit = j == 0 ? Label::Zero : Label::One;
            std::vector<Label> derived(table.size());
            for (std::size_t i = 0; i < table.size(); ++i)
                derived[i] = label_leq(bit, table[i], Category::CatEmpty) ? Label::One : Label::Zero;
            out.assign_dense(2 * r + j, derived);
        }
    }
    return out;
}

auto from_csp(const LStructure & a) -> LStructure
{
    if (a.category() != Category::CatCsp)
        throw ValidationError("from_csp expects a csp structure");
    LStructure out(undoubled_signature(a.signature()), Category::CatEmpty, a.size());
    for (std::size_t r = 0; r < out.signature().size(); ++r) {
        auto zero = a.dense(2 * r);
        auto one = a.dense(2 * r + 1);
        std::vector<Label> table(zero.size());
        for (std::size_t i = 0; i < table.size(); ++i) {
            bool z = zero[i] == Label::One, o = one[i] == Label::One;
            table[i] = z && o ? Label::Star : z ? Label::Zero : o ? Label::One : Label::Empty;
        }
        out.assign_dense(r, table);
    }
    return out;
}

}
