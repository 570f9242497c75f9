#include <mpart/error.hh>
#include <mpart/signature.hh>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

namespace mpart {

auto is_identifier(std::string_view s) -> bool
{
    if (s.empty())
        return false;
    auto alpha = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto alnum = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    return alpha(s.front()) && std::all_of(s.begin() + 1, s.end(), alnum);
}

Signature::Signature(std::vector<Symbol> symbols) :
    symbols_(std::move(symbols))
{
    std::set<std::string> seen;
    for (auto & s : symbols_) {
        if (! is_identifier(s.name))
            throw ValidationError("invalid relation symbol name '" + s.name + "'");
        if (s.arity < 1)
            throw ValidationError("relation symbol '" + s.name + "' must have arity >= 1");
        if (! seen.insert(s.name).second)
            throw ValidationError("duplicate relation symbol '" + s.name + "'");
    }
}

auto Signature::parse(std::string_view text) -> Signature
{
    std::vector<Symbol> symbols;
    std::size_t pos = 0;
    auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
    while (pos < text.size()) {
        while (pos < text.size() && is_sep(text[pos]))
            ++pos;
        if (pos == text.size())
            break;
        auto end = pos;
        while (end < text.size() && ! is_sep(text[end]))
            ++end;
        auto token = text.substr(pos, end - pos);
        pos = end;

        auto slash = token.find('/');
        if (slash == std::string_view::npos)
            throw ValidationError("signature entry '" + std::string(token) + "' must look like NAME/ARITY");
        unsigned arity = 0;
        auto digits = token.substr(slash + 1);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), arity);
        if (ec != std::errc{} || ptr != digits.data() + digits.size())
            throw ValidationError("bad arity in signature entry '" + std::string(token) + "'");
        symbols.push_back(Symbol{std::string(token.substr(0, slash)), arity});
    }
    return Signature(std::move(symbols));
}

auto Signature::index_of(std::string_view name) const -> std::optional<std::size_t>
{
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i].name == name)
            return i;
    return std::nullopt;
}

auto Signature::max_arity() const -> unsigned
{
    unsigned k = 0;
    for (auto & s : symbols_)
        k = std::max(k, s.arity);
    return k;
}

auto Signature::to_string() const -> std::string
{
    std::string out;
    for (auto & s : symbols_) {
        if (! out.empty())
            out += ' ';
        out += s.name + "/" + std::to_string(s.arity);
    }
    return out;
}

}
