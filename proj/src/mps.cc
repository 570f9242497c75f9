#include <mpart/error.hh>
#include <mpart/mps.hh>

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace mpart {

namespace {
    auto split(std::string_view line) -> std::vector<std::string_view>
    {
        std::vector<std::string_view> words;
        std::size_t pos = 0;
        auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
        while (pos < line.size()) {
            while (pos < line.size() && space(line[pos]))
                ++pos;
            auto start = pos;
            while (pos < line.size() && ! space(line[pos]))
                ++pos;
            if (pos > start)
                words.push_back(line.substr(start, pos - start));
        }
        return words;
    }

    auto parse_number(std::string_view word, std::size_t line, const char * what) -> std::uint64_t
    {
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
        if (ec != std::errc{} || ptr != word.data() + word.size())
            throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(word) + "'");
        return value;
    }

    auto parse_label(std::string_view word, std::size_t line) -> Label
    {
        auto l = word.size() == 1 ? label_from_char(word[0]) : std::nullopt;
        if (! l)
            throw ParseError(line, "unknown label '" + std::string(word) + "'");
        return *l;
    }

    auto lines_of(std::string_view text) -> std::vector<std::string_view>
    {
        std::vector<std::string_view> lines;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto end = text.find('\n', pos);
            if (end == std::string_view::npos)
                end = text.size();
            lines.push_back(text.substr(pos, end - pos));
            pos = end + 1;
        }
        return lines;
    }
}

auto parse_mps(std::string_view text) -> LStructure
{
    std::optional<Category> category;
    std::optional<Signature> signature;
    std::optional<std::uint64_t> domain;
    std::vector<std::optional<Label>> defaults;
    std::vector<std::map<std::uint64_t, Label>> overrides;
    std::optional<LStructure> shape;

    auto lines = lines_of(text);
    for (std::size_t number = 1; number <= lines.size(); ++number) {
        auto line = lines[number - 1];
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto words = split(line);
        if (words.empty())
            continue;
        auto key = words[0];

        if (key == "category") {
            if (category)
                throw ParseError(number, "duplicate category line");
            if (words.size() != 2 || ! (category = category_from_string(words[1])))
                throw ParseError(number, "category must be one of 01, star, empty, csp");
            continue;
        }
        if (key == "signature") {
            if (! category)
                throw ParseError(number, "signature before category");
            if (signature)
                throw ParseError(number, "duplicate signature line");
            try {
                signature = Signature::parse(line.substr(line.find("signature") + 9));
            }
            catch (const ValidationError & e) {
                throw ParseError(number, e.what());
            }
            defaults.assign(signature->size(), std::nullopt);
            overrides.assign(signature->size(), {});
            continue;
        }
        if (key == "domain") {
            if (! signature)
                throw ParseError(number, "domain before signature");
            if (domain)
                throw ParseError(number, "duplicate domain line");
            if (words.size() != 2)
                throw ParseError(number, "domain takes one number");
            domain = parse_number(words[1], number, "a domain size");
            try {
                shape.emplace(*signature, *category, std::size_t(*domain));
            }
            catch (const ValidationError & e) {
                throw ParseError(number, e.what());
            }
            continue;
        }
        if (! shape)
            throw ParseError(number, "'" + std::string(key) + "' before the category, signature and domain lines");

        if (key == "default") {
            if (words.size() != 3)
                throw ParseError(number, "default takes a symbol and a label");
            auto symbol = signature->index_of(words[1]);
            if (! symbol)
                throw ParseError(number, "unknown relation symbol '" + std::string(words[1]) + "'");
            if (defaults[*symbol])
                throw ParseError(number, "duplicate default for " + std::string(words[1]));
            auto l = parse_label(words[2], number);
            if (! admits(*category, l))
                throw ParseError(number, "label '" + std::string(words[2]) + "' not admitted by category " +
                    std::string(to_string(*category)));
            defaults[*symbol] = l;
            continue;
        }

        auto symbol = signature->index_of(key);
        if (! symbol)
            throw ParseError(number, "unknown directive or relation symbol '" + std::string(key) + "'");
        auto arity = (*signature)[*symbol].arity;
        if (words.size() != arity + 3 || words[arity + 1] != "=")
            throw ParseError(number, "override for " + std::string(key) + " must list " + std::to_string(arity) +
                " elements, '=' and a label");
        Tuple t;
        for (unsigned i = 0; i < arity; ++i) {
            auto e = parse_number(words[1 + i], number, "an element");
            if (e >= *domain)
                throw ParseError(number, "element " + std::to_string(e) + " outside domain of size " +
                    std::to_string(*domain));
            t.push_back(Element(e));
        }
        auto l = parse_label(words[arity + 2], number);
        if (! admits(*category, l))
            throw ParseError(number, "label '" + std::string(words[arity + 2]) + "' not admitted by category " +
                std::string(to_string(*category)));
        if (! overrides[*symbol].emplace(shape->tuple_index(*symbol, t), l).second)
            throw ParseError(number, "duplicate tuple for " + std::string(key));
    }

    // Missing headers are reported at the last line.
    auto end = lines.size();
    if (! category)
        throw ParseError(end, "missing category line");
    if (! signature)
        throw ParseError(end, "missing signature line");
    if (! domain)
        throw ParseError(end, "missing domain line");
    for (std::size_t r = 0; r < signature->size(); ++r) {
        if (! defaults[r])
            throw ParseError(end, "missing default line for " + (*signature)[r].name);
        shape->set_default(r, *defaults[r]);
        for (auto & [index, l] : overrides[r])
            shape->set_label_at(r, index, l);
    }
    return *shape;
}

auto serialize_mps(const LStructure & s) -> std::string
{
    auto n = s.normalized();
    std::ostringstream out;
    out << "category " << to_string(n.category()) << '\n';
    out << "signature";
    for (auto & sym : n.signature())
        out << ' ' << sym.name << '/' << sym.arity;
    out << '\n';
    out << "domain " << n.size() << '\n';
    for (std::size_t r = 0; r < n.signature().size(); ++r)
        out << "default " << n.signature()[r].name << ' ' << to_char(n.default_label(r)) << '\n';
    for (std::size_t r = 0; r < n.signature().size(); ++r)
        for (auto & [index, l] : n.overrides(r)) {
            out << n.signature()[r].name;
            for (auto e : n.tuple_at(r, index))
                out << ' ' << e;
            out << " = " << to_char(l) << '\n';
        }
    return out.str();
}

auto serialize_map(const HomMap & map) -> std::string
{
    std::string out;
    for (std::size_t x = 0; x < map.image.size(); ++x)
        out += std::to_string(x) + " -> " + std::to_string(map.image[x]) + "\n";
    return out;
}

auto parse_map(std::string_view text, std::size_t target_size) -> HomMap
{
    HomMap map{target_size, {}};
    auto lines = lines_of(text);
    std::map<std::uint64_t, Element> entries;
    for (std::size_t number = 1; number <= lines.size(); ++number) {
        auto line = lines[number - 1];
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto words = split(line);
        if (words.empty())
            continue;
        if (words.size() != 3 || words[1] != "->")
            throw ParseError(number, "expected '<element> -> <image>'");
        auto x = parse_number(words[0], number, "an element");
        auto y = parse_number(words[2], number, "an element");
        if (y >= target_size)
            throw ParseError(number, "image " + std::to_string(y) + " outside target of size " +
                std::to_string(target_size));
        if (! entries.emplace(x, Element(y)).second)
            throw ParseError(number, "element " + std::to_string(x) + " mapped twice");
    }
    for (auto & [x, y] : entries) {
        if (x != map.image.size())
            throw ParseError(0, "map does not cover element " + std::to_string(map.image.size()));
        map.image.push_back(y);
    }
    return map;
}

auto read_file(const std::string & path) -> std::string
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw ValidationError("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

auto write_file(const std::string & path, std::string_view contents) -> void
{
    std::ofstream out(path, std::ios::binary);
    if (! out || ! out.write(contents.data(), std::streamsize(contents.size())))
        throw ValidationError("cannot write '" + path + "'");
}

}
