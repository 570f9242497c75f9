#include <mpart/arity.hh>
#include <mpart/error.hh>

#include <algorithm>
#include <optional>

namespace mpart {

namespace {
    auto require_star_like(const LStructure & s, const char * what) -> void
    {
        if (s.category() != Category::Cat01 && s.category() != Category::CatStar)
            throw ValidationError(std::string(what) + " expects a 01 or star structure");
    }

    auto require_graph(const LStructure & g) -> void
    {
        if (g.signature().size() != 1 || g.signature()[0].arity != 2)
            throw ValidationError("expected a graph with a single binary symbol, got '" + g.signature().to_string() + "'");
        require_star_like(g, "graph rewrite");
    }

    auto require_wide_first(const Signature & sigma) -> void
    {
        if (sigma.size() == 0 || sigma[0].arity < 2)
            throw ValidationError("the first symbol of '" + sigma.to_string() + "' must have arity at least 2");
    }
}

auto packed_arity(const Signature & base) -> unsigned
{
    if (base.size() == 0)
        throw ValidationError("packing needs at least one relation symbol");
    return base.max_arity() + unsigned(base.size()) - 1;
}

auto packed_signature(const Signature & base) -> Signature
{
    return Signature({Symbol{"R", packed_arity(base)}});
}

auto classify_packed_tuple(std::span<const Element> tuple, const Signature & base, Element marker) -> TupleFamily
{
    auto width = packed_arity(base);
    if (tuple.size() != width)
        throw ValidationError("packed tuple must have length " + std::to_string(width));

    std::size_t lead = 0;
    while (lead < tuple.size() && tuple[lead] == marker)
        ++lead;
    if (lead == tuple.size())
        return {TupleFamily::Kind::A2, 0, {}};
    std::size_t trail = 0;
    while (tuple[tuple.size() - 1 - trail] == marker)
        ++trail;

    auto middle = tuple.subspan(lead, tuple.size() - lead - trail);
    bool clean = std::find(middle.begin(), middle.end(), marker) == middle.end();
    if (clean && lead < base.size() && base[lead].arity == middle.size())
        return {TupleFamily::Kind::A1, lead, Tuple(middle.begin(), middle.end())};
    return {TupleFamily::Kind::A3, 0, {}};
}

auto pack_structure(const LStructure & a) -> LStructure
{
    require_star_like(a, "packing");
    auto & base = a.signature();
    auto marker = Element(a.size());
    LStructure out(packed_signature(base), a.category(), a.size() + 1);

    std::vector<Label> table;
    for_each_tuple(out.size(), out.signature()[0].arity, [&](const Tuple & t) {
        auto family = classify_packed_tuple(t, base, marker);
        switch (family.kind) {
            case TupleFamily::Kind::A1: table.push_back(a.get_label(family.symbol, family.payload)); break;
            case TupleFamily::Kind::A2: table.push_back(Label::One); break;
            case TupleFamily::Kind::A3: table.push_back(Label::Zero); break;
        }
    });
    out.assign_dense(0, table);
    return out;
}

auto to_string(NoCertificate::Reason reason) -> std::string_view
{
    switch (reason) {
        case NoCertificate::Reason::StarLoop: return "star-loop";
        case NoCertificate::Reason::MarkerLoopStar: return "marker-loop-star";
        case NoCertificate::Reason::NonzeroMixedTuple: return "nonzero-mixed-tuple";
    }
    return "?";
}

auto unpack_instance(const LStructure & packed, const Signature & base) -> std::variant<LStructure, NoCertificate>
{
    require_star_like(packed, "unpacking");
    if (packed.signature() != packed_signature(base))
        throw ValidationError("packed structure must have signature '" + packed_signature(base).to_string() + "', got '" +
            packed.signature().to_string() + "'");
    if (base.size() < 2)
        throw ValidationError("unpacking needs a base signature with at least two symbols");

    const auto width = packed_arity(base);
    const auto n = packed.size();
    auto labels = packed.dense(0);

    // Diagonal of x sits at index x * (n^(w-1) + ... + 1).
    std::uint64_t step = 0;
    for (unsigned i = 0; i < width; ++i)
        step = step * n + 1;
    std::vector<Element> c0;
    std::vector<bool> in_c1(n, false);
    for (Element x = 0; x < n; ++x) {
        auto diag = labels[x * step];
        if (diag == Label::Star)
            return NoCertificate{NoCertificate::Reason::StarLoop, "element " + std::to_string(x) + " has a * diagonal"};
        if (diag == Label::One)
            in_c1[x] = true;
        else
            c0.push_back(x);
    }

    // Collapse C1 into the marker c_B = |C0|; Empty is the join of nothing.
    const auto marker = Element(c0.size());
    const auto reduced_size = c0.size() + 1;
    std::vector<Element> project(n);
    for (std::size_t i = 0; i < c0.size(); ++i)
        project[c0[i]] = Element(i);
    for (Element x = 0; x < n; ++x)
        if (in_c1[x])
            project[x] = marker;

    std::uint64_t reduced_tuples = 1;
    for (unsigned i = 0; i < width; ++i)
        reduced_tuples *= reduced_size;
    std::vector<Label> joined(reduced_tuples, Label::Empty);
    std::uint64_t index = 0;
    for_each_tuple(n, width, [&](const Tuple & t) {
        std::uint64_t target = 0;
        for (auto e : t)
            target = target * reduced_size + project[e];
        joined[target] = label_join(joined[target], labels[index++], Category::CatEmpty);
    });

    std::uint64_t marker_diag = 0;
    for (unsigned i = 0; i < width; ++i)
        marker_diag = marker_diag * reduced_size + marker;
    if (joined[marker_diag] == Label::Star)
        return NoCertificate{NoCertificate::Reason::MarkerLoopStar, "the identified marker has a * diagonal"};

    bool uses_empty = false, uses_star = false;
    index = 0;
    std::optional<NoCertificate> failure;
    for_each_tuple(reduced_size, width, [&](const Tuple & t) {
        auto l = joined[index++];
        if (failure)
            return;
        if (classify_packed_tuple(t, base, marker).kind == TupleFamily::Kind::A3 && l != Label::Zero &&
            l != Label::Empty) {
            std::string shown;
            for (auto e : t)
                shown += (shown.empty() ? "" : " ") + (e == marker ? std::string("c") : std::to_string(e));
            failure = NoCertificate{NoCertificate::Reason::NonzeroMixedTuple,
                "mixed tuple (" + shown + ") has label " + std::string(1, to_char(l))};
        }
        uses_empty = uses_empty || l == Label::Empty;
        uses_star = uses_star || l == Label::Star;
    });
    if (failure)
        return *failure;

    auto category = uses_empty ? Category::CatEmpty : uses_star ? Category::CatStar : packed.category();
    LStructure out(base, category, c0.size());
    Tuple wide(width);
    for (std::size_t r = 0; r < base.size(); ++r) {
        std::vector<Label> table;
        for_each_tuple(c0.size(), base[r].arity, [&](const Tuple & t) {
            std::fill(wide.begin(), wide.end(), marker);
            std::copy(t.begin(), t.end(), wide.begin() + std::ptrdiff_t(r));
            std::uint64_t at = 0;
            for (auto e : wide)
                at = at * reduced_size + e;
            table.push_back(joined[at]);
        });
        out.assign_dense(r, table);
    }
    return out;
}

auto designated_no_instance(const Signature & base) -> LStructure
{
    LStructure out(base, Category::CatStar, 1);
    for (std::size_t r = 0; r < base.size(); ++r)
        out.set_default(r, Label::Star);
    return out;
}

auto binary_to_many_target(const LStructure & graph, const Signature & sigma) -> LStructure
{
    require_graph(graph);
    require_wide_first(sigma);
    LStructure out(sigma, Category::CatStar, graph.size());
    for (std::size_t r = 1; r < sigma.size(); ++r)
        out.set_default(r, Label::Star);
    std::vector<Label> table;
    Tuple edge(2);
    for_each_tuple(graph.size(), sigma[0].arity, [&](const Tuple & t) {
        edge[0] = t[0];
        edge[1] = t[1];
        table.push_back(graph.get_label(0, edge));
    });
    out.assign_dense(0, table);
    return out;
}

auto binary_to_many_instance(const LStructure & graph, const Signature & sigma) -> LStructure
{
    return binary_to_many_target(graph, sigma);
}

auto many_to_binary_instance(const LStructure & b) -> LStructure
{
    require_star_like(b, "many-to-binary rewrite");
    require_wide_first(b.signature());
    const auto n = b.size();
    std::vector<Label> table(n * n, Label::Empty);
    auto source = b.dense(0);
    std::uint64_t index = 0;
    for_each_tuple(n, b.signature()[0].arity, [&](const Tuple & t) {
        auto & slot = table[t[0] * n + t[1]];
        slot = label_join(slot, source[index++], Category::CatEmpty);
    });
    LStructure out(Signature({Symbol{"E", 2}}), Category::CatStar, n);
    if (n > 0)
        out.assign_dense(0, table);
    return out;
}

}
