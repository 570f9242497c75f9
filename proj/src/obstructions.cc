#include <mpart/canonical.hh>
#include <mpart/error.hh>
#include <mpart/mps.hh>
#include <mpart/obstructions.hh>

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

namespace mpart {

// Dense copy of a small structure for repeated homomorphism tests.
struct Universe::Compiled
{
    struct Atom
    {
        std::uint32_t symbol;
        Tuple elements;
        Label label;
    };

    Category category;
    std::size_t n = 0;
    std::vector<std::vector<Label>> tables;
    std::vector<Atom> atoms;
    // atoms_by_last[x]: atoms whose largest element is x.
    std::vector<std::vector<std::uint32_t>> atoms_by_last;

    explicit Compiled(const LStructure & s) :
        category(s.category()),
        n(s.size()),
        atoms_by_last(s.size())
    {
        for (std::size_t r = 0; r < s.signature().size(); ++r) {
            tables.push_back(s.dense(r));
            std::uint64_t index = 0;
            for_each_tuple(n, s.signature()[r].arity, [&](const Tuple & t) {
                auto l = tables.back()[index++];
                atoms_by_last[*std::max_element(t.begin(), t.end())].push_back(std::uint32_t(atoms.size()));
                atoms.push_back({std::uint32_t(r), t, l});
            });
        }
    }
};

namespace {
    using Compiled = Universe::Compiled;

    using LeqTable = std::array<std::array<bool, 4>, 4>;

    auto leq_table(Category cat) -> const LeqTable &
    {
        static const auto tables = [] {
            std::array<LeqTable, 4> all{};
            for (auto c : all_categories)
                for (auto a : labels_of(c))
                    for (auto b : labels_of(c))
                        all[std::size_t(c)][std::size_t(a)][std::size_t(b)] = label_leq(a, b, c);
            return all;
        }();
        return tables[std::size_t(cat)];
    }

    auto search(const Compiled & a, const Compiled & b, const LeqTable & leq, std::vector<Element> & map, std::size_t x)
        -> bool
    {
        if (x == a.n)
            return true;
        for (Element v = 0; v < b.n; ++v) {
            map[x] = v;
            bool ok = true;
            for (auto id : a.atoms_by_last[x]) {
                auto & atom = a.atoms[id];
                std::uint64_t index = 0;
                for (auto e : atom.elements)
                    index = index * b.n + map[e];
                if (! leq[std::size_t(atom.label)][std::size_t(b.tables[atom.symbol][index])]) {
                    ok = false;
                    break;
                }
            }
            if (ok && search(a, b, leq, map, x + 1))
                return true;
        }
        return false;
    }

    auto small_hom(const Compiled & a, const Compiled & b) -> bool
    {
        if (a.n == 0)
            return true;
        std::vector<Element> map(a.n);
        return search(a, b, leq_table(comparison_category(a.category, b.category)), map, 0);
    }

    auto fnv1a(std::string_view bytes) -> std::uint64_t
    {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char c : bytes) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        return h;
    }

    auto maps_to(const LStructure & g, const LStructure & h) -> bool { return find_homomorphism(g, h).has_value(); }

    auto make_report(const LStructure & h, Category cat, std::size_t max_n, ObstructionMode mode, std::size_t bound)
        -> ObstructionReport
    {
        ObstructionReport report;
        report.target = h;
        report.category = cat;
        report.max_size = max_n;
        report.mode = mode;
        report.universe_bound = bound;
        return report;
    }
}

auto enumerate_structures(const Signature & sigma, std::size_t n, Category cat) -> std::vector<LStructure>
{
    auto labels = labels_of(cat);
    LStructure shape(sigma, cat, n);
    std::uint64_t slots = 0;
    for (std::size_t r = 0; r < sigma.size(); ++r)
        slots += shape.tuple_count(r);
    std::uint64_t total = 1;
    for (std::uint64_t i = 0; i < slots; ++i) {
        if (total > max_enumeration_labelings / labels.size())
            throw ResourceLimitError(std::to_string(labels.size()) + "^" + std::to_string(slots) +
                " labellings exceed the enumeration cap of " + std::to_string(max_enumeration_labelings));
        total *= labels.size();
    }

    std::set<std::string> forms;
    std::vector<std::size_t> digits(slots, 0);
    std::vector<Label> table;
    for (std::uint64_t count = 0; count < total; ++count) {
        LStructure s(sigma, cat, n);
        std::size_t offset = 0;
        for (std::size_t r = 0; r < sigma.size(); ++r) {
            auto width = std::size_t(s.tuple_count(r));
            table.resize(width);
            for (std::size_t i = 0; i < width; ++i)
                table[i] = labels[digits[offset + i]];
            s.assign_dense(r, table);
            offset += width;
        }
        forms.insert(canonical_form(s));

        for (std::size_t pos = slots; pos-- > 0;) {
            if (++digits[pos] < labels.size())
                break;
            digits[pos] = 0;
        }
    }

    std::vector<LStructure> out;
    for (auto & f : forms)
        out.push_back(structure_from_canonical_form(f));
    return out;
}

auto structure_from_canonical_form(std::string_view form) -> LStructure
{
    auto first = form.find('|');
    auto second = form.find('|', first + 1);
    auto third = form.find('|', second + 1);
    if (third == std::string_view::npos)
        throw ValidationError("malformed canonical form");
    auto cat = category_from_string(form.substr(0, first));
    if (! cat)
        throw ValidationError("malformed canonical form");
    auto sigma = Signature::parse(form.substr(first + 1, second - first - 1));
    auto n = std::stoul(std::string(form.substr(second + 1, third - second - 1)));
    LStructure s(sigma, *cat, n);
    auto labels = form.substr(third + 1);
    std::size_t offset = 0;
    for (std::size_t r = 0; r < sigma.size(); ++r) {
        auto width = std::size_t(s.tuple_count(r));
        if (offset + width > labels.size())
            throw ValidationError("malformed canonical form");
        std::vector<Label> table;
        for (std::size_t i = 0; i < width; ++i) {
            auto l = label_from_char(labels[offset + i]);
            if (! l)
                throw ValidationError("malformed canonical form");
            table.push_back(*l);
        }
        s.assign_dense(r, table);
        offset += width;
    }
    if (offset != labels.size())
        throw ValidationError("malformed canonical form");
    return s;
}

auto is_inclusion_minimal_obstruction(const LStructure & g, const LStructure & h, const SolveOptions & options) -> bool
{
    if (g.size() == 0 || find_homomorphism(g, h, options))
        return false;
    for (Element v = 0; v < g.size(); ++v)
        if (! find_homomorphism(delete_element(g, v), h, options))
            return false;
    return true;
}

Universe::Universe(const Signature & sigma, Category cat, std::size_t bound) :
    category_(cat),
    bound_(bound)
{
    for (std::size_t n = 1; n <= bound; ++n)
        for (auto & s : enumerate_structures(sigma, n, cat)) {
            forms_.push_back(canonical_form(s));
            compiled_.emplace_back(s);
            members_.push_back(std::move(s));
        }
    relation_.assign(members_.size() * members_.size(), -1);
}

Universe::~Universe() = default;
Universe::Universe(Universe &&) noexcept = default;

auto Universe::index_of(const std::string & form) const -> std::optional<std::size_t>
{
    // Forms are sorted within each size, and sizes ascend.
    for (std::size_t i = 0; i < forms_.size(); ++i)
        if (forms_[i] == form)
            return i;
    return std::nullopt;
}

auto Universe::compiled(std::size_t i) const -> const Compiled & { return compiled_[i]; }

auto Universe::maps(std::size_t from, std::size_t to) -> bool
{
    auto & slot = relation_[from * members_.size() + to];
    if (slot < 0)
        slot = small_hom(compiled_[from], compiled_[to]) ? 1 : 0;
    return slot == 1;
}

namespace {
    // to_h[i] caches member(i) -> H for one target: -1 unknown, 0 no, 1 yes.
    auto hom_minimal(const LStructure & g, const LStructure & h, Universe & universe, const Compiled & compiled_h,
        std::vector<std::int8_t> & to_h) -> bool
    {
        if (g.size() == 0 || maps_to(g, h) || ! is_core(g))
            return false;

        std::optional<std::size_t> self;
        if (g.size() <= max_canonical_size && g.category() == universe.category())
            self = universe.index_of(canonical_form(g));
        std::optional<Compiled> compiled_g;
        if (! self)
            compiled_g.emplace(g);

        for (std::size_t i = 0; i < universe.size(); ++i) {
            auto & candidate = universe.compiled(i);
            if (to_h[i] < 0)
                to_h[i] = small_hom(candidate, compiled_h) ? 1 : 0;
            if (to_h[i])
                continue;
            bool below = self ? universe.maps(i, *self) : small_hom(candidate, *compiled_g);
            if (! below)
                continue;
            bool above = self ? universe.maps(*self, i) : small_hom(*compiled_g, candidate);
            if (! above)
                return false;
        }
        return true;
    }
}

auto is_hom_minimal_obstruction(const LStructure & g, const LStructure & h, Universe & universe) -> bool
{
    std::vector<std::int8_t> to_h(universe.size(), -1);
    return hom_minimal(g, h, universe, Compiled(h), to_h);
}

auto is_hom_minimal_obstruction(const LStructure & g, const LStructure & h, std::size_t universe_bound) -> bool
{
    Universe universe(g.signature(), g.category(), universe_bound);
    return is_hom_minimal_obstruction(g, h, universe);
}

auto inclusion_minimal_obstructions(const LStructure & h, Category cat, std::size_t max_n) -> ObstructionReport
{
    auto report = make_report(h, cat, max_n, ObstructionMode::Inclusion, 0);
    if (is_trivial_target(h))
        return report;
    for (std::size_t n = 1; n <= max_n; ++n)
        for (auto & g : enumerate_structures(h.signature(), n, cat))
            if (is_inclusion_minimal_obstruction(g, h))
                report.members.push_back(canonical_form(g));
    std::sort(report.members.begin(), report.members.end());
    return report;
}

auto hom_minimal_obstructions(const LStructure & h, std::size_t max_n, Universe & universe) -> ObstructionReport
{
    auto report = make_report(h, universe.category(), max_n, ObstructionMode::Hom, universe.bound());
    if (is_trivial_target(h))
        return report;
    Compiled compiled_h(h);
    std::vector<std::int8_t> to_h(universe.size(), -1);
    for (std::size_t n = 1; n <= max_n; ++n) {
        auto candidates = n <= universe.bound() ? std::vector<LStructure>{}
                                                : enumerate_structures(h.signature(), n, universe.category());
        if (n <= universe.bound())
            for (std::size_t i = 0; i < universe.size(); ++i)
                if (universe.member(i).size() == n)
                    candidates.push_back(universe.member(i));
        for (auto & g : candidates)
            if (hom_minimal(g, h, universe, compiled_h, to_h))
                report.members.push_back(canonical_form(g));
    }
    std::sort(report.members.begin(), report.members.end());
    return report;
}

auto hom_minimal_obstructions(const LStructure & h, Category cat, std::size_t max_n, std::size_t universe_bound)
    -> ObstructionReport
{
    if (is_trivial_target(h))
        return make_report(h, cat, max_n, ObstructionMode::Hom, universe_bound);
    Universe universe(h.signature(), cat, universe_bound);
    return hom_minimal_obstructions(h, max_n, universe);
}

auto inclusion_minimal_among(const LStructure & h, Category cat, const std::vector<LStructure> & candidates)
    -> ObstructionReport
{
    std::size_t largest = 0;
    for (auto & g : candidates)
        largest = std::max(largest, g.size());
    auto report = make_report(h, cat, largest, ObstructionMode::Inclusion, 0);
    if (is_trivial_target(h))
        return report;
    std::set<std::string> found;
    for (auto & g : candidates) {
        if (g.category() != cat)
            throw ValidationError("candidate of category " + std::string(to_string(g.category())) +
                " in a family for category " + std::string(to_string(cat)));
        if (is_inclusion_minimal_obstruction(g, h))
            found.insert(canonical_form(g));
    }
    report.members.assign(found.begin(), found.end());
    return report;
}

auto report_target_hash(const LStructure & target) -> std::string
{
    auto bytes = target.size() <= max_canonical_size ? canonical_form(target) : serialize_mps(target);
    std::ostringstream out;
    out << "fnv1a64:" << std::hex;
    out.width(16);
    out.fill('0');
    out << fnv1a(bytes);
    return out.str();
}

auto serialize_report(const ObstructionReport & report) -> std::string
{
    std::ostringstream out;
    out << "obstructions\n";
    out << "target-hash " << report_target_hash(report.target) << '\n';
    out << "category " << to_string(report.category) << '\n';
    out << "mode " << (report.mode == ObstructionMode::Inclusion ? "inc" : "hom") << '\n';
    out << "max-size " << report.max_size << '\n';
    if (report.mode == ObstructionMode::Hom)
        out << "universe-bound " << report.universe_bound << '\n';
    out << "members " << report.members.size() << '\n';
    for (std::size_t i = 0; i < report.members.size(); ++i) {
        out << "\nmember " << i + 1 << '\n';
        out << serialize_mps(structure_from_canonical_form(report.members[i]));
    }
    return out.str();
}

auto duality_holds(const std::vector<LStructure> & family, const LStructure & h, Category cat, std::size_t max_n)
    -> DualityResult
{
    for (auto & f : family)
        if (maps_to(f, h))
            return {false, f};
    for (std::size_t n = 1; n <= max_n; ++n)
        for (auto & g : enumerate_structures(h.signature(), n, cat)) {
            bool obstructed = ! maps_to(g, h);
            bool covered = std::any_of(family.begin(), family.end(), [&](const LStructure & f) { return maps_to(f, g); });
            if (obstructed != covered)
                return {false, g};
        }
    return {};
}

auto odd_cycle_empty(std::size_t n) -> LStructure
{
    if (n == 0)
        throw ValidationError("cycle length must be positive");
    LStructure c(Signature({Symbol{"E", 2}}), Category::CatEmpty, n);
    c.set_default(0, Label::Empty);
    for (Element i = 0; i < n; ++i) {
        Tuple t{i, Element((i + 1) % n)};
        c.set_label(0, t, Label::One);
    }
    return c;
}

}
