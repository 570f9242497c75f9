#include <mpart/error.hh>
#include <mpart/structure.hh>

#include <algorithm>
#include <array>
#include <limits>
#include <string>

namespace mpart {

namespace {
    constexpr std::uint64_t max_tuple_space = std::uint64_t{1} << 62;

    auto checked_power(std::size_t n, unsigned k) -> std::uint64_t
    {
        std::uint64_t total = 1;
        for (unsigned i = 0; i < k; ++i) {
            if (n != 0 && total > max_tuple_space / n)
                throw ValidationError("tuple space too large: " + std::to_string(n) + "^" + std::to_string(k));
            total *= n;
        }
        return total;
    }
}

LStructure::LStructure(Signature signature, Category category, std::size_t domain_size) :
    signature_(std::move(signature)),
    category_(category),
    domain_size_(domain_size),
    relations_(signature_.size())
{
    if (domain_size_ > std::numeric_limits<Element>::max())
        throw ValidationError("domain too large");
    for (auto & s : signature_)
        checked_power(domain_size_, s.arity);
}

auto LStructure::check_label(Label label) const -> void
{
    if (! admits(category_, label))
        throw ValidationError(std::string("label '") + to_char(label) + "' is not admitted by category " +
            std::string(to_string(category_)));
}

auto LStructure::set_default(std::size_t symbol, Label label) -> void
{
    check_label(label);
    auto & rel = relations_.at(symbol);
    rel.default_label = label;
    std::erase_if(rel.overrides, [&](const auto & kv) { return kv.second == label; });
}

auto LStructure::set_label(std::size_t symbol, std::span<const Element> tuple, Label label) -> void
{
    set_label_at(symbol, tuple_index(symbol, tuple), label);
}

auto LStructure::set_label_at(std::size_t symbol, std::uint64_t index, Label label) -> void
{
    check_label(label);
    if (index >= tuple_count(symbol))
        throw ValidationError("tuple index out of range");
    auto & rel = relations_[symbol];
    if (label == rel.default_label)
        rel.overrides.erase(index);
    else
        rel.overrides[index] = label;
}

auto LStructure::assign_dense(std::size_t symbol, std::span<const Label> table) -> void
{
    if (table.size() != tuple_count(symbol))
        throw ValidationError("label table has the wrong length");
    std::array<std::uint64_t, 4> counts{};
    for (auto l : table) {
        check_label(l);
        ++counts[std::size_t(l)];
    }
    auto majority = Label(std::max_element(counts.begin(), counts.end()) - counts.begin());
    auto & rel = relations_[symbol];
    rel.default_label = majority;
    rel.overrides.clear();
    for (std::uint64_t i = 0; i < table.size(); ++i)
        if (table[i] != majority)
            rel.overrides.emplace_hint(rel.overrides.end(), i, table[i]);
}

auto LStructure::get_label(std::size_t symbol, std::span<const Element> tuple) const -> Label
{
    return label_at(symbol, tuple_index(symbol, tuple));
}

auto LStructure::label_at(std::size_t symbol, std::uint64_t index) const -> Label
{
    auto & rel = relations_.at(symbol);
    auto it = rel.overrides.find(index);
    return it == rel.overrides.end() ? rel.default_label : it->second;
}

auto LStructure::tuple_count(std::size_t symbol) const -> std::uint64_t
{
    return checked_power(domain_size_, signature_[symbol].arity);
}

auto LStructure::tuple_index(std::size_t symbol, std::span<const Element> tuple) const -> std::uint64_t
{
    if (symbol >= signature_.size())
        throw ValidationError("relation symbol index out of range");
    auto & sym = signature_[symbol];
    if (tuple.size() != sym.arity)
        throw ValidationError("tuple of length " + std::to_string(tuple.size()) + " given for " + sym.name + "/" +
            std::to_string(sym.arity));
    std::uint64_t index = 0;
    for (auto e : tuple) {
        if (e >= domain_size_)
            throw ValidationError("element " + std::to_string(e) + " outside domain of size " + std::to_string(domain_size_));
        index = index * domain_size_ + e;
    }
    return index;
}

auto LStructure::tuple_at(std::size_t symbol, std::uint64_t index) const -> Tuple
{
    Tuple t(signature_[symbol].arity);
    for (auto i = t.size(); i-- > 0;) {
        t[i] = Element(index % domain_size_);
        index /= domain_size_;
    }
    return t;
}

auto LStructure::dense(std::size_t symbol) const -> std::vector<Label>
{
    auto & rel = relations_.at(symbol);
    std::vector<Label> table(tuple_count(symbol), rel.default_label);
    for (auto & [index, label] : rel.overrides)
        table[index] = label;
    return table;
}

auto LStructure::normalized() const -> LStructure
{
    LStructure out = *this;
    for (std::size_t r = 0; r < relations_.size(); ++r) {
        auto & rel = relations_[r];
        std::array<std::uint64_t, 4> counts{};
        for (auto & [index, label] : rel.overrides)
            ++counts[std::size_t(label)];
        counts[std::size_t(rel.default_label)] += tuple_count(r) - rel.overrides.size();

        std::size_t best = 0;
        for (std::size_t l = 1; l < counts.size(); ++l)
            if (counts[l] > counts[best])
                best = l;
        auto majority = Label(best);
        if (majority == rel.default_label || counts[best] == 0)
            continue;

        auto & target = out.relations_[r];
        target.default_label = majority;
        target.overrides.clear();
        for (std::uint64_t i = 0, n = tuple_count(r); i < n; ++i) {
            auto l = label_at(r, i);
            if (l != majority)
                target.overrides.emplace_hint(target.overrides.end(), i, l);
        }
    }
    return out;
}

auto LStructure::with_category(Category category) const -> LStructure
{
    LStructure out = *this;
    out.category_ = category;
    for (auto & rel : relations_) {
        out.check_label(rel.default_label);
        for (auto & [index, label] : rel.overrides)
            out.check_label(label);
    }
    return out;
}

auto LStructure::operator==(const LStructure & other) const -> bool
{
    if (signature_ != other.signature_ || category_ != other.category_ || domain_size_ != other.domain_size_)
        return false;
    for (std::size_t r = 0; r < relations_.size(); ++r) {
        auto & a = relations_[r];
        auto & b = other.relations_[r];
        if (a.default_label == b.default_label) {
            if (a.overrides != b.overrides)
                return false;
        }
        else {
            // Overrides never repeat the default, so every tuple must be overridden on one side.
            for (std::uint64_t i = 0, n = tuple_count(r); i < n; ++i)
                if (label_at(r, i) != other.label_at(r, i))
                    return false;
        }
    }
    return true;
}

auto induced_substructure(const LStructure & s, std::span<const Element> subset) -> LStructure
{
    std::vector<Element> keep(subset.begin(), subset.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (auto e : keep)
        if (e >= s.size())
            throw ValidationError("element " + std::to_string(e) + " outside domain of size " + std::to_string(s.size()));

    LStructure out(s.signature(), s.category(), keep.size());
    for (std::size_t r = 0; r < s.signature().size(); ++r) {
        out.set_default(r, s.default_label(r));
        if (s.overrides(r).empty())
            continue;
        Tuple original(s.signature()[r].arity);
        for_each_tuple(keep.size(), s.signature()[r].arity, [&](const Tuple & t) {
            for (std::size_t i = 0; i < t.size(); ++i)
                original[i] = keep[t[i]];
            auto l = s.get_label(r, original);
            if (l != s.default_label(r))
                out.set_label(r, t, l);
        });
    }
    return out;
}

auto delete_element(const LStructure & s, Element removed) -> LStructure
{
    std::vector<Element> keep;
    for (Element e = 0; e < s.size(); ++e)
        if (e != removed)
            keep.push_back(e);
    return induced_substructure(s, keep);
}

auto permute(const LStructure & s, std::span<const Element> perm) -> LStructure
{
    if (perm.size() != s.size())
        throw ValidationError("permutation size does not match domain");
    LStructure out(s.signature(), s.category(), s.size());
    for (std::size_t r = 0; r < s.signature().size(); ++r) {
        out.set_default(r, s.default_label(r));
        for (auto & [index, label] : s.overrides(r)) {
            auto t = s.tuple_at(r, index);
            for (auto & e : t)
                e = perm[e];
            out.set_label(r, t, label);
        }
    }
    return out;
}

auto is_trivial_target(const LStructure & h) -> bool
{
    for (Element x = 0; x < h.size(); ++x) {
        bool all_star = true;
        for (std::size_t r = 0; r < h.signature().size() && all_star; ++r) {
            Tuple diag(h.signature()[r].arity, x);
            all_star = h.get_label(r, diag) == Label::Star;
        }
        if (all_star)
            return true;
    }
    return false;
}

}
