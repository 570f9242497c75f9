#pragma once

#include <mpart/label.hh>
#include <mpart/signature.hh>

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace mpart {

using Element = std::uint32_t;
using Tuple = std::vector<Element>;

// A finite domain {0..n-1} together with a total labelling of every tuple of
// every relation symbol. Each symbol stores a default label plus sparse
// overrides keyed by the tuple's row-major index, so the labelling is total
// while memory stays proportional to the number of non-default tuples.
class LStructure
{
public:
    LStructure() = default;
    // Every symbol starts with default label 0, which all categories admit.
    LStructure(Signature signature, Category category, std::size_t domain_size);

    auto signature() const -> const Signature & { return signature_; }
    auto category() const -> Category { return category_; }
    auto size() const -> std::size_t { return domain_size_; }

    auto set_default(std::size_t symbol, Label label) -> void;
    auto set_label(std::size_t symbol, std::span<const Element> tuple, Label label) -> void;
    auto set_label_at(std::size_t symbol, std::uint64_t index, Label label) -> void;
    // Replaces a symbol's whole labelling by a row-major table; the majority label becomes the default.
    auto assign_dense(std::size_t symbol, std::span<const Label> table) -> void;

    auto get_label(std::size_t symbol, std::span<const Element> tuple) const -> Label;
    auto label_at(std::size_t symbol, std::uint64_t index) const -> Label;

    auto default_label(std::size_t symbol) const -> Label { return relations_[symbol].default_label; }
    auto overrides(std::size_t symbol) const -> const std::map<std::uint64_t, Label> &
    {
        return relations_[symbol].overrides;
    }

    // n^k for the symbol's arity k.
    auto tuple_count(std::size_t symbol) const -> std::uint64_t;
    auto tuple_index(std::size_t symbol, std::span<const Element> tuple) const -> std::uint64_t;
    auto tuple_at(std::size_t symbol, std::uint64_t index) const -> Tuple;

    // Full row-major label table for one symbol.
    auto dense(std::size_t symbol) const -> std::vector<Label>;

    // Same semantics with each symbol's default set to its majority label
    // (ties broken towards 0, 1, *, e in that order).
    auto normalized() const -> LStructure;

    // Relabels the structure under a wider category; labels must stay admitted.
    auto with_category(Category category) const -> LStructure;

    // Semantic equality: same signature, category, domain and total labelling.
    auto operator==(const LStructure & other) const -> bool;

private:
    struct Relation
    {
        Label default_label = Label::Zero;
        std::map<std::uint64_t, Label> overrides;
    };

    auto check_label(Label label) const -> void;

    Signature signature_;
    Category category_ = Category::Cat01;
    std::size_t domain_size_ = 0;
    std::vector<Relation> relations_;
};

// Substructure induced by `subset`, renumbered 0..|subset|-1 in increasing element
// order. Duplicates in `subset` are ignored.
auto induced_substructure(const LStructure & s, std::span<const Element> subset) -> LStructure;

// The structure with `removed` deleted.
auto delete_element(const LStructure & s, Element removed) -> LStructure;

// Image of `s` under the permutation `perm` (element x becomes perm[x]).
auto permute(const LStructure & s, std::span<const Element> perm) -> LStructure;

// Some element x has R(x,...,x) = * for every symbol R.
auto is_trivial_target(const LStructure & h) -> bool;

// Calls f(tuple) for every tuple of length `arity` over {0..n-1} in lexicographic order.
template <typename F>
auto for_each_tuple(std::size_t n, unsigned arity, F && f) -> void
{
    if (n == 0)
        return;
    Tuple t(arity, 0);
    while (true) {
        f(std::as_const(t));
        int pos = int(arity) - 1;
        while (pos >= 0 && ++t[pos] == n)
            t[pos--] = 0;
        if (pos < 0)
            return;
    }
}

}
