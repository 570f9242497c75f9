#include <mpart/error.hh>
#include <mpart/label.hh>

#include <string>

namespace mpart {

namespace {
    constexpr std::array<Label, 2> zero_one{Label::Zero, Label::One};
    constexpr std::array<Label, 3> zero_one_star{Label::Zero, Label::One, Label::Star};

    auto rank_in_chain(Category c) -> int
    {
        switch (c) {
        case Category::Cat01: return 0;
        case Category::CatStar: return 1;
        case Category::CatEmpty: return 2;
        case Category::CatCsp: return -1;
        }
        return -1;
    }

    auto require_admitted(Label l, Category cat) -> void
    {
        if (! admits(cat, l))
            throw ValidationError(std::string("label '") + to_char(l) + "' is not admitted by category " +
                std::string(to_string(cat)));
    }
}

auto admits(Category cat, Label l) -> bool
{
    switch (cat) {
    case Category::Cat01:
    case Category::CatCsp: return l == Label::Zero || l == Label::One;
    case Category::CatStar: return l != Label::Empty;
    case Category::CatEmpty: return true;
    }
    return false;
}

auto labels_of(Category cat) -> std::span<const Label>
{
    switch (cat) {
    case Category::Cat01:
    case Category::CatCsp: return zero_one;
    case Category::CatStar: return zero_one_star;
    case Category::CatEmpty: return all_labels;
    }
    return {};
}

auto label_leq(Label a, Label b, Category cat) -> bool
{
    require_admitted(a, cat);
    require_admitted(b, cat);
    if (a == b)
        return true;
    switch (cat) {
    case Category::Cat01: return false;
    case Category::CatCsp: return a == Label::Zero && b == Label::One;
    case Category::CatStar: return b == Label::Star;
    case Category::CatEmpty: return a == Label::Empty || b == Label::Star;
    }
    return false;
}

auto label_join(Label a, Label b, Category cat) -> Label
{
    if (cat != Category::CatStar && cat != Category::CatEmpty)
        throw ValidationError("join is only defined for categories star and empty");
    require_admitted(a, cat);
    require_admitted(b, cat);
    if (a == b || b == Label::Empty)
        return a;
    if (a == Label::Empty)
        return b;
    // a != b, both in {0,1,*}: the only common upper bound is *.
    return Label::Star;
}

auto comparison_category(Category source, Category target) -> Category
{
    if (source == Category::CatCsp || target == Category::CatCsp) {
        if (source != target)
            throw ValidationError("csp structures can only be compared with csp structures");
        return Category::CatCsp;
    }
    return widen(source, target);
}

auto widen(Category a, Category b) -> Category
{
    if (a == Category::CatCsp || b == Category::CatCsp) {
        if (a != b)
            throw ValidationError("category csp is not part of the 01 ⊂ star ⊂ empty chain");
        return a;
    }
    return rank_in_chain(a) >= rank_in_chain(b) ? a : b;
}

auto to_char(Label l) -> char
{
    switch (l) {
    case Label::Zero: return '0';
    case Label::One: return '1';
    case Label::Star: return '*';
    case Label::Empty: return 'e';
    }
    return '?';
}

auto label_from_char(char c) -> std::optional<Label>
{
    switch (c) {
    case '0': return Label::Zero;
    case '1': return Label::One;
    case '*': return Label::Star;
    case 'e': return Label::Empty;
    default: return std::nullopt;
    }
}

auto to_string(Category cat) -> std::string_view
{
    switch (cat) {
    case Category::Cat01: return "01";
    case Category::CatStar: return "star";
    case Category::CatEmpty: return "empty";
    case Category::CatCsp: return "csp";
    }
    return "?";
}

auto category_from_string(std::string_view s) -> std::optional<Category>
{
    if (s == "01")
        return Category::Cat01;
    if (s == "star" || s == "*")
        return Category::CatStar;
    if (s == "empty" || s == "e")
        return Category::CatEmpty;
    if (s == "csp")
        return Category::CatCsp;
    return std::nullopt;
}

}
