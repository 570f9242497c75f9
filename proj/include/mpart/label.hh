#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace mpart {

enum class Label : std::uint8_t
{
    Zero,
    One,
    Star,
    Empty,
};

// The four label alphabets. Cat01 and CatCsp share the symbols {0,1} but order
// them differently: incomparable in Cat01, 0 below 1 in CatCsp.
enum class Category : std::uint8_t
{
    Cat01,
    CatStar,
    CatEmpty,
    CatCsp,
};

inline constexpr std::array<Label, 4> all_labels{Label::Zero, Label::One, Label::Star, Label::Empty};
inline constexpr std::array<Category, 4> all_categories{
    Category::Cat01, Category::CatStar, Category::CatEmpty, Category::CatCsp};

auto admits(Category cat, Label l) -> bool;

// Labels admitted by cat, in enum order.
auto labels_of(Category cat) -> std::span<const Label>;

// Partial order of cat. Throws ValidationError if either label is not admitted.
auto label_leq(Label a, Label b, Category cat) -> bool;

// Least upper bound; defined for CatStar and CatEmpty only.
auto label_join(Label a, Label b, Category cat) -> Label;

// Order used when comparing a source labelled over `source` against a target
// labelled over `target`. Cat01 ⊂ CatStar ⊂ CatEmpty is a chain of sub-posets, so
// the larger of the two is used; CatCsp only pairs with itself.
auto comparison_category(Category source, Category target) -> Category;

// Smallest category of the chain Cat01 ⊂ CatStar ⊂ CatEmpty that contains both.
auto widen(Category a, Category b) -> Category;

auto to_char(Label l) -> char;
auto label_from_char(char c) -> std::optional<Label>;

auto to_string(Category cat) -> std::string_view;
auto category_from_string(std::string_view s) -> std::optional<Category>;

}
