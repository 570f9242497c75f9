#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mpart {

struct Symbol
{
    std::string name;
    unsigned arity = 0;

    auto operator==(const Symbol &) const -> bool = default;
};

// Ordered list of relation symbols. Declaration order matters: the packing
// reduction indexes relations by position.
class Signature
{
public:
    Signature() = default;
    explicit Signature(std::vector<Symbol> symbols);

    // Parses "R/2 S/3" (whitespace or comma separated).
    static auto parse(std::string_view text) -> Signature;

    auto size() const -> std::size_t { return symbols_.size(); }
    auto empty() const -> bool { return symbols_.empty(); }
    auto operator[](std::size_t i) const -> const Symbol & { return symbols_[i]; }
    auto symbols() const -> const std::vector<Symbol> & { return symbols_; }
    auto begin() const { return symbols_.begin(); }
    auto end() const { return symbols_.end(); }

    auto index_of(std::string_view name) const -> std::optional<std::size_t>;
    auto max_arity() const -> unsigned;

    // "R/2 S/3"
    auto to_string() const -> std::string;

    auto operator==(const Signature &) const -> bool = default;

private:
    std::vector<Symbol> symbols_;
};

auto is_identifier(std::string_view s) -> bool;

}
