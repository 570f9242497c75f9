#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mpart {

// Square ±1 matrix, stored row-major.
class HadamardMatrix
{
public:
    HadamardMatrix() = default;
    // Throws ValidationError unless entries has order² values, each +1 or -1.
    HadamardMatrix(std::size_t order, std::vector<std::int8_t> entries);

    auto order() const -> std::size_t { return order_; }
    auto at(std::size_t i, std::size_t j) const -> int { return entries_[i * order_ + j]; }
    auto entries() const -> const std::vector<std::int8_t> & { return entries_; }

private:
    std::size_t order_ = 0;
    std::vector<std::int8_t> entries_;
};

inline constexpr unsigned max_sylvester_exponent = 20;
// Entries are stored densely, one byte each: 2^14 squared is 256 MiB.
inline constexpr unsigned max_dense_exponent = 14;

// H_1 = [+1], H_2m = [[H_m, H_m], [H_m, -H_m]]; order 2^k. Exponents above
// max_sylvester_exponent are a ValidationError, above max_dense_exponent a ResourceLimitError.
auto sylvester(unsigned k) -> HadamardMatrix;

// M Mᵀ = n I in exact integer arithmetic.
auto verify_hadamard(const HadamardMatrix & m) -> bool;

// All selected entries equal. Empty selections count as monochromatic.
auto submatrix_monochromatic(const HadamardMatrix & m, std::span<const std::size_t> rows,
    std::span<const std::size_t> cols) -> bool;

// One line of '+'/'-' per row.
auto to_text(const HadamardMatrix & m) -> std::string;

// Parses the to_text format.
auto hadamard_from_text(std::string_view text) -> HadamardMatrix;

}
