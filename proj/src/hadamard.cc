#include <mpart/error.hh>
#include <mpart/hadamard.hh>

#include <sstream>

namespace mpart {

HadamardMatrix::HadamardMatrix(std::size_t order, std::vector<std::int8_t> entries) :
    order_(order),
    entries_(std::move(entries))
{
    if (entries_.size() != order_ * order_)
        throw ValidationError("matrix of order " + std::to_string(order_) + " needs " +
            std::to_string(order_ * order_) + " entries");
    for (auto e : entries_)
        if (e != 1 && e != -1)
            throw ValidationError("matrix entry " + std::to_string(e) + " is not +1 or -1");
}

auto sylvester(unsigned k) -> HadamardMatrix
{
    if (k > max_sylvester_exponent)
        throw ValidationError("sylvester exponent " + std::to_string(k) + " exceeds " +
            std::to_string(max_sylvester_exponent));
    if (k > max_dense_exponent)
        throw ResourceLimitError("a dense matrix of order 2^" + std::to_string(k) + " does not fit in memory");
    std::vector<std::int8_t> e{1};
    std::size_t n = 1;
    for (unsigned step = 0; step < k; ++step) {
        std::vector<std::int8_t> next(4 * n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                auto v = e[i * n + j];
                next[i * 2 * n + j] = v;
                next[i * 2 * n + j + n] = v;
                next[(i + n) * 2 * n + j] = v;
                next[(i + n) * 2 * n + j + n] = std::int8_t(-v);
            }
        e = std::move(next);
        n *= 2;
    }
    return HadamardMatrix(n, std::move(e));
}

auto verify_hadamard(const HadamardMatrix & m) -> bool
{
    auto n = m.order();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            std::int64_t dot = 0;
            for (std::size_t c = 0; c < n; ++c)
                dot += m.at(i, c) * m.at(j, c);
            if (dot != (i == j ? std::int64_t(n) : 0))
                return false;
        }
    return true;
}

auto submatrix_monochromatic(const HadamardMatrix & m, std::span<const std::size_t> rows,
    std::span<const std::size_t> cols) -> bool
{
    for (auto r : rows)
        if (r >= m.order())
            throw ValidationError("row index " + std::to_string(r) + " out of range");
    for (auto c : cols)
        if (c >= m.order())
            throw ValidationError("column index " + std::to_string(c) + " out of range");
    if (rows.empty() || cols.empty())
        return true;
    auto colour = m.at(rows[0], cols[0]);
    for (auto r : rows)
        for (auto c : cols)
            if (m.at(r, c) != colour)
                return false;
    return true;
}

auto to_text(const HadamardMatrix & m) -> std::string
{
    std::string out;
    for (std::size_t i = 0; i < m.order(); ++i) {
        for (std::size_t j = 0; j < m.order(); ++j)
            out += m.at(i, j) > 0 ? '+' : '-';
        out += '\n';
    }
    return out;
}

auto hadamard_from_text(std::string_view text) -> HadamardMatrix
{
    std::vector<std::int8_t> entries;
    std::size_t rows = 0, width = 0, line = 0;
    std::istringstream in{std::string(text)};
    std::string row;
    while (std::getline(in, row)) {
        ++line;
        if (row.empty())
            continue;
        if (rows == 0)
            width = row.size();
        else if (row.size() != width)
            throw ParseError(line, "ragged matrix row");
        for (char c : row) {
            if (c != '+' && c != '-')
                throw ParseError(line, std::string("unexpected character '") + c + "'");
            entries.push_back(c == '+' ? 1 : -1);
        }
        ++rows;
    }
    if (rows != width)
        throw ValidationError("matrix is not square");
    return HadamardMatrix(rows, std::move(entries));
}

}
