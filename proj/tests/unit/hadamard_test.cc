#include <mpart/error.hh>
#include <mpart/hadamard.hh>

#include <doctest.h>

using namespace mpart;

TEST_CASE("small Sylvester matrices")
{
    auto h0 = sylvester(0);
    CHECK(h0.order() == 1);
    CHECK(h0.at(0, 0) == 1);
    CHECK(to_text(sylvester(1)) == "++\n+-\n");
    CHECK(verify_hadamard(sylvester(4)));
    CHECK(verify_hadamard(sylvester(3)));
}

TEST_CASE("non-Hadamard matrices are rejected")
{
    CHECK_FALSE(verify_hadamard(hadamard_from_text("++\n++\n")));
    CHECK_FALSE(verify_hadamard(hadamard_from_text("++\n--\n")));
    CHECK_FALSE(verify_hadamard(hadamard_from_text("-+\n+-\n")));
}

TEST_CASE("text round trip")
{
    auto h = sylvester(3);
    CHECK(hadamard_from_text(to_text(h)).entries() == h.entries());
    CHECK_THROWS_AS(hadamard_from_text("+x\n++\n"), ValidationError);
}

TEST_CASE("monochromatic submatrices")
{
    std::vector<std::size_t> zero{0};
    CHECK(submatrix_monochromatic(sylvester(0), zero, zero));
    CHECK(submatrix_monochromatic(sylvester(2), std::vector<std::size_t>{1}, std::vector<std::size_t>{2}));
    auto h = sylvester(2);
    std::vector<std::size_t> rows{0, 1, 2};
    for (std::size_t skip = 0; skip < 4; ++skip) {
        std::vector<std::size_t> cols;
        for (std::size_t c = 0; c < 4; ++c)
            if (c != skip)
                cols.push_back(c);
        CHECK_FALSE(submatrix_monochromatic(h, rows, cols));
    }
}

TEST_CASE("exponent guards")
{
    CHECK_THROWS_AS(sylvester(max_sylvester_exponent + 1), ValidationError);
    CHECK_THROWS_AS(sylvester(max_dense_exponent + 1), ResourceLimitError);
}
