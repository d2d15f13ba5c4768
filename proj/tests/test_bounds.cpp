#include "vmr/bounds.hpp"
#include "vmr/codec.hpp"
#include "vmr/invariants.hpp"

#include <doctest.h>

#include <cmath>

using namespace vmr;

TEST_CASE("explicit lower bounds")
{
    const int expected[] = {3, 7, 11, 13, 17, 21, 23, 27};
    for (int k = 2; k <= 9; ++k)
        CHECK(corollary_bound(k) == expected[k - 2]);
    CHECK_THROWS_AS(corollary_bound(1), std::invalid_argument);
}

TEST_CASE("corollary agrees with the block construction")
{
    for (int k = 2; k <= 12; ++k) {
        CAPTURE(k);
        const auto blocks = corollary_blocks(k);
        CHECK(building_block_bound(blocks, k) == corollary_bound(k));
        int betas = 0, order = 0;
        for (const auto & b : blocks) {
            betas += b.beta();
            order += b.graph().order();
        }
        CHECK(betas == k - 1);
        CHECK(order + 1 == corollary_bound(k));
    }
}

TEST_CASE("building blocks")
{
    CHECK(BlockSpec(Graph::complete(2)).beta() == 1);
    CHECK(BlockSpec(complement(Graph::cycle(6))).beta() == 2);
    CHECK(BlockSpec(decode_graph6("ICQ`fm}~w")).beta() == 3);
    const std::vector<BlockSpec> too_many{BlockSpec(Graph::complete(2)), BlockSpec(Graph::complete(2))};
    CHECK(building_block_bound(too_many, 2) == std::nullopt);
    CHECK(building_block_bound(too_many, 3) == 5);
}

TEST_CASE("leading term")
{
    const int expected[] = {1, 2, 5, 7, 11, 15, 20, 25};
    for (int k = 2; k <= 9; ++k)
        CHECK(asymptotic_leading(k) == expected[k - 2]);
    for (int k = 2; k <= 62; ++k)
        CHECK(asymptotic_leading(k) == static_cast<int>(std::floor(k * k / (2.0 * std::log2(3.0)))));
}

TEST_CASE("bound table")
{
    const auto rows = bound_table(12);
    REQUIRE(rows.size() == 11);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto & r = rows[i];
        CHECK(r.k == static_cast<int>(i) + 2);
        CHECK(r.explicit_lower <= r.upper);
        if (i > 0)
            CHECK(r.explicit_lower > rows[i - 1].explicit_lower);
        CHECK(r.upper == (std::int64_t{1} << r.k) - 1);
    }
    CHECK(rows[0].known_value == 3);
    CHECK(rows[1].known_value == 7);
    CHECK(rows[2].known_value == 11);
    CHECK(rows[3].known_value == std::nullopt);

    const auto tsv = bound_table_tsv(bound_table(4));
    CHECK(tsv.rfind("k\texplicit_lower", 0) == 0);
    CHECK(tsv.find("tight") != std::string::npos);

    CHECK_THROWS(bound_table(1));
    CHECK_THROWS(bound_table(63));
}
