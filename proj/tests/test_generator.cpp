#include "vmr/canonical.hpp"
#include "vmr/generator.hpp"
#include "vmr/invariants.hpp"

#include "reference/naive.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace vmr;

TEST_CASE("class counts")
{
    const std::size_t expected[] = {0, 1, 2, 4, 11, 34, 156, 1044, 12346};
    for (int n = 1; n <= 8; ++n) {
        CAPTURE(n);
        CHECK(generate_keys(n).size() == expected[n]);
    }
    CHECK(generate_connected(2).size() == 1);
    CHECK(generate_connected(2).front() == Graph::complete(2));
    CHECK(generate_connected(4).size() == 6);
    CHECK(generate_connected(7).size() == 853);
}

TEST_CASE("generated graphs cover every labelled graph exactly once for n <= 6")
{
    for (int n = 1; n <= 6; ++n) {
        const auto graphs = generate_all(n, {.parallel = false});
        std::set<std::uint64_t> emitted;
        for (const auto & g : graphs)
            emitted.insert(naive::brute_canonical(naive::from_library(g)));
        CHECK(emitted.size() == graphs.size());

        std::set<std::uint64_t> all;
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs); ++m)
            all.insert(naive::brute_canonical(naive::from_mask(n, m)));
        CHECK(all == emitted);
    }
}

TEST_CASE("emission order is ascending and deterministic")
{
    for (int n = 2; n <= 7; ++n) {
        const auto keys = generate_keys(n);
        CHECK(std::is_sorted(keys.begin(), keys.end()));
        CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
        CHECK(keys == generate_keys_serial(n));
        CHECK(keys == generate_keys(n, {.threads = 1}));
        CHECK(keys == generate_keys(n, {.threads = 3}));
        for (const auto & g : generate_all(n))
            CHECK(canonical_graph(g) == g);
    }
}

TEST_CASE("connected filter")
{
    for (int n = 1; n <= 6; ++n) {
        const auto all = generate_all(n);
        const auto connected = generate_connected(n);
        CHECK(connected.size() == static_cast<std::size_t>(std::count_if(all.begin(), all.end(), [](const Graph & g) {
                  return is_connected(g);
              })));
        for (const auto & g : connected)
            CHECK(is_connected(g));
    }
}

TEST_CASE("order limits")
{
    CHECK_THROWS_AS(generate_keys(0), GraphError);
    CHECK_THROWS_AS(generate_keys(12, {.long_run = true}), GraphError);
    CHECK_THROWS_AS(generate_keys(10), LongRunError);
}
