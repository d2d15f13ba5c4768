#pragma once

#include "vmr/graph.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace vmr
{
    /// Largest order whose upper triangle fits in one 64-bit word.
    inline constexpr int kMaxPackedOrder = 11;

    /// Packs the strict upper triangle of the first n rows, row by row.
    /// Injective for fixed n <= kMaxPackedOrder.
    inline auto pack_upper(std::span<const Row> rows) -> std::uint64_t
    {
        const int n = static_cast<int>(rows.size());
        std::uint64_t key = 0;
        int offset = 0;
        for (int v = 0; v + 1 < n; ++v) {
            key |= (rows[v] >> (v + 1)) << offset;
            offset += n - 1 - v;
        }
        return key;
    }

    auto unpack_upper(int n, std::uint64_t key) -> Graph;

    /// Isomorphism-invariant key: the lexicographically least adjacency-row
    /// tuple over all relabelings.
    struct CanonicalForm
    {
        int n = 0;
        std::vector<Row> rows;

        auto operator<=>(const CanonicalForm &) const = default;
    };

    struct CanonicalLabeling
    {
        /// order[i] is the original vertex placed at canonical position i.
        std::vector<int> order;
        Graph graph;
    };

    auto canonical_labeling(const Graph & g) -> CanonicalLabeling;
    auto canonical_graph(const Graph & g) -> Graph;
    auto canonical_form(const Graph & g) -> CanonicalForm;
    auto are_isomorphic(const Graph & g, const Graph & h) -> bool;
}
