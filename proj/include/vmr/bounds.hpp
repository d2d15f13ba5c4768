#pragma once

#include "vmr/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vmr
{
    /// A graph together with its orbit-wide maximum independence number,
    /// always recomputed from the graph.
    class BlockSpec
    {
    public:
        explicit BlockSpec(Graph g);

        auto graph() const -> const Graph & { return _graph; }
        auto beta() const -> int { return _beta; }

    private:
        Graph _graph;
        int _beta;
    };

    /// If the blocks' betas sum to at most k-1, their disjoint union avoids
    /// E_k as a vertex-minor, so R_vm(k) exceeds the total order.
    auto building_block_bound(const std::vector<BlockSpec> & blocks, int k) -> std::optional<int>;

    /// With k-1 = 3q + r: 10q + v(r) + 1, v = (0, 2, 6).
    auto corollary_bound(int k) -> int;

    /// The blocks behind corollary_bound: q extremal 10-vertex graphs plus
    /// K2 (r = 1) or the triangular prism (r = 2).
    auto corollary_blocks(int k) -> std::vector<BlockSpec>;

    /// floor(k^2 / (2 log2 3)).
    auto asymptotic_leading(int k) -> int;

    struct BoundRow
    {
        int k = 0;
        int explicit_lower = 0;
        std::int64_t upper = 0;
        int asymptotic_leading = 0;
        std::optional<int> known_value;
    };

    auto bound_table(int k_max) -> std::vector<BoundRow>;

    auto bound_table_tsv(const std::vector<BoundRow> & rows) -> std::string;
}
