#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vmr
{
    using Row = std::uint64_t;

    inline constexpr int kMaxVertices = 64;

    class GraphError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    inline constexpr auto bit(int v) -> Row
    {
        return Row{1} << v;
    }

    inline constexpr auto low_mask(int n) -> Row
    {
        return n >= 64 ? ~Row{0} : (bit(n) - 1);
    }

    inline auto popcount(Row r) -> int
    {
        return std::popcount(r);
    }

    inline auto lowest(Row r) -> int
    {
        return std::countr_zero(r);
    }

    /// A set of vertex positions 0..n-1 stored as a bitmask.
    struct VertexSet
    {
        Row mask = 0;

        auto size() const -> int { return popcount(mask); }
        auto empty() const -> bool { return mask == 0; }
        auto contains(int v) const -> bool { return (mask >> v) & 1; }
        auto members() const -> std::vector<int>;

        auto operator<=>(const VertexSet &) const = default;
    };

    /**
     * Labeled simple graph on vertices 0..n-1, one adjacency bitmask per
     * vertex. Rows beyond n are kept zero so that equality and hashing
     * can look at the whole array.
     */
    class Graph
    {
    public:
        Graph() = default;
        explicit Graph(int n);

        /// Builds from adjacency rows; throws GraphError if they are not
        /// symmetric, loop-free and confined to the first n bits.
        static auto from_rows(std::span<const Row> rows) -> Graph;
        static auto from_edges(int n, std::span<const std::pair<int, int>> edges) -> Graph;

        static auto empty(int n) -> Graph;
        static auto complete(int n) -> Graph;
        static auto cycle(int n) -> Graph;
        static auto path(int n) -> Graph;

        auto order() const -> int { return _n; }
        auto row(int v) const -> Row { return _rows[v]; }
        auto rows() const -> std::span<const Row> { return {_rows.data(), static_cast<std::size_t>(_n)}; }
        auto all() const -> VertexSet { return {low_mask(_n)}; }

        auto adjacent(int u, int v) const -> bool { return (_rows[u] >> v) & 1; }
        auto degree(int v) const -> int { return popcount(_rows[v]); }
        auto edge_count() const -> int;

        void add_edge(int u, int v);
        void remove_edge(int u, int v);
        void toggle_edge(int u, int v);

        /// Symmetric, loopless and no stray high bits.
        auto is_valid() const -> bool;

        auto operator==(const Graph & other) const -> bool = default;
        auto operator<=>(const Graph & other) const = default;

        auto hash() const -> std::size_t;

    private:
        int _n = 0;
        std::array<Row, kMaxVertices> _rows{};

        void check_vertex(int v) const;
    };

    struct GraphHash
    {
        auto operator()(const Graph & g) const -> std::size_t { return g.hash(); }
    };

    /// In-place local complementation on raw rows: toggles every pair
    /// inside the neighbourhood of v.
    inline void local_complement_rows(std::span<Row> rows, int v)
    {
        const Row m = rows[v];
        for (Row rest = m; rest; rest &= rest - 1) {
            const int u = lowest(rest);
            rows[u] ^= m & ~bit(u);
        }
    }

    auto local_complement(const Graph & g, int v) -> Graph;
    auto pivot(const Graph & g, int v, int w) -> Graph;
    auto complement(const Graph & g) -> Graph;
    auto disjoint_union(const Graph & g, const Graph & h) -> Graph;
    auto join(const Graph & g, const Graph & h) -> Graph;
    auto induced_subgraph(const Graph & g, VertexSet s) -> Graph;

    /// Relabels so that vertex v of g becomes perm[v].
    auto permute(const Graph & g, std::span<const int> perm) -> Graph;

    auto to_string(const Graph & g) -> std::string;
}
