#include "vmr/graph.hpp"

#include <algorithm>
#include <sstream>

namespace vmr
{
    auto VertexSet::members() const -> std::vector<int>
    {
        std::vector<int> out;
        for (Row rest = mask; rest; rest &= rest - 1)
            out.push_back(lowest(rest));
        return out;
    }

    Graph::Graph(int n) :
        _n(n)
    {
        if (n < 0 || n > kMaxVertices)
            throw GraphError("vertex count " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
    }

    auto Graph::from_rows(std::span<const Row> rows) -> Graph
    {
        Graph g(static_cast<int>(rows.size()));
        std::copy(rows.begin(), rows.end(), g._rows.begin());
        if (! g.is_valid())
            throw GraphError("adjacency rows are not a simple undirected graph");
        return g;
    }

    auto Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) -> Graph
    {
        Graph g(n);
        for (auto [u, v] : edges)
            g.add_edge(u, v);
        return g;
    }

    auto Graph::empty(int n) -> Graph
    {
        return Graph(n);
    }

    auto Graph::complete(int n) -> Graph
    {
        Graph g(n);
        for (int v = 0; v < n; ++v)
            g._rows[v] = low_mask(n) & ~bit(v);
        return g;
    }

    auto Graph::cycle(int n) -> Graph
    {
        if (n < 3)
            throw GraphError("a cycle needs at least 3 vertices");
        Graph g(n);
        for (int v = 0; v < n; ++v)
            g.add_edge(v, (v + 1) % n);
        return g;
    }

    auto Graph::path(int n) -> Graph
    {
        Graph g(n);
        for (int v = 0; v + 1 < n; ++v)
            g.add_edge(v, v + 1);
        return g;
    }

    void Graph::check_vertex(int v) const
    {
        if (v < 0 || v >= _n)
            throw GraphError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(_n));
    }

    auto Graph::edge_count() const -> int
    {
        int twice = 0;
        for (int v = 0; v < _n; ++v)
            twice += popcount(_rows[v]);
        return twice / 2;
    }

    void Graph::add_edge(int u, int v)
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw GraphError("loops are not allowed");
        _rows[u] |= bit(v);
        _rows[v] |= bit(u);
    }

    void Graph::remove_edge(int u, int v)
    {
        check_vertex(u);
        check_vertex(v);
        _rows[u] &= ~bit(v);
        _rows[v] &= ~bit(u);
    }

    void Graph::toggle_edge(int u, int v)
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw GraphError("loops are not allowed");
        _rows[u] ^= bit(v);
        _rows[v] ^= bit(u);
    }

    auto Graph::is_valid() const -> bool
    {
        const Row in_range = low_mask(_n);
        for (int v = 0; v < kMaxVertices; ++v) {
            if (v >= _n) {
                if (_rows[v] != 0)
                    return false;
                continue;
            }
            if (_rows[v] & ~in_range)
                return false;
            if ((_rows[v] >> v) & 1)
                return false;
            for (Row rest = _rows[v]; rest; rest &= rest - 1)
                if (! ((_rows[lowest(rest)] >> v) & 1))
                    return false;
        }
        return true;
    }

    auto Graph::hash() const -> std::size_t
    {
        // FNV-1a style mix over the live rows.
        std::uint64_t h = 0xcbf29ce484222325ULL ^ static_cast<std::uint64_t>(_n);
        for (int v = 0; v < _n; ++v) {
            h ^= _rows[v];
            h *= 0x100000001b3ULL;
            h ^= h >> 29;
        }
        return static_cast<std::size_t>(h);
    }

    auto local_complement(const Graph & g, int v) -> Graph
    {
        if (v < 0 || v >= g.order())
            throw GraphError("local complementation at vertex " + std::to_string(v) + " out of range");
        std::array<Row, kMaxVertices> rows{};
        std::copy(g.rows().begin(), g.rows().end(), rows.begin());
        local_complement_rows(std::span<Row>(rows.data(), g.order()), v);
        return Graph::from_rows(std::span<const Row>(rows.data(), g.order()));
    }

    auto pivot(const Graph & g, int v, int w) -> Graph
    {
        if (v < 0 || v >= g.order() || w < 0 || w >= g.order() || ! g.adjacent(v, w))
            throw GraphError("pivot requires an edge");
        return local_complement(local_complement(local_complement(g, v), w), v);
    }

    auto complement(const Graph & g) -> Graph
    {
        Graph out = Graph::complete(g.order());
        for (int v = 0; v < g.order(); ++v)
            for (Row rest = g.row(v); rest; rest &= rest - 1)
                if (lowest(rest) > v)
                    out.remove_edge(v, lowest(rest));
        return out;
    }

    namespace
    {
        auto combine(const Graph & g, const Graph & h, bool cross) -> Graph
        {
            const int n = g.order() + h.order();
            if (n > kMaxVertices)
                throw GraphError("combined order " + std::to_string(n) + " exceeds capacity " + std::to_string(kMaxVertices));
            std::array<Row, kMaxVertices> rows{};
            const Row g_side = low_mask(g.order());
            const Row h_side = low_mask(n) & ~g_side;
            for (int v = 0; v < g.order(); ++v)
                rows[v] = g.row(v) | (cross ? h_side : 0);
            for (int v = 0; v < h.order(); ++v)
                rows[g.order() + v] = (h.row(v) << g.order()) | (cross ? g_side : 0);
            return Graph::from_rows(std::span<const Row>(rows.data(), n));
        }
    }

    auto disjoint_union(const Graph & g, const Graph & h) -> Graph
    {
        return combine(g, h, false);
    }

    auto join(const Graph & g, const Graph & h) -> Graph
    {
        return combine(g, h, true);
    }

    auto induced_subgraph(const Graph & g, VertexSet s) -> Graph
    {
        if (s.empty())
            throw GraphError("induced subgraph of an empty vertex set");
        if (s.mask & ~g.all().mask)
            throw GraphError("vertex set exceeds graph order");
        const auto keep = s.members();
        Graph out(static_cast<int>(keep.size()));
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (std::size_t j = i + 1; j < keep.size(); ++j)
                if (g.adjacent(keep[i], keep[j]))
                    out.add_edge(static_cast<int>(i), static_cast<int>(j));
        return out;
    }

    auto permute(const Graph & g, std::span<const int> perm) -> Graph
    {
        if (static_cast<int>(perm.size()) != g.order())
            throw GraphError("permutation length does not match graph order");
        Graph out(g.order());
        for (int v = 0; v < g.order(); ++v)
            for (Row rest = g.row(v); rest; rest &= rest - 1)
                if (lowest(rest) > v)
                    out.add_edge(perm[v], perm[lowest(rest)]);
        return out;
    }

    auto to_string(const Graph & g) -> std::string
    {
        std::ostringstream s;
        s << "n=" << g.order() << " {";
        bool first = true;
        for (int v = 0; v < g.order(); ++v)
            for (Row rest = g.row(v); rest; rest &= rest - 1)
                if (lowest(rest) > v) {
                    s << (first ? "" : ",") << v << '-' << lowest(rest);
                    first = false;
                }
        s << '}';
        return s.str();
    }
}
