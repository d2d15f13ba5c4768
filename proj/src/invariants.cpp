#include "vmr/invariants.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace vmr
{
    auto format_extended(int value) -> std::string
    {
        return value == kInfinity ? "inf" : std::to_string(value);
    }

    namespace
    {
        auto independent_search(std::span<const Row> rows, Row candidates, int need) -> bool
        {
            if (need == 0)
                return true;
            while (candidates) {
                if (popcount(candidates) < need)
                    return false;
                const int v = lowest(candidates);
                candidates &= candidates - 1;
                if (independent_search(rows, candidates & ~rows[v], need - 1))
                    return true;
            }
            return false;
        }

        void maximum_search(std::span<const Row> rows, Row candidates, Row chosen, Row & best)
        {
            if (popcount(chosen) + popcount(candidates) <= popcount(best))
                return;
            if (! candidates) {
                best = chosen;
                return;
            }
            const int v = lowest(candidates);
            const Row rest = candidates & ~bit(v);
            maximum_search(rows, rest & ~rows[v], chosen | bit(v), best);
            // Excluding v only helps if some neighbour of v can be used instead.
            if (rows[v] & rest)
                maximum_search(rows, rest, chosen, best);
        }
    }

    auto has_independent_set(std::span<const Row> rows, int k) -> bool
    {
        if (k <= 0)
            return true;
        return independent_search(rows, low_mask(static_cast<int>(rows.size())), k);
    }

    auto has_independent_set(const Graph & g, int k) -> bool
    {
        return has_independent_set(g.rows(), k);
    }

    auto independence_number(std::span<const Row> rows) -> int
    {
        Row best = 0;
        maximum_search(rows, low_mask(static_cast<int>(rows.size())), 0, best);
        return popcount(best);
    }

    auto independence_number(const Graph & g) -> int
    {
        return independence_number(g.rows());
    }

    auto maximum_independent_set(const Graph & g) -> VertexSet
    {
        Row best = 0;
        maximum_search(g.rows(), g.all().mask, 0, best);
        return {best};
    }

    auto clique_number(const Graph & g) -> int
    {
        return independence_number(complement(g));
    }

    namespace
    {
        class Colouring
        {
        public:
            Colouring(const Graph & g, int colours) :
                _g(g),
                _colours(colours),
                _classes(colours, 0)
            {
                for (int v = 0; v < g.order(); ++v)
                    _order.push_back(v);
                std::stable_sort(_order.begin(), _order.end(),
                        [&](int a, int b) { return g.degree(a) > g.degree(b); });
            }

            auto solve() -> bool
            {
                return assign(0, 0);
            }

        private:
            const Graph & _g;
            int _colours;
            std::vector<Row> _classes;
            std::vector<int> _order;

            auto assign(std::size_t index, int used) -> bool
            {
                if (index == _order.size())
                    return true;
                const int v = _order[index];
                const int limit = std::min(_colours, used + 1);
                for (int c = 0; c < limit; ++c) {
                    if (_g.row(v) & _classes[c])
                        continue;
                    _classes[c] |= bit(v);
                    if (assign(index + 1, std::max(used, c + 1)))
                        return true;
                    _classes[c] &= ~bit(v);
                }
                return false;
            }
        };

        auto greedy_clique(const Graph & g) -> int
        {
            int best = g.order() > 0 ? 1 : 0;
            for (int start = 0; start < g.order(); ++start) {
                Row candidates = g.row(start);
                int size = 1;
                while (candidates) {
                    int pick = lowest(candidates), pick_degree = -1;
                    for (Row rest = candidates; rest; rest &= rest - 1) {
                        const int d = popcount(g.row(lowest(rest)) & candidates);
                        if (d > pick_degree) {
                            pick = lowest(rest);
                            pick_degree = d;
                        }
                    }
                    candidates &= g.row(pick);
                    ++size;
                }
                best = std::max(best, size);
            }
            return best;
        }
    }

    auto chromatic_number(const Graph & g) -> int
    {
        if (g.order() > 16)
            throw GraphError("chromatic number supports at most 16 vertices");
        if (g.order() == 0)
            return 0;
        for (int k = greedy_clique(g);; ++k)
            if (Colouring(g, k).solve())
                return k;
    }

    auto degree_sequence(const Graph & g) -> std::vector<int>
    {
        std::vector<int> out;
        for (int v = 0; v < g.order(); ++v)
            out.push_back(g.degree(v));
        std::sort(out.begin(), out.end(), std::greater<>());
        return out;
    }

    namespace
    {
        /// Eccentricity of v within its component, and the component itself.
        auto bfs_layers(const Graph & g, int v, Row & reached) -> int
        {
            reached = bit(v);
            Row frontier = bit(v);
            int depth = 0;
            while (true) {
                Row next = 0;
                for (Row rest = frontier; rest; rest &= rest - 1)
                    next |= g.row(lowest(rest));
                next &= ~reached;
                if (! next)
                    return depth;
                reached |= next;
                frontier = next;
                ++depth;
            }
        }

        auto distance(const Graph & g, int from, int to) -> int
        {
            Row reached = bit(from), frontier = bit(from);
            for (int depth = 0; frontier; ++depth) {
                if (reached & bit(to))
                    return depth;
                Row next = 0;
                for (Row rest = frontier; rest; rest &= rest - 1)
                    next |= g.row(lowest(rest));
                frontier = next & ~reached;
                reached |= next;
            }
            return kInfinity;
        }
    }

    auto diameter(const Graph & g) -> int
    {
        int best = 0;
        for (int v = 0; v < g.order(); ++v) {
            Row reached = 0;
            best = std::max(best, bfs_layers(g, v, reached));
            if (reached != g.all().mask)
                return kInfinity;
        }
        return best;
    }

    auto girth(const Graph & g) -> int
    {
        int best = kInfinity;
        Graph work = g;
        for (int u = 0; u < g.order(); ++u)
            for (Row rest = g.row(u) & ~low_mask(u + 1); rest; rest &= rest - 1) {
                const int v = lowest(rest);
                work.remove_edge(u, v);
                const int d = distance(work, u, v);
                if (d != kInfinity)
                    best = std::min(best, d + 1);
                work.add_edge(u, v);
            }
        return best;
    }

    auto components(const Graph & g) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> out;
        Row unseen = g.all().mask;
        while (unseen) {
            Row reached = 0;
            bfs_layers(g, lowest(unseen), reached);
            out.push_back({reached});
            unseen &= ~reached;
        }
        return out;
    }

    auto is_connected(const Graph & g) -> bool
    {
        return components(g).size() <= 1;
    }

    auto char_poly(const Graph & g) -> IntPolynomial
    {
        const int n = g.order();
        if (n > kMaxCharPolyOrder)
            throw GraphError("characteristic polynomial supports at most " + std::to_string(kMaxCharPolyOrder) + " vertices");

        // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
        using Wide = __int128;
        using Matrix = std::vector<Wide>;
        std::vector<Wide> c(n + 1, 0);
        c[n] = 1;
        Matrix m(n * n, 0), am(n * n, 0);
        for (int k = 1; k <= n; ++k) {
            for (int i = 0; i < n; ++i)
                m[i * n + i] += c[n - k + 1];
            // am = A * m; row i of A is the neighbourhood of i.
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    Wide s = 0;
                    for (Row rest = g.row(i); rest; rest &= rest - 1)
                        s += m[lowest(rest) * n + j];
                    am[i * n + j] = s;
                }
            Wide trace = 0;
            for (int i = 0; i < n; ++i)
                trace += am[i * n + i];
            if (trace % k != 0)
                throw std::logic_error("Faddeev-LeVerrier trace not divisible");
            c[n - k] = -trace / k;
            m.swap(am);
        }

        IntPolynomial out;
        for (Wide v : c) {
            if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
                throw std::overflow_error("characteristic polynomial coefficient exceeds 64 bits");
            out.coefficients.push_back(static_cast<std::int64_t>(v));
        }
        return out;
    }

    auto to_string(const IntPolynomial & p) -> std::string
    {
        std::ostringstream s;
        bool first = true;
        for (int d = p.degree(); d >= 0; --d) {
            const std::int64_t c = p.coefficients[d];
            if (c == 0)
                continue;
            const std::int64_t mag = c < 0 ? -c : c;
            s << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
            if (mag != 1 || d == 0)
                s << mag;
            if (d >= 1)
                s << 'x';
            if (d >= 2)
                s << '^' << d;
            first = false;
        }
        if (first)
            s << '0';
        return s.str();
    }

    auto compute_invariants(const Graph & g) -> InvariantRecord
    {
        InvariantRecord r;
        r.edge_count = g.edge_count();
        r.alpha = independence_number(g);
        r.omega = clique_number(g);
        r.chi = chromatic_number(g);
        r.diameter = diameter(g);
        r.degree_sequence = degree_sequence(g);
        r.girth = girth(g);
        r.connected = is_connected(g);
        return r;
    }

    auto format_degree_sequence(const std::vector<int> & degrees) -> std::string
    {
        std::ostringstream s;
        s << '[';
        for (std::size_t i = 0; i < degrees.size();) {
            std::size_t j = i;
            while (j < degrees.size() && degrees[j] == degrees[i])
                ++j;
            s << (i ? "," : "") << degrees[i];
            if (j - i > 1)
                s << '^' << (j - i);
            i = j;
        }
        s << ']';
        return s.str();
    }
}
