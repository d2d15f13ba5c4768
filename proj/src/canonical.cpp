#include "vmr/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace vmr
{
    auto unpack_upper(int n, std::uint64_t key) -> Graph
    {
        if (n < 0 || n > kMaxPackedOrder)
            throw GraphError("packed keys hold at most " + std::to_string(kMaxPackedOrder) + " vertices");
        std::array<Row, kMaxVertices> rows{};
        int offset = 0;
        for (int v = 0; v + 1 < n; ++v) {
            const int width = n - 1 - v;
            const Row upper = ((key >> offset) & low_mask(width)) << (v + 1);
            rows[v] |= upper;
            for (Row rest = upper; rest; rest &= rest - 1)
                rows[lowest(rest)] |= bit(v);
            offset += width;
        }
        return Graph::from_rows(std::span<const Row>(rows.data(), n));
    }

    namespace
    {
        using Rows = std::array<Row, kMaxVertices>;
        using Perm = std::array<int, kMaxVertices>;

        struct Partition
        {
            Rows cells{};
            int count = 0;
        };

        /**
         * Individualisation-refinement search for the least relabelled row
         * tuple. Children of a node are skipped when an automorphism fixing
         * the node's individualised prefix maps them onto an explored
         * sibling; twin vertices give such automorphisms for free.
         */
        class CanonicalSearch
        {
        public:
            explicit CanonicalSearch(const Graph & g) :
                _n(g.order())
            {
                std::copy(g.rows().begin(), g.rows().end(), _rows.begin());
            }

            auto run() -> CanonicalLabeling
            {
                Partition root;
                if (_n > 0) {
                    root.cells[0] = low_mask(_n);
                    root.count = 1;
                    std::vector<Row> queue{root.cells[0]};
                    refine(root, queue);
                }
                Perm prefix{};
                descend(root, prefix, 0);

                CanonicalLabeling out;
                out.order.assign(_best_order.begin(), _best_order.begin() + _n);
                out.graph = Graph::from_rows(std::span<const Row>(_best.data(), _n));
                return out;
            }

        private:
            int _n;
            Rows _rows{};

            bool _have_leaf = false;
            Rows _best{}, _first{};
            Perm _best_order{}, _first_order{};
            std::vector<Perm> _automorphisms;

            void refine(Partition & p, std::vector<Row> & queue) const
            {
                std::array<int, kMaxVertices> counts{};
                for (std::size_t head = 0; head < queue.size() && p.count < _n; ++head) {
                    const Row splitter = queue[head];
                    for (int x = 0; x < p.count; ++x) {
                        const Row cell = p.cells[x];
                        if (popcount(cell) == 1)
                            continue;

                        int lo = kMaxVertices, hi = -1;
                        for (Row rest = cell; rest; rest &= rest - 1) {
                            const int v = lowest(rest);
                            counts[v] = popcount(_rows[v] & splitter);
                            lo = std::min(lo, counts[v]);
                            hi = std::max(hi, counts[v]);
                        }
                        if (lo == hi)
                            continue;

                        Rows groups{};
                        int group_count = 0;
                        for (int c = lo; c <= hi; ++c) {
                            Row group = 0;
                            for (Row rest = cell; rest; rest &= rest - 1)
                                if (counts[lowest(rest)] == c)
                                    group |= bit(lowest(rest));
                            if (group)
                                groups[group_count++] = group;
                        }

                        std::copy_backward(p.cells.begin() + x + 1, p.cells.begin() + p.count,
                                p.cells.begin() + p.count + group_count - 1);
                        std::copy(groups.begin(), groups.begin() + group_count, p.cells.begin() + x);
                        p.count += group_count - 1;
                        for (int i = 0; i < group_count; ++i)
                            queue.push_back(groups[i]);
                        x += group_count - 1;
                    }
                }
            }

            auto twins(int u, int v) const -> bool
            {
                return ((_rows[u] ^ _rows[v]) & ~(bit(u) | bit(v))) == 0;
            }

            /// Orbit representative of v under the stored automorphisms that
            /// fix every vertex of prefix[0..depth).
            auto orbit_roots(const Perm & prefix, int depth) const -> Perm
            {
                Perm parent{};
                std::iota(parent.begin(), parent.begin() + _n, 0);
                auto find = [&](int x) {
                    while (parent[x] != x)
                        x = parent[x] = parent[parent[x]];
                    return x;
                };
                for (const auto & gamma : _automorphisms) {
                    bool fixes = true;
                    for (int i = 0; i < depth && fixes; ++i)
                        fixes = gamma[prefix[i]] == prefix[i];
                    if (! fixes)
                        continue;
                    for (int v = 0; v < _n; ++v) {
                        const int a = find(v), b = find(gamma[v]);
                        if (a != b)
                            parent[std::max(a, b)] = std::min(a, b);
                    }
                }
                for (int v = 0; v < _n; ++v)
                    parent[v] = find(v);
                return parent;
            }

            void descend(const Partition & p, Perm & prefix, int depth)
            {
                int target = -1;
                for (int x = 0; x < p.count; ++x)
                    if (popcount(p.cells[x]) > 1) {
                        target = x;
                        break;
                    }
                if (target < 0) {
                    leaf(p);
                    return;
                }

                const Row cell = p.cells[target];
                Row tried = 0;
                for (Row rest = cell; rest; rest &= rest - 1) {
                    const int v = lowest(rest);

                    bool redundant = false;
                    for (Row t = tried; t && ! redundant; t &= t - 1)
                        redundant = twins(lowest(t), v);
                    if (! redundant && ! _automorphisms.empty()) {
                        const auto roots = orbit_roots(prefix, depth);
                        for (Row t = tried; t && ! redundant; t &= t - 1)
                            redundant = roots[lowest(t)] == roots[v];
                    }
                    if (redundant)
                        continue;
                    tried |= bit(v);

                    Partition child = p;
                    std::copy_backward(child.cells.begin() + target + 1, child.cells.begin() + child.count,
                            child.cells.begin() + child.count + 1);
                    child.cells[target] = bit(v);
                    child.cells[target + 1] = cell & ~bit(v);
                    ++child.count;
                    std::vector<Row> queue{bit(v)};
                    refine(child, queue);

                    prefix[depth] = v;
                    descend(child, prefix, depth + 1);
                }
            }

            void leaf(const Partition & p)
            {
                Perm order{}, position{};
                for (int i = 0; i < _n; ++i) {
                    order[i] = lowest(p.cells[i]);
                    position[order[i]] = i;
                }
                Rows relabelled{};
                for (int i = 0; i < _n; ++i) {
                    Row r = 0;
                    for (Row rest = _rows[order[i]]; rest; rest &= rest - 1)
                        r |= bit(position[lowest(rest)]);
                    relabelled[i] = r;
                }

                auto same = [&](const Rows & other) {
                    return std::equal(relabelled.begin(), relabelled.begin() + _n, other.begin());
                };
                auto record_automorphism = [&](const Perm & other_order) {
                    Perm gamma{};
                    bool identity = true;
                    for (int i = 0; i < _n; ++i) {
                        gamma[other_order[i]] = order[i];
                        identity = identity && other_order[i] == order[i];
                    }
                    if (! identity)
                        _automorphisms.push_back(gamma);
                };

                if (! _have_leaf) {
                    _have_leaf = true;
                    _first = _best = relabelled;
                    _first_order = _best_order = order;
                    return;
                }
                if (same(_first)) {
                    record_automorphism(_first_order);
                    return;
                }
                if (same(_best)) {
                    record_automorphism(_best_order);
                    return;
                }
                if (std::lexicographical_compare(relabelled.begin(), relabelled.begin() + _n,
                            _best.begin(), _best.begin() + _n)) {
                    _best = relabelled;
                    _best_order = order;
                }
            }
        };
    }

    auto canonical_labeling(const Graph & g) -> CanonicalLabeling
    {
        return CanonicalSearch(g).run();
    }

    auto canonical_graph(const Graph & g) -> Graph
    {
        return canonical_labeling(g).graph;
    }

    auto canonical_form(const Graph & g) -> CanonicalForm
    {
        const Graph c = canonical_graph(g);
        return {c.order(), std::vector<Row>(c.rows().begin(), c.rows().end())};
    }

    auto are_isomorphic(const Graph & g, const Graph & h) -> bool
    {
        if (g.order() != h.order() || g.edge_count() != h.edge_count())
            return false;
        return canonical_form(g) == canonical_form(h);
    }
}
