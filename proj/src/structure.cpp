#include "vmr/structure.hpp"
#include "vmr/canonical.hpp"
#include "vmr/codec.hpp"
#include "vmr/orbit.hpp"

#include <algorithm>
#include <set>

namespace vmr
{
    auto wheel(int spokes) -> Graph
    {
        return join(Graph::cycle(spokes), Graph::empty(1));
    }

    auto bipartite_wheel3() -> Graph
    {
        Graph g = disjoint_union(Graph::cycle(6), Graph::empty(1));
        for (int v : {0, 2, 4})
            g.add_edge(6, v);
        return g;
    }

    auto petersen() -> Graph
    {
        Graph g(10);
        for (int i = 0; i < 5; ++i) {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        return g;
    }

    auto circle_obstructions() -> std::vector<ObstructionPattern>
    {
        return {{"W5", wheel(5)}, {"BW3", bipartite_wheel3()}, {"W7", wheel(7)}};
    }

    namespace
    {
        class InducedSearch
        {
        public:
            InducedSearch(const Graph & host, const Graph & pattern) :
                _host(host),
                _pattern(pattern),
                _mapping(pattern.order(), -1)
            {
                // Connected-first order: each next pattern vertex has as many
                // already-placed neighbours as possible, ties by degree.
                Row placed = 0;
                while (static_cast<int>(_order.size()) < pattern.order()) {
                    int pick = -1, best_links = -1, best_degree = -1;
                    for (int p = 0; p < pattern.order(); ++p) {
                        if (placed & bit(p))
                            continue;
                        const int links = popcount(pattern.row(p) & placed), degree = pattern.degree(p);
                        if (links > best_links || (links == best_links && degree > best_degree)) {
                            pick = p;
                            best_links = links;
                            best_degree = degree;
                        }
                    }
                    _order.push_back(pick);
                    placed |= bit(pick);
                }
            }

            auto run() -> std::optional<InducedMatch>
            {
                if (_pattern.order() > _host.order())
                    return std::nullopt;
                if (! place(0, 0))
                    return std::nullopt;
                InducedMatch m{_mapping, {}};
                for (int h : _mapping)
                    m.vertices.mask |= bit(h);
                return m;
            }

        private:
            const Graph & _host;
            const Graph & _pattern;
            std::vector<int> _order;
            std::vector<int> _mapping;

            auto place(std::size_t depth, Row used) -> bool
            {
                if (depth == _order.size())
                    return true;
                const int p = _order[depth];
                for (Row rest = _host.all().mask & ~used; rest; rest &= rest - 1) {
                    const int h = lowest(rest);
                    if (_host.degree(h) < _pattern.degree(p))
                        continue;
                    bool consistent = true;
                    for (std::size_t i = 0; i < depth && consistent; ++i) {
                        const int q = _order[i];
                        consistent = _pattern.adjacent(p, q) == _host.adjacent(h, _mapping[q]);
                    }
                    if (! consistent)
                        continue;
                    _mapping[p] = h;
                    if (place(depth + 1, used | bit(h)))
                        return true;
                    _mapping[p] = -1;
                }
                return false;
            }
        };
    }

    auto find_induced_subgraph(const Graph & host, const Graph & pattern) -> std::optional<InducedMatch>
    {
        return InducedSearch(host, pattern).run();
    }

    auto find_induced_pattern_in_orbit(const Graph & g, const ObstructionPattern & p) -> std::optional<PatternHit>
    {
        if (p.graph.order() > g.order())
            return std::nullopt;
        const auto listing = enumerate_orbit(g);
        for (std::size_t i = 0; i < listing.members.size(); ++i)
            if (auto m = find_induced_subgraph(listing.members[i], p.graph))
                return PatternHit{static_cast<std::int64_t>(i), listing.members[i], std::move(*m)};
        return std::nullopt;
    }

    auto lc_class_partition(const std::vector<std::string> & codes) -> LCClassPartition
    {
        struct Class
        {
            std::set<CanonicalForm> orbit_forms;
            std::vector<std::string> codes;
        };
        std::vector<Class> classes;

        for (const auto & code : codes) {
            const Graph g = decode_graph6(code);
            const auto form = canonical_form(g);
            auto it = std::find_if(classes.begin(), classes.end(),
                    [&](const Class & c) { return c.orbit_forms.contains(form); });
            if (it != classes.end()) {
                it->codes.push_back(code);
                continue;
            }
            Class fresh;
            for (const auto & member : enumerate_orbit(g).members)
                fresh.orbit_forms.insert(canonical_form(member));
            fresh.codes.push_back(code);
            classes.push_back(std::move(fresh));
        }

        LCClassPartition out;
        for (auto & c : classes)
            out.classes.push_back(std::move(c.codes));
        return out;
    }

    auto extremal_codes() -> const std::vector<LabelledCode> &
    {
        static const std::vector<LabelledCode> codes{
            {"G1", "ICQ`fm}~w"},
            {"G2", "ICQ`fn}no"},
            {"G3", "ICQdbh{NO"},
            {"G4", "ICQb`pzlw"},
            {"G5", "ICQb`twlw"},
            {"G6", "IUZ~vz}}o"},
        };
        return codes;
    }

    auto match_extremal(const Graph & g) -> std::optional<std::string>
    {
        if (g.order() != 10)
            return std::nullopt;
        const auto form = canonical_form(g);
        for (const auto & e : extremal_codes())
            if (canonical_form(decode_graph6(e.code)) == form)
                return e.label;
        return std::nullopt;
    }

    auto identify_named(const Graph & g) -> std::vector<std::string>
    {
        std::vector<std::string> names;
        const int n = g.order();
        if (n == 10) {
            if (are_isomorphic(g, petersen()))
                names.push_back("Petersen");
            if (are_isomorphic(g, complement(petersen())))
                names.push_back("co-Petersen");
            if (are_isomorphic(g, join(Graph::cycle(5), Graph::cycle(5))))
                names.push_back("C5∇C5");
        }
        if (n == 6 && are_isomorphic(g, complement(Graph::cycle(6))))
            names.push_back("co-C6");
        if (are_isomorphic(g, Graph::complete(n)))
            names.push_back("K" + std::to_string(n));
        if (are_isomorphic(g, Graph::empty(n)))
            names.push_back("E" + std::to_string(n));
        if (n >= 3 && are_isomorphic(g, Graph::cycle(n)))
            names.push_back("C" + std::to_string(n));
        return names;
    }
}
