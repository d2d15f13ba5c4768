#include "vmr/canonical.hpp"
#include "vmr/codec.hpp"
#include "vmr/graph.hpp"

#include "reference/naive.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

using namespace vmr;

namespace
{
    auto edge_set(const Graph & g)
    {
        return naive::from_library(g).edges();
    }

    auto random_graph(int n, std::mt19937_64 & rng, double p = 0.5) -> Graph
    {
        std::bernoulli_distribution coin(p);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    g.add_edge(u, v);
        return g;
    }

    auto random_permutation(int n, std::mt19937_64 & rng) -> std::vector<int>
    {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        return p;
    }

    /// Every labelled graph on n vertices.
    auto all_labelled(int n) -> std::vector<Graph>
    {
        std::vector<Graph> out;
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs); ++m)
            out.push_back(naive::to_library(naive::from_mask(n, m)));
        return out;
    }
}

TEST_CASE("graph invariants hold for constructors")
{
    for (int n = 0; n <= 12; ++n) {
        CHECK(Graph::empty(n).is_valid());
        CHECK(Graph::complete(n).is_valid());
        CHECK(Graph::path(n).is_valid());
        CHECK(Graph::complete(n).edge_count() == n * (n - 1) / 2);
    }
    CHECK(Graph::cycle(5).edge_count() == 5);
    CHECK_THROWS_AS(Graph::cycle(2), GraphError);
    CHECK_THROWS_AS(Graph(65), GraphError);
    CHECK(Graph(64).order() == 64);
}

TEST_CASE("from_rows rejects asymmetric, looped or out-of-range rows")
{
    const std::vector<Row> asymmetric{0b10, 0b00};
    const std::vector<Row> loop{0b01};
    const std::vector<Row> high{0b100, 0};
    CHECK_THROWS_AS(Graph::from_rows(asymmetric), GraphError);
    CHECK_THROWS_AS(Graph::from_rows(loop), GraphError);
    CHECK_THROWS_AS(Graph::from_rows(high), GraphError);
}

TEST_CASE("local complementation examples")
{
    const Graph k3 = Graph::complete(3);
    const Graph lc = local_complement(k3, 0);
    CHECK(edge_set(lc) == std::set<std::pair<int, int>>{{0, 1}, {0, 2}});
    CHECK(local_complement(lc, 0) == k3);
    for (int v = 0; v < 5; ++v)
        CHECK(local_complement(Graph::empty(5), v) == Graph::empty(5));
    CHECK_THROWS_AS(local_complement(k3, 3), GraphError);
    CHECK_THROWS_AS(local_complement(k3, -1), GraphError);
}

TEST_CASE("local complementation is an involution touching only neighbourhood pairs")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 16;
        const Graph g = random_graph(n, rng);
        for (int v = 0; v < n; ++v) {
            const Graph h = local_complement(g, v);
            REQUIRE(h.is_valid());
            CHECK(local_complement(h, v) == g);
            for (int x = 0; x < n; ++x)
                for (int y = x + 1; y < n; ++y) {
                    const bool inside = g.adjacent(v, x) && g.adjacent(v, y);
                    CHECK(h.adjacent(x, y) == (inside ? ! g.adjacent(x, y) : g.adjacent(x, y)));
                }
        }
    }
}

TEST_CASE("local complementation agrees with the naive reference")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = random_graph(2 + trial % 10, rng);
        const auto ref = naive::from_library(g);
        for (int v = 0; v < g.order(); ++v)
            CHECK(naive::from_library(local_complement(g, v)) == naive::local_complement(ref, v));
    }
}

TEST_CASE("pivot")
{
    const Graph k3 = Graph::complete(3);
    CHECK(pivot(k3, 0, 1) == local_complement(local_complement(local_complement(k3, 0), 1), 0));

    // P3 with edges 01, 12: *0 is identity (one neighbour), *1 adds 02, *0 then toggles 12.
    const Graph p3 = Graph::path(3);
    const std::pair<int, int> expected_edges[] = {{0, 1}, {0, 2}};
    CHECK(pivot(p3, 0, 1) == Graph::from_edges(3, expected_edges));
    CHECK(pivot(p3, 0, 1) == local_complement(local_complement(local_complement(p3, 0), 1), 0));

    CHECK_THROWS_AS(pivot(p3, 0, 2), GraphError);
}

TEST_CASE("pivot is symmetric and an involution on every graph with n <= 5")
{
    for (int n = 2; n <= 5; ++n)
        for (const auto & g : all_labelled(n))
            for (int v = 0; v < n; ++v)
                for (Row rest = g.row(v); rest; rest &= rest - 1) {
                    const int w = lowest(rest);
                    const Graph p = pivot(g, v, w);
                    REQUIRE(p.is_valid());
                    CHECK(p == local_complement(local_complement(local_complement(g, w), v), w));
                    CHECK(pivot(p, v, w) == g);
                }
}

TEST_CASE("complement, union and join")
{
    for (int k = 0; k <= 8; ++k)
        CHECK(complement(Graph::empty(k)) == Graph::complete(k));

    const Graph g6 = decode_graph6("IUZ~vz}}o");
    CHECK(are_isomorphic(complement(g6), disjoint_union(Graph::cycle(5), Graph::cycle(5))));
    CHECK(are_isomorphic(join(Graph::cycle(5), Graph::cycle(5)), g6));

    CHECK(disjoint_union(Graph::empty(2), Graph::empty(3)) == Graph::empty(5));
    const Graph cc = disjoint_union(Graph::cycle(5), Graph::cycle(5));
    CHECK(cc.order() == 10);
    CHECK(cc.edge_count() == 10);
    for (int v = 0; v < 10; ++v)
        CHECK(cc.degree(v) == 2);

    const Graph sharp = disjoint_union(Graph::complete(2), complement(Graph::cycle(6)));
    CHECK(sharp.order() == 8);
    CHECK(sharp.edge_count() == 1 + 9);

    CHECK(join(Graph::empty(1), Graph::empty(1)) == Graph::complete(2));
    const Graph w5 = join(Graph::empty(1), Graph::cycle(5));
    CHECK(w5.order() == 6);
    CHECK(w5.degree(0) == 5);
    CHECK(w5.edge_count() == 10);

    CHECK_THROWS_AS(disjoint_union(Graph::empty(40), Graph::empty(30)), GraphError);
    CHECK_THROWS_AS(join(Graph::empty(64), Graph::empty(1)), GraphError);
}

TEST_CASE("complement of a join is the union of complements")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = random_graph(1 + trial % 7, rng), h = random_graph(1 + trial % 5, rng);
        const Graph c = complement(g);
        REQUIRE(c.is_valid());
        CHECK(complement(c) == g);
        CHECK(complement(join(g, h)) == disjoint_union(complement(g), complement(h)));
    }
}

TEST_CASE("induced subgraph")
{
    CHECK(induced_subgraph(Graph::complete(4), {0b0011}) == Graph::complete(2));

    // C5 0-1-2-3-4-0 on {0,2,4}: only 4-0 survives; relabelled 0->0, 2->1, 4->2.
    const Graph s = induced_subgraph(Graph::cycle(5), {0b10101});
    const std::pair<int, int> expected_edges[] = {{0, 2}};
    CHECK(s == Graph::from_edges(3, expected_edges));

    const Graph g = decode_graph6("ICQdbh{NO");
    CHECK(induced_subgraph(g, g.all()) == g);
    CHECK_THROWS_AS(induced_subgraph(g, {}), GraphError);
    CHECK_THROWS_AS(induced_subgraph(Graph::complete(3), {0b1000}), GraphError);
}

TEST_CASE("canonical form examples")
{
    const std::pair<int, int> a[] = {{0, 1}, {1, 2}};
    const std::pair<int, int> b[] = {{0, 2}, {1, 2}};
    CHECK(canonical_form(Graph::from_edges(3, a)) == canonical_form(Graph::from_edges(3, b)));
    CHECK(canonical_form(Graph::complete(3)) != canonical_form(Graph::path(3)));

    // K3 and its three local complements: K3 plus three labelled paths.
    std::set<CanonicalForm> keys{canonical_form(Graph::complete(3))};
    for (int v = 0; v < 3; ++v)
        keys.insert(canonical_form(local_complement(Graph::complete(3), v)));
    CHECK(keys.size() == 2);

    CHECK(are_isomorphic(join(Graph::cycle(5), Graph::cycle(5)), decode_graph6("IUZ~vz}}o")));
    CHECK_FALSE(are_isomorphic(decode_graph6("ICQ`fm}~w"), decode_graph6("ICQ`fn}no")));
}

TEST_CASE("canonical form is invariant under relabelling")
{
    std::mt19937_64 rng(42);
    std::vector<Graph> graphs{
        decode_graph6("ICQ`fm}~w"), decode_graph6("IUZ~vz}}o"), Graph::complete(9), Graph::empty(11),
        Graph::cycle(10), disjoint_union(Graph::cycle(5), Graph::cycle(5)),
    };
    for (int i = 0; i < 6; ++i)
        graphs.push_back(random_graph(4 + i, rng));
    for (int i = 0; i < 4; ++i)
        graphs.push_back(random_graph(16, rng, 0.3));

    for (const auto & g : graphs) {
        const auto key = canonical_form(g);
        for (int t = 0; t < 100; ++t) {
            const Graph h = permute(g, random_permutation(g.order(), rng));
            CHECK(canonical_form(h) == key);
            CHECK(are_isomorphic(g, h));
        }
    }
}

TEST_CASE("canonical labelling relabels the input onto the canonical graph")
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        const Graph g = random_graph(3 + t % 9, rng);
        const auto lab = canonical_labeling(g);
        std::vector<int> perm(g.order());
        for (int i = 0; i < g.order(); ++i)
            perm[lab.order[i]] = i;
        CHECK(permute(g, perm) == lab.graph);
    }
}

TEST_CASE("canonical form separates exactly the isomorphism classes for n <= 6")
{
    // Oracle: brute-force minimum over all n! relabelings.
    for (int n = 1; n <= 6; ++n) {
        std::map<std::uint64_t, CanonicalForm> by_oracle;
        std::set<CanonicalForm> forms;
        for (const auto & g : all_labelled(n)) {
            const auto oracle = naive::brute_canonical(naive::from_library(g));
            const auto form = canonical_form(g);
            auto [it, fresh] = by_oracle.emplace(oracle, form);
            if (! fresh)
                CHECK(it->second == form);
            forms.insert(form);
        }
        CHECK(forms.size() == by_oracle.size());
    }
}

TEST_CASE("packed keys round-trip")
{
    std::mt19937_64 rng(9);
    for (int t = 0; t < 200; ++t) {
        const Graph g = random_graph(1 + t % kMaxPackedOrder, rng);
        CHECK(unpack_upper(g.order(), pack_upper(g.rows())) == g);
    }
    CHECK_THROWS_AS(unpack_upper(12, 0), GraphError);
}
