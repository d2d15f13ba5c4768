#include "naive.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace naive
{
    void Graph::toggle(int u, int v)
    {
        if (has_edge(u, v)) {
            adj[u].erase(v);
            adj[v].erase(u);
        }
        else {
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }

    auto Graph::edges() const -> std::set<std::pair<int, int>>
    {
        std::set<std::pair<int, int>> out;
        for (int u = 0; u < n; ++u)
            for (int v : adj[u])
                if (u < v)
                    out.insert({u, v});
        return out;
    }

    auto from_library(const vmr::Graph & g) -> Graph
    {
        Graph out(g.order());
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
                if (g.adjacent(u, v))
                    out.toggle(u, v);
        return out;
    }

    auto to_library(const Graph & g) -> vmr::Graph
    {
        vmr::Graph out(g.n);
        for (auto [u, v] : g.edges())
            out.add_edge(u, v);
        return out;
    }

    auto from_mask(int n, std::uint64_t mask) -> Graph
    {
        Graph g(n);
        int index = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++index)
                if ((mask >> index) & 1)
                    g.toggle(i, j);
        return g;
    }

    auto local_complement(const Graph & g, int v) -> Graph
    {
        Graph out = g;
        std::vector<int> nbrs(g.adj[v].begin(), g.adj[v].end());
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                out.toggle(nbrs[i], nbrs[j]);
        return out;
    }

    auto alpha(const Graph & g) -> int
    {
        int best = 0;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.n); ++s) {
            std::vector<int> members;
            for (int v = 0; v < g.n; ++v)
                if ((s >> v) & 1)
                    members.push_back(v);
            bool independent = true;
            for (std::size_t i = 0; i < members.size() && independent; ++i)
                for (std::size_t j = i + 1; j < members.size() && independent; ++j)
                    independent = ! g.has_edge(members[i], members[j]);
            if (independent)
                best = std::max(best, static_cast<int>(members.size()));
        }
        return best;
    }

    namespace
    {
        /// Visits members in dequeue order until visit returns false.
        /// Returns {dequeued, stopped, truncated}.
        auto bfs(const Graph & g, std::optional<long> budget, const std::function<bool(const Graph &)> & visit)
            -> std::tuple<long, bool, bool>
        {
            std::set<std::set<std::pair<int, int>>> seen{g.edges()};
            std::deque<Graph> queue{g};
            long dequeued = 0;
            while (! queue.empty()) {
                Graph current = queue.front();
                queue.pop_front();
                ++dequeued;
                if (! visit(current))
                    return {dequeued, true, false};
                for (int v = 0; v < g.n; ++v) {
                    Graph next = local_complement(current, v);
                    if (seen.insert(next.edges()).second)
                        queue.push_back(next);
                }
                if (budget && dequeued >= *budget && ! queue.empty())
                    return {dequeued, false, true};
            }
            return {dequeued, false, false};
        }
    }

    auto orbit(const Graph & g, std::optional<long> budget) -> std::vector<Graph>
    {
        std::vector<Graph> out;
        bfs(g, budget, [&](const Graph & m) {
            out.push_back(m);
            return true;
        });
        return out;
    }

    auto classify(const Graph & g, int k, std::optional<long> budget) -> vmr::PhaseRecord
    {
        vmr::PhaseRecord r;
        r.code = encode_graph6(g);
        const int root_alpha = alpha(g);
        if (root_alpha >= k) {
            r.phase = vmr::Phase::P1;
            r.explored = 0;
            r.max_alpha = root_alpha;
            return r;
        }
        int best = 0;
        auto [dequeued, stopped, truncated] = bfs(g, budget, [&](const Graph & m) {
            best = std::max(best, alpha(m));
            return best < k;
        });
        r.explored = dequeued;
        r.max_alpha = best;
        r.phase = stopped ? vmr::Phase::P2 : (truncated ? vmr::Phase::P3Budgeted : vmr::Phase::P3);
        return r;
    }

    auto encode_graph6(const Graph & g) -> std::string
    {
        std::string bits;
        for (int j = 1; j < g.n; ++j)
            for (int i = 0; i < j; ++i)
                bits += g.has_edge(i, j) ? '1' : '0';
        while (bits.size() % 6 != 0)
            bits += '0';
        std::string out(1, static_cast<char>(63 + g.n));
        for (std::size_t i = 0; i < bits.size(); i += 6)
            out += static_cast<char>(63 + std::stoi(bits.substr(i, 6), nullptr, 2));
        return out;
    }

    auto isomorphic(const Graph & a, const Graph & b) -> bool
    {
        if (a.n != b.n || a.edges().size() != b.edges().size())
            return false;
        std::vector<int> map(a.n, -1);
        std::vector<bool> used(b.n, false);
        std::function<bool(int)> extend = [&](int v) -> bool {
            if (v == a.n)
                return true;
            for (int w = 0; w < b.n; ++w) {
                if (used[w] || a.adj[v].size() != b.adj[w].size())
                    continue;
                bool ok = true;
                for (int u = 0; u < v && ok; ++u)
                    ok = a.has_edge(u, v) == b.has_edge(map[u], w);
                if (! ok)
                    continue;
                map[v] = w;
                used[w] = true;
                if (extend(v + 1))
                    return true;
                used[w] = false;
            }
            map[v] = -1;
            return false;
        };
        return extend(0);
    }

    auto brute_canonical(const Graph & g) -> std::uint64_t
    {
        std::vector<int> perm(g.n);
        std::iota(perm.begin(), perm.end(), 0);
        std::uint64_t best = ~std::uint64_t{0};
        do {
            std::uint64_t mask = 0;
            int index = 0;
            for (int i = 0; i < g.n; ++i)
                for (int j = i + 1; j < g.n; ++j, ++index)
                    if (g.has_edge(perm[i], perm[j]))
                        mask |= std::uint64_t{1} << index;
            best = std::min(best, mask);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    }

    auto components(const Graph & g) -> std::vector<std::vector<int>>
    {
        std::vector<int> label(g.n, -1);
        std::vector<std::vector<int>> out;
        for (int s = 0; s < g.n; ++s) {
            if (label[s] >= 0)
                continue;
            out.emplace_back();
            std::deque<int> q{s};
            label[s] = static_cast<int>(out.size()) - 1;
            while (! q.empty()) {
                int u = q.front();
                q.pop_front();
                out.back().push_back(u);
                for (int w : g.adj[u])
                    if (label[w] < 0) {
                        label[w] = label[s];
                        q.push_back(w);
                    }
            }
            std::sort(out.back().begin(), out.back().end());
        }
        return out;
    }
}
