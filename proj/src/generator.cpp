#include "vmr/generator.hpp"
#include "vmr/canonical.hpp"
#include "vmr/invariants.hpp"

#include <absl/container/flat_hash_set.h>
#include <omp.h>

#include <algorithm>

namespace vmr
{
    namespace
    {
        void check_order(int n, bool long_run)
        {
            if (n < 1 || n > kMaxPackedOrder)
                throw GraphError("generation supports orders 1.." + std::to_string(kMaxPackedOrder));
            if (n >= kLongRunOrder && ! long_run)
                throw LongRunError("generating order " + std::to_string(n) + " is a long run; acknowledge it explicitly");
        }

        /// Canonical keys of every one-vertex extension of parent.
        template <typename Sink>
        void extend(int n, std::uint64_t parent_key, Sink && sink)
        {
            const Graph parent = unpack_upper(n - 1, parent_key);
            std::array<Row, kMaxVertices> rows{};
            for (Row mask = 0; mask < bit(n - 1); ++mask) {
                std::copy(parent.rows().begin(), parent.rows().end(), rows.begin());
                rows[n - 1] = mask;
                for (Row rest = mask; rest; rest &= rest - 1)
                    rows[lowest(rest)] |= bit(n - 1);
                const Graph child = canonical_graph(Graph::from_rows(std::span<const Row>(rows.data(), n)));
                sink(pack_upper(child.rows()));
            }
        }

        auto sorted(const absl::flat_hash_set<std::uint64_t> & set) -> std::vector<std::uint64_t>
        {
            std::vector<std::uint64_t> out(set.begin(), set.end());
            std::sort(out.begin(), out.end());
            return out;
        }
    }

    auto generate_keys_serial(int n) -> std::vector<std::uint64_t>
    {
        check_order(n, true);
        std::vector<std::uint64_t> level{0};
        for (int m = 2; m <= n; ++m) {
            absl::flat_hash_set<std::uint64_t> seen;
            for (auto parent : level)
                extend(m, parent, [&](std::uint64_t key) { seen.insert(key); });
            level = sorted(seen);
        }
        return level;
    }

    auto generate_keys(int n, const GeneratorOptions & options) -> std::vector<std::uint64_t>
    {
        check_order(n, options.long_run);
        if (! options.parallel)
            return generate_keys_serial(n);

        const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
        std::vector<std::uint64_t> level{0};
        for (int m = 2; m <= n; ++m) {
            std::vector<absl::flat_hash_set<std::uint64_t>> shards(threads);
            const auto count = static_cast<std::int64_t>(level.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
            for (std::int64_t i = 0; i < count; ++i) {
                auto & local = shards[omp_get_thread_num()];
                extend(m, level[i], [&](std::uint64_t key) { local.insert(key); });
            }
            for (std::size_t t = 1; t < shards.size(); ++t) {
                shards[0].insert(shards[t].begin(), shards[t].end());
                shards[t] = {};
            }
            level = sorted(shards[0]);
        }
        return level;
    }

    auto generate_all(int n, const GeneratorOptions & options) -> std::vector<Graph>
    {
        std::vector<Graph> out;
        for (auto key : generate_keys(n, options))
            out.push_back(unpack_upper(n, key));
        return out;
    }

    auto generate_connected(int n, const GeneratorOptions & options) -> std::vector<Graph>
    {
        std::vector<Graph> out;
        for (auto key : generate_keys(n, options)) {
            Graph g = unpack_upper(n, key);
            if (is_connected(g))
                out.push_back(g);
        }
        return out;
    }
}
