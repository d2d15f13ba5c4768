#include "vmr/classifier.hpp"
#include "vmr/canonical.hpp"
#include "vmr/codec.hpp"
#include "vmr/invariants.hpp"

#include <omp.h>

#include <limits>
#include <sstream>

namespace vmr
{
    auto to_string(Phase p) -> std::string_view
    {
        switch (p) {
            case Phase::P1: return "P1";
            case Phase::P2: return "P2";
            case Phase::P3: return "P3";
            case Phase::P3Budgeted: return "P3_BUDGETED";
        }
        return "?";
    }

    namespace
    {
        struct Verdict
        {
            Phase phase = Phase::P1;
            std::int64_t explored = 0;
            int max_alpha = 0;
        };

        auto saturating_product(std::int64_t a, std::int64_t b) -> std::int64_t
        {
            if (a != 0 && b > std::numeric_limits<std::int64_t>::max() / a)
                return std::numeric_limits<std::int64_t>::max();
            return a * b;
        }

        /// The orbit of a disconnected graph is the product of its
        /// components' orbits, and beta adds up over components.
        auto decide_by_components(const Graph & g, int k, Budget budget) -> std::optional<Verdict>
        {
            const auto parts = components(g);
            if (parts.size() < 2)
                return std::nullopt;
            int total_beta = 0;
            std::int64_t visited = 0, product = 1;
            for (auto part : parts) {
                const auto scan = beta_scan(induced_subgraph(g, part), budget);
                if (scan.truncated)
                    return std::nullopt;
                total_beta += scan.beta;
                visited += scan.orbit_size;
                product = saturating_product(product, scan.orbit_size);
            }
            if (total_beta >= k)
                return Verdict{Phase::P2, visited, total_beta};
            return Verdict{Phase::P3, product, total_beta};
        }

        auto decide(const Graph & g, int k, const ClassifyOptions & options) -> Verdict
        {
            if (has_independent_set(g, k))
                return {Phase::P1, 0, independence_number(g)};
            if (options.fast_path_disconnected)
                if (auto v = decide_by_components(g, k, options.budget))
                    return *v;
            const auto s = orbit_search(g, k, options.budget);
            switch (s.outcome) {
                case Outcome::Found: return {Phase::P2, s.explored, s.max_alpha_seen};
                case Outcome::Exhausted: return {Phase::P3, s.explored, s.max_alpha_seen};
                case Outcome::Budget: return {Phase::P3Budgeted, s.explored, s.max_alpha_seen};
            }
            throw std::logic_error("unknown orbit outcome");
        }

        auto is_phase3(Phase p) -> bool
        {
            return p == Phase::P3 || p == Phase::P3Budgeted;
        }
    }

    auto classify_one(const Graph & g, int k, const ClassifyOptions & options) -> PhaseRecord
    {
        const auto v = decide(g, k, options);
        return {encode_graph6(g), v.phase, v.explored, v.max_alpha};
    }

    void PhaseCounts::add(int order, Phase phase)
    {
        if (total == 0)
            n = order;
        else if (n != order)
            n = -1;
        ++total;
        switch (phase) {
            case Phase::P1: ++p1; break;
            case Phase::P2: ++p2; break;
            case Phase::P3: ++p3; break;
            case Phase::P3Budgeted: ++p3_budgeted; break;
        }
    }

    auto tsv_header() -> std::string
    {
        return "n\tk\tbudget\ttotal\tp1\tp2\tp3\tp3_budgeted";
    }

    auto to_tsv(const PhaseCounts & c) -> std::string
    {
        std::ostringstream s;
        s << c.n << '\t' << c.k << '\t' << (c.budget ? std::to_string(*c.budget) : "none") << '\t' << c.total << '\t'
          << c.p1 << '\t' << c.p2 << '\t' << c.p3 << '\t' << c.p3_budgeted;
        return s.str();
    }

    auto to_text(const PhaseCounts & c) -> std::string
    {
        std::ostringstream s;
        s << "n=" << c.n << '\n'
          << "k=" << c.k << '\n'
          << "budget=" << (c.budget ? std::to_string(*c.budget) : "none") << '\n'
          << "total=" << c.total << '\n'
          << "p1=" << c.p1 << '\n'
          << "p2=" << c.p2 << '\n'
          << "p3=" << c.p3 << '\n'
          << "p3_budgeted=" << c.p3_budgeted << '\n'
          << "p3_total=" << c.p3_total() << '\n';
        return s.str();
    }

    struct Graph6Source::Imp
    {
        Graph6Reader reader;
    };

    Graph6Source::Graph6Source(std::istream & in) :
        _imp(std::make_unique<Imp>(Imp{Graph6Reader(in)}))
    {
    }

    Graph6Source::~Graph6Source() = default;

    auto Graph6Source::fill(std::vector<Graph> & out, std::size_t max) -> std::size_t
    {
        std::size_t added = 0;
        while (added < max) {
            auto entry = _imp->reader.next();
            if (! entry)
                break;
            out.push_back(entry->graph);
            ++added;
        }
        return added;
    }

    GeneratedSource::GeneratedSource(int n, std::vector<std::uint64_t> keys) :
        _n(n),
        _keys(std::move(keys))
    {
    }

    auto GeneratedSource::fill(std::vector<Graph> & out, std::size_t max) -> std::size_t
    {
        std::size_t added = 0;
        for (; added < max && _next < _keys.size(); ++added)
            out.push_back(unpack_upper(_n, _keys[_next++]));
        return added;
    }

    VectorSource::VectorSource(std::vector<Graph> graphs) :
        _graphs(std::move(graphs))
    {
    }

    auto VectorSource::fill(std::vector<Graph> & out, std::size_t max) -> std::size_t
    {
        std::size_t added = 0;
        for (; added < max && _next < _graphs.size(); ++added)
            out.push_back(_graphs[_next++]);
        return added;
    }

    namespace
    {
        template <typename ClassifyChunk>
        auto run_stream(GraphSource & source, const StreamOptions & options, const Phase3Sink & sink,
                ClassifyChunk && classify_chunk) -> PhaseCounts
        {
            PhaseCounts counts;
            counts.k = options.k;
            counts.budget = options.classify.budget;
            const std::size_t chunk = std::max<std::size_t>(options.chunk, 1);
            std::vector<Graph> graphs;
            std::vector<Verdict> verdicts;
            while (true) {
                graphs.clear();
                if (source.fill(graphs, chunk) == 0)
                    break;
                verdicts.assign(graphs.size(), Verdict{});
                classify_chunk(graphs, verdicts);
                for (std::size_t i = 0; i < graphs.size(); ++i) {
                    counts.add(graphs[i].order(), verdicts[i].phase);
                    if (sink && is_phase3(verdicts[i].phase))
                        sink(PhaseRecord{encode_graph6(graphs[i]), verdicts[i].phase, verdicts[i].explored, verdicts[i].max_alpha});
                }
            }
            return counts;
        }
    }

    auto classify_stream(GraphSource & source, const StreamOptions & options, const Phase3Sink & sink) -> PhaseCounts
    {
        if (! options.parallel)
            return classify_stream_serial(source, options, sink);
        const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
        return run_stream(source, options, sink, [&](const std::vector<Graph> & graphs, std::vector<Verdict> & verdicts) {
            const auto count = static_cast<std::int64_t>(graphs.size());
#pragma omp parallel for schedule(dynamic, 32) num_threads(threads)
            for (std::int64_t i = 0; i < count; ++i)
                verdicts[i] = decide(graphs[i], options.k, options.classify);
        });
    }

    auto classify_stream_serial(GraphSource & source, const StreamOptions & options, const Phase3Sink & sink) -> PhaseCounts
    {
        return run_stream(source, options, sink, [&](const std::vector<Graph> & graphs, std::vector<Verdict> & verdicts) {
            for (std::size_t i = 0; i < graphs.size(); ++i)
                verdicts[i] = decide(graphs[i], options.k, options.classify);
        });
    }

    auto ramsey_value_search(int k, int n_start, const CensusProvider & census, const StreamOptions & options) -> int
    {
        if (k < 1)
            throw std::invalid_argument("k must be positive");
        StreamOptions exact = options;
        exact.k = k;
        exact.classify.budget = std::nullopt;
        for (int n = std::max(n_start, 1);; ++n) {
            auto source = census(n);
            if (! source)
                throw std::runtime_error("no census available for order " + std::to_string(n));
            if (classify_stream(*source, exact).p3_total() == 0)
                return n;
        }
    }
}
