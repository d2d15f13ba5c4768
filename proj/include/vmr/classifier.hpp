#pragma once

#include "vmr/graph.hpp"
#include "vmr/orbit.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace vmr
{
    /**
     * P1: alpha >= k outright. P2: some orbit member has alpha >= k.
     * P3: the whole orbit was explored and every member has alpha < k.
     * P3Budgeted: the budget ran out first with no witness.
     */
    enum class Phase
    {
        P1,
        P2,
        P3,
        P3Budgeted
    };

    auto to_string(Phase p) -> std::string_view;

    struct PhaseRecord
    {
        std::string code;
        Phase phase = Phase::P1;
        std::int64_t explored = 0;
        int max_alpha = 0;

        auto operator==(const PhaseRecord &) const -> bool = default;
    };

    struct ClassifyOptions
    {
        Budget budget;
        /// Decide disconnected graphs from per-component orbits.
        bool fast_path_disconnected = false;
    };

    auto classify_one(const Graph & g, int k, const ClassifyOptions & options = {}) -> PhaseRecord;

    struct PhaseCounts
    {
        /// Order of the classified graphs; -1 when the input mixes orders.
        int n = 0;
        int k = 0;
        Budget budget;
        std::int64_t total = 0;
        std::int64_t p1 = 0;
        std::int64_t p2 = 0;
        std::int64_t p3 = 0;
        std::int64_t p3_budgeted = 0;

        auto p3_total() const -> std::int64_t { return p3 + p3_budgeted; }
        void add(int order, Phase phase);

        auto operator==(const PhaseCounts &) const -> bool = default;
    };

    auto tsv_header() -> std::string;
    auto to_tsv(const PhaseCounts & c) -> std::string;
    auto to_text(const PhaseCounts & c) -> std::string;

    /// Pull-based supply of census graphs.
    class GraphSource
    {
    public:
        virtual ~GraphSource() = default;
        /// Appends up to max graphs; returns how many were appended.
        virtual auto fill(std::vector<Graph> & out, std::size_t max) -> std::size_t = 0;
    };

    /// graph6 lines from a stream; malformed lines raise InputError.
    class Graph6Source : public GraphSource
    {
    public:
        explicit Graph6Source(std::istream & in);
        ~Graph6Source() override;
        auto fill(std::vector<Graph> & out, std::size_t max) -> std::size_t override;

    private:
        struct Imp;
        std::unique_ptr<Imp> _imp;
    };

    /// All isomorphism classes of one order from the internal generator.
    class GeneratedSource : public GraphSource
    {
    public:
        GeneratedSource(int n, std::vector<std::uint64_t> keys);
        auto fill(std::vector<Graph> & out, std::size_t max) -> std::size_t override;

    private:
        int _n;
        std::vector<std::uint64_t> _keys;
        std::size_t _next = 0;
    };

    class VectorSource : public GraphSource
    {
    public:
        explicit VectorSource(std::vector<Graph> graphs);
        auto fill(std::vector<Graph> & out, std::size_t max) -> std::size_t override;

    private:
        std::vector<Graph> _graphs;
        std::size_t _next = 0;
    };

    struct StreamOptions
    {
        int k = 4;
        ClassifyOptions classify;
        bool parallel = true;
        /// Zero keeps the OpenMP default.
        int threads = 0;
        std::size_t chunk = 1 << 14;
    };

    /// Receives P3 and P3Budgeted records, in input order.
    using Phase3Sink = std::function<void(const PhaseRecord &)>;

    /// Counts are merged in input order, so results do not depend on the
    /// thread count or scheduling.
    auto classify_stream(GraphSource & source, const StreamOptions & options, const Phase3Sink & sink = {}) -> PhaseCounts;

    /// Serial reference for classify_stream.
    auto classify_stream_serial(GraphSource & source, const StreamOptions & options, const Phase3Sink & sink = {}) -> PhaseCounts;

    /// Supplies the complete census of one order, or nullptr if unavailable.
    using CensusProvider = std::function<std::unique_ptr<GraphSource>(int n)>;

    /// Smallest n >= n_start whose census has no P3 graph for k.
    auto ramsey_value_search(int k, int n_start, const CensusProvider & census, const StreamOptions & options = {}) -> int;
}
