#pragma once

#include "vmr/graph.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace vmr
{
    /// Orders at or above this count as long runs (12,005,168 classes at 10).
    inline constexpr int kLongRunOrder = 10;

    struct GeneratorOptions
    {
        bool parallel = true;
        /// Zero keeps the OpenMP default.
        int threads = 0;
        /// Required for n >= kLongRunOrder.
        bool long_run = false;
    };

    class LongRunError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /**
     * One canonical representative per isomorphism class on n vertices,
     * built by extending every class on n-1 vertices with each possible
     * neighbourhood of a new vertex and keeping the first copy of each
     * canonical form. Returned as packed upper-triangle keys of the
     * canonical graphs, ascending.
     */
    auto generate_keys(int n, const GeneratorOptions & options = {}) -> std::vector<std::uint64_t>;

    /// Serial reference for generate_keys.
    auto generate_keys_serial(int n) -> std::vector<std::uint64_t>;

    auto generate_all(int n, const GeneratorOptions & options = {}) -> std::vector<Graph>;
    auto generate_connected(int n, const GeneratorOptions & options = {}) -> std::vector<Graph>;
}
