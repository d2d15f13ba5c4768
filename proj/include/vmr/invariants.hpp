#pragma once

#include "vmr/graph.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace vmr
{
    /// Distance/girth value standing for "no finite value".
    inline constexpr int kInfinity = std::numeric_limits<int>::max();

    auto format_extended(int value) -> std::string;

    /// True iff the rows contain an independent set of size k. Branches on
    /// the lowest available vertex and stops at the first witness.
    auto has_independent_set(std::span<const Row> rows, int k) -> bool;
    auto has_independent_set(const Graph & g, int k) -> bool;

    auto independence_number(std::span<const Row> rows) -> int;
    auto independence_number(const Graph & g) -> int;

    /// One maximum independent set.
    auto maximum_independent_set(const Graph & g) -> VertexSet;

    auto clique_number(const Graph & g) -> int;
    auto chromatic_number(const Graph & g) -> int;
    auto degree_sequence(const Graph & g) -> std::vector<int>;
    auto diameter(const Graph & g) -> int;
    auto girth(const Graph & g) -> int;
    auto components(const Graph & g) -> std::vector<VertexSet>;
    auto is_connected(const Graph & g) -> bool;

    /// Characteristic polynomial det(xI - A), coefficients in ascending degree.
    struct IntPolynomial
    {
        std::vector<std::int64_t> coefficients;

        auto degree() const -> int { return static_cast<int>(coefficients.size()) - 1; }
        auto operator==(const IntPolynomial &) const -> bool = default;
    };

    inline constexpr int kMaxCharPolyOrder = 16;

    auto char_poly(const Graph & g) -> IntPolynomial;
    auto to_string(const IntPolynomial & p) -> std::string;

    struct InvariantRecord
    {
        int edge_count = 0;
        int alpha = 0;
        int omega = 0;
        int chi = 0;
        int diameter = 0;
        std::vector<int> degree_sequence;
        int girth = 0;
        bool connected = false;
    };

    auto compute_invariants(const Graph & g) -> InvariantRecord;

    /// "[9,7^2,5^5,3^2]" style, grouping equal runs.
    auto format_degree_sequence(const std::vector<int> & degrees) -> std::string;
}
