#pragma once

#include "vmr/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vmr
{
    struct ObstructionPattern
    {
        std::string name;
        Graph graph;
    };

    /// W_k is a hub joined to a k-cycle, so W5 has 6 vertices and W7 has 8.
    auto wheel(int spokes) -> Graph;
    /// C6 on 0..5 with a hub 6 adjacent to 0, 2 and 4.
    auto bipartite_wheel3() -> Graph;
    auto petersen() -> Graph;

    /// W5, BW3, W7: the circle-graph obstructions under local complementation.
    auto circle_obstructions() -> std::vector<ObstructionPattern>;

    /// An induced copy of pattern in host: mapping[i] is the host vertex
    /// playing pattern vertex i.
    struct InducedMatch
    {
        std::vector<int> mapping;
        VertexSet vertices;
    };

    auto find_induced_subgraph(const Graph & host, const Graph & pattern) -> std::optional<InducedMatch>;

    struct PatternHit
    {
        /// Position of the member in breadth-first orbit order.
        std::int64_t member_index = 0;
        Graph member;
        InducedMatch match;
    };

    /// First orbit member, in BFS order, containing the pattern as an induced subgraph.
    auto find_induced_pattern_in_orbit(const Graph & g, const ObstructionPattern & p) -> std::optional<PatternHit>;

    /// Groups graph6 codes whose graphs are LC-equivalent up to
    /// isomorphism. Classes appear in order of first occurrence.
    struct LCClassPartition
    {
        std::vector<std::vector<std::string>> classes;
    };

    auto lc_class_partition(const std::vector<std::string> & codes) -> LCClassPartition;

    struct LabelledCode
    {
        std::string label;
        std::string code;
    };

    /// The six 10-vertex graphs avoiding E_4 as a vertex-minor, G1..G6.
    auto extremal_codes() -> const std::vector<LabelledCode> &;

    /// Label of the extremal graph isomorphic to g, if any.
    auto match_extremal(const Graph & g) -> std::optional<std::string>;

    /// Names from a fixed catalog matching g up to isomorphism.
    auto identify_named(const Graph & g) -> std::vector<std::string>;
}
