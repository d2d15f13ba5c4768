#include "vmr/bounds.hpp"
#include "vmr/codec.hpp"
#include "vmr/orbit.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace vmr
{
    namespace
    {
        const long double kLog2Of3 = std::log2(3.0L);

        /// One of the six extremal 10-vertex graphs for k = 4.
        constexpr const char * kExtremalBlock = "ICQ`fm}~w";

        auto known_value(int k) -> std::optional<int>
        {
            switch (k) {
                case 2: return 3;
                case 3: return 7;
                case 4: return 11;
                default: return std::nullopt;
            }
        }
    }

    BlockSpec::BlockSpec(Graph g) :
        _graph(std::move(g)),
        _beta(beta_disconnected(_graph))
    {
    }

    auto building_block_bound(const std::vector<BlockSpec> & blocks, int k) -> std::optional<int>
    {
        int total_beta = 0, total_order = 0;
        for (const auto & b : blocks) {
            total_beta += b.beta();
            total_order += b.graph().order();
        }
        if (total_beta > k - 1)
            return std::nullopt;
        return total_order + 1;
    }

    auto corollary_bound(int k) -> int
    {
        if (k < 2)
            throw std::invalid_argument("corollary bound needs k >= 2");
        static constexpr int remainder_order[] = {0, 2, 6};
        const int q = (k - 1) / 3, r = (k - 1) % 3;
        return 10 * q + remainder_order[r] + 1;
    }

    auto corollary_blocks(int k) -> std::vector<BlockSpec>
    {
        if (k < 2)
            throw std::invalid_argument("corollary bound needs k >= 2");
        static const BlockSpec extremal(decode_graph6(kExtremalBlock));
        static const BlockSpec edge(Graph::complete(2));
        static const BlockSpec prism(complement(Graph::cycle(6)));

        std::vector<BlockSpec> blocks;
        const int q = (k - 1) / 3, r = (k - 1) % 3;
        for (int i = 0; i < q; ++i)
            blocks.push_back(extremal);
        if (r == 1)
            blocks.push_back(edge);
        if (r == 2)
            blocks.push_back(prism);
        return blocks;
    }

    auto asymptotic_leading(int k) -> int
    {
        const long double exact = static_cast<long double>(k) * k / (2 * kLog2Of3);
        const double coarse = static_cast<double>(k) * k / (2 * static_cast<double>(kLog2Of3));
        const auto floor_exact = static_cast<int>(std::floor(exact));
        if (floor_exact != static_cast<int>(std::floor(coarse)))
            throw std::runtime_error("floor of k^2/(2 log2 3) is not stable at k=" + std::to_string(k));
        return floor_exact;
    }

    auto bound_table(int k_max) -> std::vector<BoundRow>
    {
        if (k_max < 2)
            throw std::invalid_argument("bound table needs k_max >= 2");
        if (k_max > 62)
            throw std::invalid_argument("bound table supports k_max <= 62");
        std::vector<BoundRow> rows;
        for (int k = 2; k <= k_max; ++k)
            rows.push_back({k, corollary_bound(k), (std::int64_t{1} << k) - 1, asymptotic_leading(k), known_value(k)});
        return rows;
    }

    auto bound_table_tsv(const std::vector<BoundRow> & rows) -> std::string
    {
        std::ostringstream s;
        s << "k\texplicit_lower\tleading_term\tupper_2k\tknown\tstatus\n";
        for (const auto & r : rows) {
            s << r.k << '\t' << r.explicit_lower << '\t' << r.asymptotic_leading << '\t' << r.upper << '\t'
              << (r.known_value ? std::to_string(*r.known_value) : "-") << '\t'
              << (r.known_value ? (*r.known_value == r.explicit_lower ? "tight" : "known") : "new") << '\n';
        }
        return s.str();
    }
}
