#include "vmr/codec.hpp"

namespace vmr
{
    namespace
    {
        constexpr int kBias = 63;

        auto data_length(int n) -> std::size_t
        {
            const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
            return (bits + 5) / 6;
        }
    }

    auto decode_graph6(std::string_view code) -> Graph
    {
        if (code.empty())
            throw Graph6Error("empty graph6 code");
        for (char c : code)
            if (static_cast<unsigned char>(c) < kBias || static_cast<unsigned char>(c) > 126)
                throw Graph6Error("character out of graph6 range in '" + std::string(code) + "'");

        const int n = static_cast<unsigned char>(code[0]) - kBias;
        if (n > kMaxGraph6Order)
            throw Graph6Error("long-form graph6 sizes are not supported");
        if (n > kMaxVertices)
            throw Graph6Error("order " + std::to_string(n) + " exceeds capacity");
        if (code.size() != 1 + data_length(n))
            throw Graph6Error("wrong length for order " + std::to_string(n) + " in '" + std::string(code) + "'");

        // Bits run over the upper triangle column by column: (0,1), (0,2), (1,2), (0,3), ...
        Graph g(n);
        std::size_t k = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++k) {
                const int value = static_cast<unsigned char>(code[1 + k / 6]) - kBias;
                if ((value >> (5 - k % 6)) & 1)
                    g.add_edge(i, j);
            }
        if (k % 6 != 0) {
            const int value = static_cast<unsigned char>(code.back()) - kBias;
            if (value & ((1 << (6 - k % 6)) - 1))
                throw Graph6Error("nonzero padding bits in '" + std::string(code) + "'");
        }
        return g;
    }

    auto encode_graph6(const Graph & g) -> std::string
    {
        const int n = g.order();
        if (n > kMaxGraph6Order)
            throw Graph6Error("long-form graph6 sizes are not supported");
        std::string out(1 + data_length(n), static_cast<char>(kBias));
        out[0] = static_cast<char>(kBias + n);
        std::size_t k = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++k)
                if (g.adjacent(i, j))
                    out[1 + k / 6] = static_cast<char>(out[1 + k / 6] + (1 << (5 - k % 6)));
        return out;
    }

    auto Graph6Reader::next() -> std::optional<Entry>
    {
        std::string text;
        while (std::getline(_in, text)) {
            ++_line;
            if (! text.empty() && text.back() == '\r')
                text.pop_back();
            if (text.empty())
                continue;
            try {
                Graph g = decode_graph6(text);
                return Entry{std::move(text), g, _line};
            }
            catch (const std::invalid_argument & e) {
                throw InputError(_line, e.what());
            }
        }
        return std::nullopt;
    }
}
