#pragma once

#include "vmr/graph.hpp"

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vmr
{
    /// Largest order expressible with the single-byte graph6 size prefix.
    inline constexpr int kMaxGraph6Order = 62;

    class Graph6Error : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Strict graph6 (short form only). Rejects stray characters, wrong
    /// lengths and nonzero padding bits.
    auto decode_graph6(std::string_view code) -> Graph;
    auto encode_graph6(const Graph & g) -> std::string;

    /// Reads newline-separated graph6 codes, skipping blank lines and
    /// tolerating a trailing '\r'. Errors carry the 1-based line number.
    class Graph6Reader
    {
    public:
        explicit Graph6Reader(std::istream & in) :
            _in(in)
        {
        }

        struct Entry
        {
            std::string code;
            Graph graph;
            long line = 0;
        };

        auto next() -> std::optional<Entry>;
        auto line() const -> long { return _line; }

    private:
        std::istream & _in;
        long _line = 0;
    };

    class InputError : public std::runtime_error
    {
    public:
        InputError(long line, const std::string & what) :
            std::runtime_error("line " + std::to_string(line) + ": " + what),
            _line(line)
        {
        }

        auto line() const -> long { return _line; }

    private:
        long _line;
    };
}
