#pragma once

#include "vmr/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vmr
{
    /// Maximum number of distinct labelled graphs dequeued and tested.
    using Budget = std::optional<std::int64_t>;

    enum class Outcome
    {
        Found,
        Exhausted,
        Budget
    };

    auto to_string(Outcome o) -> std::string_view;

    struct OrbitSummary
    {
        Outcome outcome = Outcome::Exhausted;
        std::int64_t explored = 0;
        /// Exact maximum of alpha over the dequeued members.
        int max_alpha_seen = 0;
        std::optional<Graph> witness;
    };

    struct OrbitListing
    {
        std::vector<Graph> members;
        bool truncated = false;
    };

    /// Breadth-first enumeration of the labelled LC orbit. Members appear in
    /// dequeue order: FIFO, neighbours generated by ascending vertex.
    auto enumerate_orbit(const Graph & g, Budget budget = std::nullopt) -> OrbitListing;

    /// Same traversal, stopping at the first member (root included) with
    /// an independent set of size k.
    auto orbit_search(const Graph & g, int k, Budget budget = std::nullopt) -> OrbitSummary;

    /// Maximum independence number over the whole LC orbit.
    auto beta(const Graph & g) -> int;

    struct BetaScan
    {
        int beta = 0;
        std::int64_t orbit_size = 0;
        /// Budget reached before the orbit closed; beta is then a lower bound.
        bool truncated = false;
    };

    auto beta_scan(const Graph & g, Budget budget) -> BetaScan;

    /// Sum of beta over connected components.
    auto beta_disconnected(const Graph & g) -> int;

    class CertificateError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Negative certificate: the root code, the target k, and facts about
    /// the fully enumerated orbit that anyone can recompute.
    struct Certificate
    {
        std::string code;
        int k = 0;
        std::int64_t orbit_size = 0;
        int max_alpha = 0;
        /// SHA-256 (hex) over member row tuples sorted ascending, each row
        /// serialised as 8 little-endian bytes.
        std::string digest;

        auto operator==(const Certificate &) const -> bool = default;
    };

    auto orbit_digest(std::vector<Graph> members) -> std::string;

    /// Throws CertificateError when some orbit member has alpha >= k.
    auto make_certificate(std::string_view code, int k) -> Certificate;

    struct Verification
    {
        bool ok = false;
        /// First field that did not match, empty when ok.
        std::string mismatch;
        std::string detail;
    };

    auto verify_certificate(const Certificate & c) -> Verification;

    void write_certificate(std::ostream & out, const Certificate & c);
    /// key=value lines; throws CertificateError on missing or malformed keys.
    auto read_certificate(std::istream & in) -> Certificate;
}
