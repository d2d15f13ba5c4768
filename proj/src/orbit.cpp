#include "vmr/orbit.hpp"
#include "vmr/canonical.hpp"
#include "vmr/codec.hpp"
#include "vmr/invariants.hpp"

#include <absl/container/flat_hash_set.h>
#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <istream>
#include <map>
#include <ostream>

namespace vmr
{
    auto to_string(Outcome o) -> std::string_view
    {
        switch (o) {
            case Outcome::Found: return "FOUND";
            case Outcome::Exhausted: return "EXHAUSTED";
            case Outcome::Budget: return "BUDGET";
        }
        return "?";
    }

    namespace
    {
        struct PackedKey
        {
            using Type = std::uint64_t;
            static auto make(std::span<const Row> rows) -> Type { return pack_upper(rows); }
        };

        struct WideKey
        {
            using Type = std::string;
            static auto make(std::span<const Row> rows) -> Type
            {
                return {reinterpret_cast<const char *>(rows.data()), rows.size_bytes()};
            }
        };

        struct WalkResult
        {
            std::int64_t explored = 0;
            bool stopped = false;
            bool truncated = false;
        };

        /// Reused per thread so repeated searches do not reallocate.
        template <typename Key>
        struct Workspace
        {
            absl::flat_hash_set<typename Key::Type> seen;
            std::vector<Row> queue;
        };

        template <typename Key, typename Visit>
        auto walk(const Graph & g, Budget budget, Visit && visit) -> WalkResult
        {
            thread_local Workspace<Key> ws;
            const int n = g.order();
            const auto width = static_cast<std::size_t>(n);
            ws.seen.clear();
            ws.queue.clear();
            ws.queue.insert(ws.queue.end(), g.rows().begin(), g.rows().end());
            ws.seen.insert(Key::make(g.rows()));

            WalkResult result;
            std::array<Row, kMaxVertices> next{};
            for (std::size_t head = 0; head < ws.queue.size(); head += width) {
                ++result.explored;
                {
                    std::span<const Row> current(ws.queue.data() + head, width);
                    if (! visit(current)) {
                        result.stopped = true;
                        return result;
                    }
                }
                for (int v = 0; v < n; ++v) {
                    // fewer than two neighbours: nothing to toggle
                    if (popcount(ws.queue[head + v]) < 2)
                        continue;
                    std::copy_n(ws.queue.begin() + head, width, next.begin());
                    std::span<Row> rows(next.data(), width);
                    local_complement_rows(rows, v);
                    if (ws.seen.insert(Key::make(rows)).second)
                        ws.queue.insert(ws.queue.end(), next.begin(), next.begin() + width);
                }
                if (budget && result.explored >= *budget && head + width < ws.queue.size()) {
                    result.truncated = true;
                    return result;
                }
            }
            return result;
        }

        template <typename Visit>
        auto walk_any(const Graph & g, Budget budget, Visit && visit) -> WalkResult
        {
            if (g.order() <= kMaxPackedOrder)
                return walk<PackedKey>(g, budget, visit);
            return walk<WideKey>(g, budget, visit);
        }
    }

    auto enumerate_orbit(const Graph & g, Budget budget) -> OrbitListing
    {
        OrbitListing out;
        auto r = walk_any(g, budget, [&](std::span<const Row> rows) {
            out.members.push_back(Graph::from_rows(rows));
            return true;
        });
        out.truncated = r.truncated;
        return out;
    }

    auto orbit_search(const Graph & g, int k, Budget budget) -> OrbitSummary
    {
        OrbitSummary s;
        std::span<const Row> hit;
        auto r = walk_any(g, budget, [&](std::span<const Row> rows) {
            while (s.max_alpha_seen < k && has_independent_set(rows, s.max_alpha_seen + 1))
                ++s.max_alpha_seen;
            if (s.max_alpha_seen >= k) {
                hit = rows;
                return false;
            }
            return true;
        });
        s.explored = r.explored;
        if (r.stopped) {
            s.outcome = Outcome::Found;
            s.witness = Graph::from_rows(hit);
            s.max_alpha_seen = independence_number(hit);
        }
        else
            s.outcome = r.truncated ? Outcome::Budget : Outcome::Exhausted;
        return s;
    }

    auto beta_scan(const Graph & g, Budget budget) -> BetaScan
    {
        BetaScan s;
        auto r = walk_any(g, budget, [&](std::span<const Row> rows) {
            while (has_independent_set(rows, s.beta + 1))
                ++s.beta;
            return true;
        });
        s.orbit_size = r.explored;
        s.truncated = r.truncated;
        return s;
    }

    auto beta(const Graph & g) -> int
    {
        return beta_scan(g, std::nullopt).beta;
    }

    auto beta_disconnected(const Graph & g) -> int
    {
        const auto parts = components(g);
        if (parts.size() <= 1)
            return beta(g);
        int total = 0;
        for (auto part : parts)
            total += beta(induced_subgraph(g, part));
        return total;
    }

    auto orbit_digest(std::vector<Graph> members) -> std::string
    {
        std::sort(members.begin(), members.end(), [](const Graph & a, const Graph & b) {
            return std::lexicographical_compare(a.rows().begin(), a.rows().end(), b.rows().begin(), b.rows().end());
        });

        std::string bytes;
        for (const auto & m : members)
            for (Row r : m.rows())
                for (int i = 0; i < 8; ++i)
                    bytes.push_back(static_cast<char>((r >> (8 * i)) & 0xff));

        std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
        unsigned int len = 0;
        if (! EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr))
            throw std::runtime_error("SHA-256 digest failed");

        static constexpr char hex[] = "0123456789abcdef";
        std::string out;
        for (unsigned int i = 0; i < len; ++i) {
            out.push_back(hex[md[i] >> 4]);
            out.push_back(hex[md[i] & 0xf]);
        }
        return out;
    }

    namespace
    {
        auto max_alpha_over(const std::vector<Graph> & members) -> int
        {
            int best = 0;
            for (const auto & m : members)
                while (has_independent_set(m, best + 1))
                    ++best;
            return best;
        }
    }

    auto make_certificate(std::string_view code, int k) -> Certificate
    {
        const Graph g = decode_graph6(code);
        auto listing = enumerate_orbit(g);
        Certificate c;
        c.code = std::string(code);
        c.k = k;
        c.orbit_size = static_cast<std::int64_t>(listing.members.size());
        c.max_alpha = max_alpha_over(listing.members);
        if (c.max_alpha >= k)
            throw CertificateError("orbit of " + c.code + " contains a member with alpha " + std::to_string(c.max_alpha)
                    + " >= " + std::to_string(k));
        c.digest = orbit_digest(std::move(listing.members));
        return c;
    }

    auto verify_certificate(const Certificate & c) -> Verification
    {
        Graph g;
        try {
            g = decode_graph6(c.code);
        }
        catch (const Graph6Error & e) {
            return {false, "code", e.what()};
        }
        auto listing = enumerate_orbit(g);
        const auto size = static_cast<std::int64_t>(listing.members.size());
        if (size != c.orbit_size)
            return {false, "orbit_size", "expected " + std::to_string(c.orbit_size) + ", recomputed " + std::to_string(size)};
        const int alpha = max_alpha_over(listing.members);
        if (alpha != c.max_alpha)
            return {false, "max_alpha", "expected " + std::to_string(c.max_alpha) + ", recomputed " + std::to_string(alpha)};
        if (alpha >= c.k)
            return {false, "k", "max_alpha " + std::to_string(alpha) + " is not below k=" + std::to_string(c.k)};
        const auto digest = orbit_digest(std::move(listing.members));
        if (digest != c.digest)
            return {false, "digest", "expected " + c.digest + ", recomputed " + digest};
        return {true, "", ""};
    }

    void write_certificate(std::ostream & out, const Certificate & c)
    {
        out << "code=" << c.code << '\n'
            << "k=" << c.k << '\n'
            << "orbit_size=" << c.orbit_size << '\n'
            << "max_alpha=" << c.max_alpha << '\n'
            << "digest=" << c.digest << '\n';
    }

    auto read_certificate(std::istream & in) -> Certificate
    {
        std::map<std::string, std::string> fields;
        std::string line;
        while (std::getline(in, line)) {
            if (! line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty() || line[0] == '#')
                continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw CertificateError("malformed certificate line: " + line);
            fields[line.substr(0, eq)] = line.substr(eq + 1);
        }

        auto take = [&](const std::string & key) -> const std::string & {
            auto it = fields.find(key);
            if (it == fields.end())
                throw CertificateError("certificate is missing '" + key + "'");
            return it->second;
        };
        auto number = [&](const std::string & key) -> std::int64_t {
            const auto & text = take(key);
            std::size_t used = 0;
            std::int64_t value = 0;
            try {
                value = std::stoll(text, &used);
            }
            catch (const std::exception &) {
                used = 0;
            }
            if (used == 0 || used != text.size())
                throw CertificateError("certificate field '" + key + "' is not an integer: " + text);
            return value;
        };

        Certificate c;
        c.code = take("code");
        c.k = static_cast<int>(number("k"));
        c.orbit_size = number("orbit_size");
        c.max_alpha = static_cast<int>(number("max_alpha"));
        c.digest = take("digest");
        return c;
    }
}
