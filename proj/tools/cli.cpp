#include "cli.hpp"

#include "vmr/bounds.hpp"
#include "vmr/canonical.hpp"
#include "vmr/classifier.hpp"
#include "vmr/codec.hpp"
#include "vmr/generator.hpp"
#include "vmr/invariants.hpp"
#include "vmr/orbit.hpp"
#include "vmr/structure.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace vmr::cli
{
    namespace
    {
        struct RunConfig
        {
            int k = 4;
            std::int64_t budget = 0;
            std::string input;
            int n_from_gen = 0;
            std::string format = "tsv";
            int threads = 0;
            std::string emit_phase3;
            bool long_run_ack = false;
            bool fast_path_disconnected = false;
            bool serial = false;

            int n = 0;
            bool connected = false;

            std::vector<std::string> codes;
            bool stats = false;
            bool list = false;
            std::string out_path;
            std::string construct;
            bool skip_orbit_columns = false;

            int k_max = 9;
        };

        auto optional_budget(std::int64_t b) -> Budget
        {
            return b > 0 ? Budget{b} : std::nullopt;
        }

        auto roman(std::size_t i) -> std::string
        {
            static const char * numerals[] = {"I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X"};
            return i < std::size(numerals) ? numerals[i] : std::to_string(i + 1);
        }

        /// Rejects a long census when the first graph shows its order.
        class GuardedSource : public GraphSource
        {
        public:
            GuardedSource(GraphSource & inner, bool ack) :
                _inner(inner),
                _ack(ack)
            {
            }

            auto fill(std::vector<Graph> & out, std::size_t max) -> std::size_t override
            {
                const auto before = out.size();
                const auto added = _inner.fill(out, max);
                if (! _checked && added > 0) {
                    _checked = true;
                    if (out[before].order() > kLongRunOrder && ! _ack)
                        throw LongRunError("classifying order " + std::to_string(out[before].order())
                                + " graphs is a long run; pass --long-run-ack");
                }
                return added;
            }

        private:
            GraphSource & _inner;
            bool _ack;
            bool _checked = false;
        };

        auto cmd_classify(const RunConfig & cfg, std::ostream & out, std::ostream & err) -> int
        {
            StreamOptions options;
            options.k = cfg.k;
            options.classify.budget = optional_budget(cfg.budget);
            options.classify.fast_path_disconnected = cfg.fast_path_disconnected;
            options.parallel = ! cfg.serial;
            options.threads = cfg.threads;

            std::ofstream phase3;
            if (! cfg.emit_phase3.empty()) {
                phase3.open(cfg.emit_phase3);
                if (! phase3) {
                    err << "cannot write " << cfg.emit_phase3 << '\n';
                    return kExitInput;
                }
            }
            Phase3Sink sink;
            if (phase3.is_open())
                sink = [&](const PhaseRecord & r) { phase3 << r.code << '\n'; };

            const auto start = std::chrono::steady_clock::now();
            PhaseCounts counts;
            if (cfg.n_from_gen > 0) {
                GeneratorOptions gen;
                gen.long_run = cfg.long_run_ack;
                gen.parallel = ! cfg.serial;
                gen.threads = cfg.threads;
                GeneratedSource source(cfg.n_from_gen, generate_keys(cfg.n_from_gen, gen));
                counts = classify_stream(source, options, sink);
            }
            else {
                std::ifstream file;
                std::istream * in = &std::cin;
                if (cfg.input != "-") {
                    file.open(cfg.input);
                    if (! file) {
                        err << "cannot read " << cfg.input << '\n';
                        return kExitInput;
                    }
                    in = &file;
                }
                Graph6Source raw(*in);
                GuardedSource source(raw, cfg.long_run_ack);
                counts = classify_stream(source, options, sink);
            }
            const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

            if (cfg.format == "text")
                out << to_text(counts);
            else
                out << tsv_header() << '\n' << to_tsv(counts) << '\n';
            err << "classified " << counts.total << " graphs in " << seconds << " s\n";
            return kExitOk;
        }

        auto cmd_orbit(const RunConfig & cfg, std::ostream & out) -> int
        {
            const Graph g = decode_graph6(cfg.codes.at(0));
            const auto budget = optional_budget(cfg.budget);
            if (cfg.list) {
                for (const auto & m : enumerate_orbit(g, budget).members)
                    out << encode_graph6(m) << '\n';
                return kExitOk;
            }
            out << "code\tk\toutcome\texplored\tmax_alpha\n";
            if (cfg.k > 0) {
                const auto s = orbit_search(g, cfg.k, budget);
                out << cfg.codes[0] << '\t' << cfg.k << '\t' << to_string(s.outcome) << '\t' << s.explored << '\t'
                    << s.max_alpha_seen << '\n';
            }
            else {
                const auto s = beta_scan(g, budget);
                out << cfg.codes[0] << "\t-\t" << (s.truncated ? "BUDGET" : "EXHAUSTED") << '\t' << s.orbit_size << '\t'
                    << s.beta << '\n';
            }
            return kExitOk;
        }

        auto cmd_certify(const RunConfig & cfg, std::ostream & out, std::ostream & err) -> int
        {
            Certificate c;
            try {
                c = make_certificate(cfg.codes.at(0), cfg.k);
            }
            catch (const CertificateError & e) {
                err << e.what() << '\n';
                return kExitFailed;
            }
            if (cfg.out_path.empty()) {
                write_certificate(out, c);
                return kExitOk;
            }
            std::ofstream file(cfg.out_path);
            if (! file) {
                err << "cannot write " << cfg.out_path << '\n';
                return kExitInput;
            }
            write_certificate(file, c);
            err << "wrote " << cfg.out_path << '\n';
            return kExitOk;
        }

        auto cmd_verify(const RunConfig & cfg, std::ostream & out, std::ostream & err) -> int
        {
            std::ifstream file(cfg.codes.at(0));
            if (! file) {
                err << "cannot read " << cfg.codes[0] << '\n';
                return kExitInput;
            }
            Certificate c;
            try {
                c = read_certificate(file);
            }
            catch (const CertificateError & e) {
                err << e.what() << '\n';
                return kExitInput;
            }
            const auto v = verify_certificate(c);
            if (v.ok) {
                out << "OK " << c.code << " orbit_size=" << c.orbit_size << " max_alpha=" << c.max_alpha << '\n';
                return kExitOk;
            }
            out << "MISMATCH " << v.mismatch << ": " << v.detail << '\n';
            return kExitFailed;
        }

        auto cmd_gen(const RunConfig & cfg, std::ostream & out) -> int
        {
            GeneratorOptions gen;
            gen.long_run = cfg.long_run_ack;
            gen.parallel = ! cfg.serial;
            gen.threads = cfg.threads;
            for (auto key : generate_keys(cfg.n, gen)) {
                const Graph g = unpack_upper(cfg.n, key);
                if (cfg.connected && ! is_connected(g))
                    continue;
                out << encode_graph6(g) << '\n';
            }
            return kExitOk;
        }

        auto constructed(const std::string & name) -> Graph
        {
            static const std::map<std::string, std::function<Graph()>> catalog{
                {"C5vC5", [] { return join(Graph::cycle(5), Graph::cycle(5)); }},
                {"C5+C5", [] { return disjoint_union(Graph::cycle(5), Graph::cycle(5)); }},
                {"co-C6", [] { return complement(Graph::cycle(6)); }},
                {"Petersen", [] { return petersen(); }},
                {"W5", [] { return wheel(5); }},
                {"W7", [] { return wheel(7); }},
                {"BW3", [] { return bipartite_wheel3(); }},
            };
            auto it = catalog.find(name);
            if (it == catalog.end())
                throw CLI::ValidationError("--construct", "unknown construction " + name);
            return it->second();
        }

        auto join_names(const std::vector<std::string> & names) -> std::string
        {
            std::string s;
            for (const auto & n : names)
                s += (s.empty() ? "" : ",") + n;
            return s.empty() ? "-" : s;
        }

        auto cmd_analyze(const RunConfig & cfg, std::ostream & out) -> int
        {
            std::vector<std::string> codes = cfg.codes;
            if (! cfg.construct.empty())
                codes.push_back(encode_graph6(constructed(cfg.construct)));

            std::map<std::string, std::string> class_of;
            if (! cfg.skip_orbit_columns) {
                const auto partition = lc_class_partition(codes);
                for (std::size_t i = 0; i < partition.classes.size(); ++i)
                    for (const auto & c : partition.classes[i])
                        class_of[c] = roman(i);
            }

            out << "code\tn\tedges\talpha\tomega\tchi\tdiam\tgirth\tdegree_sequence\tconnected\tnamed\textremal";
            if (! cfg.skip_orbit_columns)
                out << "\tlc_class\tW5\tBW3\tW7";
            out << '\n';
            for (const auto & code : codes) {
                const Graph g = decode_graph6(code);
                const auto r = compute_invariants(g);
                out << code << '\t' << g.order() << '\t' << r.edge_count << '\t' << r.alpha << '\t' << r.omega << '\t'
                    << r.chi << '\t' << format_extended(r.diameter) << '\t' << format_extended(r.girth) << '\t'
                    << format_degree_sequence(r.degree_sequence) << '\t' << (r.connected ? "yes" : "no") << '\t'
                    << join_names(identify_named(g)) << '\t' << match_extremal(g).value_or("-");
                if (! cfg.skip_orbit_columns) {
                    out << '\t' << class_of[code];
                    for (const auto & p : circle_obstructions()) {
                        const auto hit = find_induced_pattern_in_orbit(g, p);
                        out << '\t' << (hit ? "member:" + std::to_string(hit->member_index) : std::string("none"));
                    }
                }
                out << '\n';
            }
            return kExitOk;
        }

        auto cmd_bounds(const RunConfig & cfg, std::ostream & out) -> int
        {
            out << bound_table_tsv(bound_table(cfg.k_max));
            return kExitOk;
        }
    }

    auto run(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Vertex-minor Ramsey search: LC orbits, census classification, certificates"};
        app.require_subcommand(1);
        RunConfig cfg;

        auto add_threads = [&](CLI::App * sub) {
            sub->add_option("--threads", cfg.threads, "Worker threads (default: OpenMP default)")->check(CLI::PositiveNumber);
            sub->add_flag("--serial", cfg.serial, "Use the serial reference path");
        };

        auto * classify = app.add_subcommand("classify", "Three-phase classification of a graph census");
        classify->add_option("--k", cfg.k, "Target independent-set size")->required()->check(CLI::PositiveNumber);
        classify->add_option("--budget", cfg.budget, "Orbit-search budget (dequeued graphs)")->check(CLI::PositiveNumber);
        auto * input = classify->add_option("--input", cfg.input, "graph6 file, or - for standard input");
        auto * gen_input = classify->add_option("--n-from-gen", cfg.n_from_gen, "Classify every graph of this order from the internal generator")
                                   ->check(CLI::Range(1, kMaxPackedOrder));
        input->excludes(gen_input);
        classify->add_option("--format", cfg.format, "tsv or text")->check(CLI::IsMember({"tsv", "text"}));
        classify->add_option("--emit-phase3", cfg.emit_phase3, "Write Phase-3 codes to this file");
        classify->add_flag("--long-run-ack", cfg.long_run_ack, "Allow n=10 generation and n>=11 classification");
        classify->add_flag("--fast-path-disconnected", cfg.fast_path_disconnected, "Decide disconnected graphs per component");
        add_threads(classify);

        auto * orbit = app.add_subcommand("orbit", "Explore the LC orbit of one graph");
        orbit->add_option("code", cfg.codes, "graph6 code")->required()->expected(1);
        auto * stats = orbit->add_flag("--stats", cfg.stats, "Print orbit size and max alpha (default)");
        orbit->add_flag("--list", cfg.list, "Print every orbit member as graph6")->excludes(stats);
        orbit->add_option("--k", cfg.k, "Stop at the first member with alpha >= k")->check(CLI::PositiveNumber);
        orbit->add_option("--budget", cfg.budget, "Orbit budget")->check(CLI::PositiveNumber);

        auto * certify = app.add_subcommand("certify", "Write a negative certificate for one graph");
        certify->add_option("code", cfg.codes, "graph6 code")->required()->expected(1);
        certify->add_option("--k", cfg.k, "Target independent-set size")->check(CLI::PositiveNumber);
        certify->add_option("--out", cfg.out_path, "Certificate file (default: standard output)");

        auto * verify = app.add_subcommand("verify", "Recompute and check a certificate file");
        verify->add_option("file", cfg.codes, "Certificate file")->required()->expected(1);

        auto * gen = app.add_subcommand("gen", "Emit one graph6 line per isomorphism class");
        gen->add_option("--n", cfg.n, "Order")->required()->check(CLI::Range(1, kMaxPackedOrder));
        gen->add_flag("--connected", cfg.connected, "Connected graphs only");
        gen->add_flag("--long-run-ack", cfg.long_run_ack, "Allow n >= 10");
        add_threads(gen);

        auto * analyze = app.add_subcommand("analyze", "Invariants, named-graph matches, LC classes, obstructions");
        analyze->add_option("codes", cfg.codes, "graph6 codes");
        analyze->add_option("--construct", cfg.construct, "Also analyze a built-in construction (C5vC5, C5+C5, co-C6, Petersen, W5, W7, BW3)");
        analyze->add_flag("--no-orbit", cfg.skip_orbit_columns, "Skip LC-class and obstruction columns");

        auto * bounds = app.add_subcommand("bounds", "Lower-bound table");
        bounds->add_option("--k-max", cfg.k_max, "Largest k")->check(CLI::Range(2, 62));

        try {
            app.parse(argc, argv);
        }
        catch (const CLI::ParseError & e) {
            const int status = app.exit(e, out, err);
            return status == 0 ? kExitOk : kExitInput;
        }

        try {
            if (classify->parsed()) {
                if (cfg.input.empty() && cfg.n_from_gen == 0) {
                    err << "classify needs --input or --n-from-gen\n";
                    return kExitInput;
                }
                return cmd_classify(cfg, out, err);
            }
            if (orbit->parsed()) {
                if (orbit->count("--k") == 0)
                    cfg.k = 0;
                return cmd_orbit(cfg, out);
            }
            if (certify->parsed())
                return cmd_certify(cfg, out, err);
            if (verify->parsed())
                return cmd_verify(cfg, out, err);
            if (gen->parsed())
                return cmd_gen(cfg, out);
            if (analyze->parsed()) {
                if (cfg.codes.empty() && cfg.construct.empty()) {
                    err << "analyze needs graph6 codes or --construct\n";
                    return kExitInput;
                }
                return cmd_analyze(cfg, out);
            }
            if (bounds->parsed())
                return cmd_bounds(cfg, out);
        }
        catch (const InputError & e) {
            err << "input error: " << e.what() << '\n';
            return kExitInput;
        }
        catch (const Graph6Error & e) {
            err << "input error: " << e.what() << '\n';
            return kExitInput;
        }
        catch (const LongRunError & e) {
            err << e.what() << '\n';
            return kExitInput;
        }
        catch (const CLI::ValidationError & e) {
            err << e.what() << '\n';
            return kExitInput;
        }
        catch (const GraphError & e) {
            err << e.what() << '\n';
            return kExitInput;
        }
        return kExitInput;
    }
}
