// Serial reference vs OpenMP kernels for generation and census classification.
//
//   vmr_bench [--n N] [--k K] [--budget B] [--threads T] [--repeat R]

#include "vmr/classifier.hpp"
#include "vmr/generator.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

using namespace vmr;

namespace
{
    auto best_of(int repeat, const std::function<void()> & body) -> double
    {
        double best = 1e300;
        for (int i = 0; i < repeat; ++i) {
            const auto start = std::chrono::steady_clock::now();
            body();
            best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
        }
        return best;
    }

    void report(const std::string & name, double serial, double parallel, bool agree)
    {
        std::cout << name << "\tserial " << serial << " s\tparallel " << parallel << " s\tspeedup " << serial / parallel
                  << "\t" << (agree ? "agree" : "DISAGREE") << '\n';
    }
}

int main(int argc, char ** argv)
{
    int n = 8, k = 4, threads = 0, repeat = 3;
    Budget budget;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string arg = argv[i];
        const long value = std::atol(argv[i + 1]);
        if (arg == "--n")
            n = static_cast<int>(value);
        else if (arg == "--k")
            k = static_cast<int>(value);
        else if (arg == "--budget")
            budget = value;
        else if (arg == "--threads")
            threads = static_cast<int>(value);
        else if (arg == "--repeat")
            repeat = static_cast<int>(value);
        else {
            std::cerr << "unknown option " << arg << '\n';
            return 2;
        }
    }
    std::cout << "n=" << n << " k=" << k << " threads=" << (threads ? threads : omp_get_max_threads()) << '\n';

    std::vector<std::uint64_t> serial_keys, parallel_keys;
    const double gen_serial = best_of(repeat, [&] { serial_keys = generate_keys_serial(n); });
    const double gen_parallel = best_of(repeat, [&] { parallel_keys = generate_keys(n, {.threads = threads}); });
    report("generate", gen_serial, gen_parallel, serial_keys == parallel_keys);

    PhaseCounts serial_counts, parallel_counts;
    StreamOptions options{.k = k, .classify = {.budget = budget}, .threads = threads};
    const double cls_serial = best_of(repeat, [&] {
        GeneratedSource source(n, serial_keys);
        serial_counts = classify_stream_serial(source, options);
    });
    const double cls_parallel = best_of(repeat, [&] {
        GeneratedSource source(n, serial_keys);
        parallel_counts = classify_stream(source, options);
    });
    report("classify", cls_serial, cls_parallel, serial_counts == parallel_counts);
    std::cout << tsv_header() << '\n' << to_tsv(parallel_counts) << '\n';
    return serial_counts == parallel_counts && serial_keys == parallel_keys ? 0 : 1;
}
