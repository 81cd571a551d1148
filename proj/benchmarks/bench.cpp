// Timing comparison of the OpenMP kernels against their serial references.

#include <chrono>
#include <cstdio>
#include <functional>

#include "topoplan/blocks.hpp"
#include "topoplan/exact.hpp"
#include "topoplan/instance.hpp"
#include "topoplan/oracle.hpp"
#include "topoplan/parallel.hpp"

using namespace topoplan;
using Clock = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<void()>& fn) {
    auto start = Clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-34s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms);
}

}  // namespace

int main() {
    std::printf("workers: %d\n\n", resolve_threads(0));
    std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        GeneratorConfig config;
        config.t_max = 24;
        config.count_per_depth = {{1, 489}, {2, 5000}, {3, 10000}};
        config.availability_drop_rate = 0.5;
        config.seed = 1;
        auto instance = generate_instance(config);

        std::vector<BlockStats> serial_stats, parallel_stats;
        const double serial = time_ms([&] {
            serial_stats = compute_all_block_stats_serial(instance, 3);
        });
        const double parallel = time_ms([&] {
            parallel_stats = compute_all_block_stats(instance, 3);
        });
        row("block stats (24 steps, 15.5k topo)", serial, parallel);

        const double eval_serial = time_ms([&] {
            auto run = run_block_algorithm_serial(instance, 3, 5);
            std::printf("  (%zu records)\n", run.records.size());
        });
        const double eval_parallel = time_ms([&] { run_block_algorithm(instance, 3, 5); });
        row("record enumeration (d=3, s=5)", eval_serial, eval_parallel);
    }

    {
        GeneratorConfig config;
        config.t_max = 8;
        config.count_per_depth = {{1, 3}, {2, 3}};
        config.availability_drop_rate = 0.1;
        config.seed = 2;
        auto instance = generate_instance(config);

        const double serial = time_ms([&] { brute_force_fronts(instance, 2, 4, 3, {}, 1); });
        const double parallel = time_ms([&] { brute_force_fronts(instance, 2, 4, 3); });
        row("brute-force enumeration (8 steps)", serial, parallel);
    }
    return 0;
}
