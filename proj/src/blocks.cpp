#include "topoplan/blocks.hpp"

#include <algorithm>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "topoplan/errors.hpp"
#include "topoplan/parallel.hpp"

namespace topoplan {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::vector<Block> enumerate_blocks(int t_max) {
    if (t_max < 1) throw ValidationError("t_max must be >= 1");
    std::vector<Block> blocks;
    blocks.reserve(static_cast<std::size_t>(t_max) * (t_max + 1) / 2);
    for (int t_s = 0; t_s < t_max; ++t_s)
        for (int t_e = t_s; t_e < t_max; ++t_e) blocks.push_back({t_s, t_e});
    return blocks;
}

std::vector<BlockConfiguration> enumerate_configurations(int t_max, int l) {
    if (t_max < 1) throw ValidationError("t_max must be >= 1");
    if (l < 0 || l > t_max - 1)
        throw ValidationError("switch count " + std::to_string(l) + " outside 0.." +
                              std::to_string(t_max - 1));

    // Cut positions are the l block starts drawn from 1..t_max-1, lexicographic.
    std::vector<BlockConfiguration> configs;
    std::vector<int> cuts(l);
    for (int i = 0; i < l; ++i) cuts[i] = i + 1;
    while (true) {
        BlockConfiguration config;
        int start = 0;
        for (int cut : cuts) {
            config.blocks.push_back({start, cut - 1});
            start = cut;
        }
        config.blocks.push_back({start, t_max - 1});
        configs.push_back(std::move(config));

        int i = l - 1;
        while (i >= 0 && cuts[i] == t_max - 1 - (l - 1 - i)) --i;
        if (i < 0) break;
        ++cuts[i];
        for (int j = i + 1; j < l; ++j) cuts[j] = cuts[j - 1] + 1;
    }
    return configs;
}

std::vector<ReferenceAssignment> enumerate_reference_assignments(const BlockConfiguration& config) {
    const int n = static_cast<int>(config.blocks.size());
    if (n > 30) throw ValidationError("too many blocks for subset enumeration");
    std::vector<ReferenceAssignment> assignments;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (mask & (mask << 1)) continue;  // adjacent blocks selected
        ReferenceAssignment assignment;
        for (int j = 0; j < n; ++j)
            if ((mask >> j) & 1u) assignment.ref_blocks.push_back(j);
        assignments.push_back(std::move(assignment));
    }
    return assignments;
}

BlockStats compute_block_stats(const Instance& instance, Block block, int d_max) {
    if (block.t_s < 0 || block.t_e >= instance.t_max() || block.t_s > block.t_e)
        throw ValidationError("block outside horizon");
    if (d_max < 0) throw ValidationError("d_max must be >= 0");

    BlockStats stats;
    stats.block = block;
    stats.ref_lf1 = -kInf;
    for (int t = block.t_s; t <= block.t_e; ++t)
        stats.ref_lf1 = std::max(stats.ref_lf1, instance.lf1(instance.reference_id(), t));

    // min over exact depth first, then prefix-min for depth <= d
    std::vector<double> best_exact(d_max + 1, kInf);
    for (TopologyId id : instance.available_at(block.t_s)) {
        if (id == instance.reference_id()) continue;
        int depth = instance.depth_of(id);
        if (depth > d_max) continue;
        double block_max = -kInf;
        bool everywhere = true;
        for (int t = block.t_s; t <= block.t_e; ++t) {
            if (!instance.available(id, t)) {
                everywhere = false;
                break;
            }
            block_max = std::max(block_max, instance.lf1(id, t));
        }
        if (everywhere) best_exact[depth] = std::min(best_exact[depth], block_max);
    }
    stats.best_nonref_lf1.assign(d_max + 1, kInf);
    double running = kInf;
    for (int d = 0; d <= d_max; ++d) {
        running = std::min(running, best_exact[d]);
        stats.best_nonref_lf1[d] = running;
    }
    return stats;
}

std::vector<TopologyId> admissible_topologies(const Instance& instance, Block block, int d,
                                              double threshold) {
    if (d < 0) throw ValidationError("depth bound must be >= 0");
    std::vector<TopologyId> result;
    for (TopologyId id : instance.available_at(block.t_s)) {
        if (id == instance.reference_id()) continue;
        if (instance.depth_of(id) > d) continue;
        double block_max = -kInf;
        bool everywhere = true;
        for (int t = block.t_s; t <= block.t_e; ++t) {
            if (!instance.available(id, t)) {
                everywhere = false;
                break;
            }
            block_max = std::max(block_max, instance.lf1(id, t));
        }
        if (everywhere && block_max <= threshold) result.push_back(id);
    }
    return result;
}

namespace {

// Extends blocks [t_s, t_s], [t_s, t_s+1], ... in one sweep. A topology is in
// G_B iff it appears at every step, so a pass over G_{t_e} with a last-seen
// marker maintains availability and the running max at once. The marker is
// poisoned on a continuity break: the buffers are reused across rows, and a
// stale value from another row could otherwise alias t_e - 1.
void stats_row(const Instance& instance, int t_s, int d_max, std::vector<double>& running_max,
               std::vector<int>& last_seen, std::vector<BlockStats>& out) {
    const int t_max = instance.t_max();
    const TopologyId ref = instance.reference_id();
    double ref_running = -kInf;
    for (int t_e = t_s; t_e < t_max; ++t_e) {
        const auto& ids = instance.available_at(t_e);
        const auto& values = instance.lf1_at(t_e);
        const auto& dense = instance.dense_indices_at(t_e);
        std::vector<double> best_exact(d_max + 1, kInf);
        for (std::size_t i = 0; i < ids.size(); ++i) {
            const std::uint32_t idx = dense[i];
            if (t_e == t_s) {
                running_max[idx] = values[i];
                last_seen[idx] = t_e;
            } else {
                if (last_seen[idx] != t_e - 1) {
                    last_seen[idx] = -1;
                    continue;
                }
                running_max[idx] = std::max(running_max[idx], values[i]);
                last_seen[idx] = t_e;
            }
            if (ids[i] == ref) {
                ref_running = running_max[idx];
                continue;
            }
            int depth = instance.topologies()[idx].depth;
            if (depth <= d_max) best_exact[depth] = std::min(best_exact[depth], running_max[idx]);
        }
        BlockStats stats;
        stats.block = {t_s, t_e};
        stats.ref_lf1 = ref_running;
        stats.best_nonref_lf1.assign(d_max + 1, kInf);
        double running = kInf;
        for (int d = 0; d <= d_max; ++d) {
            running = std::min(running, best_exact[d]);
            stats.best_nonref_lf1[d] = running;
        }
        out[block_index(t_s, t_e, t_max)] = std::move(stats);
    }
}

}  // namespace

std::vector<BlockStats> compute_all_block_stats_serial(const Instance& instance, int d_max) {
    if (d_max < 0) throw ValidationError("d_max must be >= 0");
    const int t_max = instance.t_max();
    std::vector<BlockStats> all(static_cast<std::size_t>(t_max) * (t_max + 1) / 2);
    std::vector<double> running_max(instance.topology_count());
    std::vector<int> last_seen(instance.topology_count(), -2);
    for (int t_s = 0; t_s < t_max; ++t_s)
        stats_row(instance, t_s, d_max, running_max, last_seen, all);
    return all;
}

std::vector<BlockStats> compute_all_block_stats(const Instance& instance, int d_max, int threads) {
    if (d_max < 0) throw ValidationError("d_max must be >= 0");
    const int t_max = instance.t_max();
    const int workers = resolve_threads(threads);
    if (workers <= 1 || t_max == 1) return compute_all_block_stats_serial(instance, d_max);

    std::vector<BlockStats> all(static_cast<std::size_t>(t_max) * (t_max + 1) / 2);
#ifdef _OPENMP
#pragma omp parallel num_threads(workers)
    {
        std::vector<double> running_max(instance.topology_count());
        std::vector<int> last_seen(instance.topology_count(), -2);
#pragma omp for schedule(dynamic, 1)
        for (int t_s = 0; t_s < t_max; ++t_s)
            stats_row(instance, t_s, d_max, running_max, last_seen, all);
    }
#else
    std::vector<double> running_max(instance.topology_count());
    std::vector<int> last_seen(instance.topology_count(), -2);
    for (int t_s = 0; t_s < t_max; ++t_s)
        stats_row(instance, t_s, d_max, running_max, last_seen, all);
#endif
    return all;
}

}  // namespace topoplan
