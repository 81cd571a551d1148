#ifndef TOPOPLAN_BLOCKS_HPP
#define TOPOPLAN_BLOCKS_HPP

#include <vector>

#include "topoplan/instance.hpp"

namespace topoplan {

/// A run of consecutive time steps [t_s, t_e] holding one topology.
struct Block {
    int t_s;
    int t_e;

    int length() const { return t_e - t_s + 1; }
    friend bool operator==(const Block&, const Block&) = default;
    friend auto operator<=>(const Block&, const Block&) = default;
};

/// A partition of the horizon into consecutive blocks; switches = blocks - 1.
struct BlockConfiguration {
    std::vector<Block> blocks;

    int switches() const { return static_cast<int>(blocks.size()) - 1; }
    friend bool operator==(const BlockConfiguration&, const BlockConfiguration&) = default;
};

/// The subset of a configuration's blocks operated in the reference topology.
/// No two selected blocks may be adjacent in time.
struct ReferenceAssignment {
    std::vector<int> ref_blocks;  // ascending block indices

    friend bool operator==(const ReferenceAssignment&, const ReferenceAssignment&) = default;
};

/// Per-block loading statistics. best_nonref_lf1[d] is the best max-over-block
/// loading of any non-reference topology available throughout the block with
/// depth <= d, or +inf if none exists (always +inf at d = 0).
struct BlockStats {
    Block block;
    double ref_lf1;
    std::vector<double> best_nonref_lf1;  // index d = 0..d_max, non-increasing
};

/// All C(t_max, 2) + t_max blocks ordered by (t_s, t_e).
std::vector<Block> enumerate_blocks(int t_max);

/// Position of block [t_s, t_e] in enumerate_blocks(t_max) order.
inline int block_index(int t_s, int t_e, int t_max) {
    return t_s * t_max - t_s * (t_s - 1) / 2 + (t_e - t_s);
}

/// All partitions of 0..t_max-1 into exactly l+1 blocks, lexicographic by cut
/// positions; count = C(t_max-1, l). Throws ValidationError if l out of range.
std::vector<BlockConfiguration> enumerate_configurations(int t_max, int l);

/// All non-adjacent subsets of the configuration's blocks, canonical order;
/// count = F_{N+2} for N blocks.
std::vector<ReferenceAssignment> enumerate_reference_assignments(const BlockConfiguration& config);

/// Direct per-block scan (the serial reference used by tests and small runs).
BlockStats compute_block_stats(const Instance& instance, Block block, int d_max);

/// Non-reference topologies available at every step of the block, with
/// depth <= d and max-over-block loading <= threshold, ascending by id.
std::vector<TopologyId> admissible_topologies(const Instance& instance, Block block, int d,
                                              double threshold);

/// Stats for every block, in enumerate_blocks order. The parallel kernel
/// splits over block start positions and is bit-identical to the serial one.
std::vector<BlockStats> compute_all_block_stats(const Instance& instance, int d_max,
                                                int threads = 0);
std::vector<BlockStats> compute_all_block_stats_serial(const Instance& instance, int d_max);

}  // namespace topoplan

#endif  // TOPOPLAN_BLOCKS_HPP
