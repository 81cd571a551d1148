#ifndef TOPOPLAN_EXACT_HPP
#define TOPOPLAN_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

#include "topoplan/blocks.hpp"
#include "topoplan/instance.hpp"
#include "topoplan/objectives.hpp"

namespace topoplan {

/// Exact strategy counts; paper-scale instances exceed 64 bits.
using BigCount = boost::multiprecision::cpp_int;

/// One evaluated (depth bound, block configuration, reference assignment).
/// The configuration is stored compactly: bit t of cut_mask (1 <= t < t_max)
/// starts a new block at step t; bit j of ref_mask marks block j as reference.
struct ConfigRecord {
    double lf1;  // best achievable loading for this triple, +inf if none
    std::uint32_t cut_mask;
    std::uint32_t ref_mask;
    std::uint8_t depth_bound;
    std::uint8_t switches;  // popcount(cut_mask)
    std::uint8_t non_ref;   // t_max minus total length of reference blocks

    BlockConfiguration config(int t_max) const;
    ReferenceAssignment ref() const;
    bool is_ref_block(int j) const { return (ref_mask >> j) & 1u; }
};

struct BlockAlgorithmResult {
    std::vector<ConfigRecord> records;  // canonical (d, l, cuts, ref) order
    std::uint64_t eval_count = 0;
    int d_max = 0;
    int s_max = 0;
    int t_max = 0;
};

/// Enumerates every (d, M, R) within bounds and evaluates its best loading
/// from shared block stats. eval_count equals the number of records and is
/// instance-independent. The parallel kernel writes records into precomputed
/// slots, so output is bit-identical to the serial reference for any worker
/// count.
BlockAlgorithmResult run_block_algorithm(const Instance& instance, int d_max, int s_max,
                                         int threads = 0);
BlockAlgorithmResult run_block_algorithm_serial(const Instance& instance, int d_max, int s_max);

struct FilteredTuple {
    int depth;
    int switches;
    int non_ref;
    double lf1;

    friend bool operator==(const FilteredTuple&, const FilteredTuple&) = default;
};

/// Discrete-tensor nondominance filter: keeps a (d, l, n) cell iff its rounded
/// loading strictly beats the rounded minimum of the three lower neighbors,
/// propagating neighbor minima in increasing (d, l, n) order.
std::vector<FilteredTuple> filter_nondominated(const std::vector<ConfigRecord>& records, int d_max,
                                               int s_max, int t_max);

/// Number of strategies realizing the record at the given loading threshold.
/// Loose counting is the plain per-block product of admissible-set sizes;
/// strict counting additionally forbids equal topologies in time-adjacent
/// non-reference blocks (sequential transfer computation). Throws
/// InfeasibleError on records with lf1 = +inf.
BigCount count_strategies(const Instance& instance, const ConfigRecord& record, double threshold,
                          bool strict_adjacency);

/// One concrete strategy for the record: per non-reference block the
/// admissible topology with minimal max-over-block loading (ties to lowest
/// id), repaired to the next-best choice when adjacent blocks would coincide;
/// reference blocks take the reference topology. Deterministic. Throws
/// InfeasibleError when repair is impossible.
Strategy materialize_representative(const Instance& instance, const ConfigRecord& record);

struct ExactFrontEntry {
    int front_rank;  // 1-based
    int depth;
    int switches;
    int non_ref;
    double lf1;          // minimal unrounded loading among aggregated records
    double lf1_rounded;  // the grouping key
    BigCount strategy_count;
    std::optional<Strategy> representative;  // absent when no repair exists
};

struct ExactResult {
    std::vector<ExactFrontEntry> entries;  // sorted by (rank, depth, switches, non_ref, lf1)
    std::uint64_t eval_count = 0;
    bool feasible = false;  // false iff no finite-loading record exists
    int d_max = 0;
    int s_max = 0;
    int t_max = 0;

    std::vector<ExactFrontEntry> front(int rank) const;
    int front_count() const;
};

/// Full pipeline: enumerate records, build the unique rounded objective
/// points (records with +inf loading are unrealizable and excluded), peel
/// dominance fronts to k_max under rounded-loading dominance, and aggregate
/// per-point strategy counts over every record matching the discrete triple
/// and rounded loading. Representatives come from the record with minimal
/// unrounded loading (enumeration order breaks ties).
ExactResult exact_fronts(const Instance& instance, int d_max, int s_max, int k_max,
                         bool strict_adjacency = false, int threads = 0);

/// Closed-form evaluation count: (d_max+1) * sum_l C(t_max-1, l) * F_{l+3}.
BigCount count_evaluations(int d_max, int l_max, int t_max);

}  // namespace topoplan

#endif  // TOPOPLAN_EXACT_HPP
