#ifndef TOPOPLAN_ORACLE_HPP
#define TOPOPLAN_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "topoplan/exact.hpp"
#include "topoplan/instance.hpp"
#include "topoplan/objectives.hpp"

namespace topoplan {

struct OracleLimits {
    std::uint64_t max_strategy_count = 10'000'000;
};

struct OracleFrontPoint {
    ObjectiveVector objectives;  // lf1 rounded to one decimal
    BigCount strategy_count;
};

/// Exhaustive ground truth: enumerates every strategy in the Cartesian
/// product of available topologies, keeps those within the depth and switch
/// bounds, groups by rounded objective tuple with multiplicity, and peels
/// dominance fronts. Throws ValidationError when the full product exceeds
/// the limit.
std::vector<std::vector<OracleFrontPoint>> brute_force_fronts(const Instance& instance, int d_max,
                                                              int s_max, int k_max,
                                                              const OracleLimits& limits = {},
                                                              int threads = 0);

/// One reconstructed objective point with both counting semantics.
struct BlockwisePoint {
    ObjectiveVector objectives;  // lf1 rounded
    BigCount loose_count;        // per-block assignments (refinement semantics)
    BigCount strict_count;       // strategies whose coarsest representation matches
};

/// Reconstructs the block-representation objective points from raw strategy
/// enumeration alone: every strategy is charged to each (depth bound,
/// partition refinement, reference subset) it realizes, per-key minima give
/// the achievable loadings, and fronts are peeled over the unique rounded
/// tuples. Independent of the blocks/exact modules.
std::vector<std::vector<BlockwisePoint>> brute_force_blockwise_fronts(
    const Instance& instance, int d_max, int s_max, int k_max, const OracleLimits& limits = {});

struct EquivalenceReport {
    bool pass = false;
    std::string matched_mode;  // "strict", "loose", or "both"
    std::string detail;        // first discrepancy when failing
};

/// Cross-checks exact_fronts against both oracles: front-for-front equality
/// of points and counts against the blockwise reconstruction, and first-front
/// equality (points and realized multiplicities) against raw brute force.
/// Reports the adjacency counting mode consistent with raw multiplicities.
EquivalenceReport check_equivalence(const Instance& instance, int d_max, int s_max, int k_max,
                                    const OracleLimits& limits = {});

}  // namespace topoplan

#endif  // TOPOPLAN_ORACLE_HPP
