#ifndef TOPOPLAN_OBJECTIVES_HPP
#define TOPOPLAN_OBJECTIVES_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "topoplan/instance.hpp"

namespace topoplan {

/// A day-ahead plan: one topology id per time step.
struct Strategy {
    std::vector<TopologyId> genes;

    friend bool operator==(const Strategy&, const Strategy&) = default;
    friend auto operator<=>(const Strategy&, const Strategy&) = default;
};

/// The four minimized objectives of a strategy.
struct ObjectiveVector {
    double lf1 = 0.0;  // worst N-1 loading over the horizon, percent
    int depth = 0;     // max topological depth
    int switches = 0;  // number of topology changes
    int non_ref = 0;   // time steps outside the reference topology

    friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
};

/// Evaluates a strategy; throws ValidationError if any gene is unavailable at its step.
ObjectiveVector evaluate(const Instance& instance, const Strategy& strategy);

/// a <= b in all four objectives and strictly better in at least one.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

/// Unique nondominated points of the input, in canonical (lf1, depth,
/// switches, non_ref) order. Insensitive to duplication and permutation.
std::vector<ObjectiveVector> pareto_front(std::span<const ObjectiveVector> points);

/// Dominance-front peeling: F_1 = pareto_front(points), F_j = pareto_front of
/// the remainder; stops after k_max fronts or when exhausted.
std::vector<std::vector<ObjectiveVector>> rank_fronts(std::span<const ObjectiveVector> points,
                                                      int k_max);

/// Nearest multiple of 0.1, ties away from zero; +inf maps to +inf.
double round_lf1(double x);

/// round_lf1 scaled to an integer number of deci-percent; +inf maps to
/// LF1_DECI_INFINITY. Grouping/dominance on rounded values use this key.
long long lf1_to_deci(double x);

inline constexpr long long LF1_DECI_INFINITY = 0x7fffffffffffffffLL;

}  // namespace topoplan

#endif  // TOPOPLAN_OBJECTIVES_HPP
