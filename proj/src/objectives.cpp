#include "topoplan/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "topoplan/errors.hpp"

namespace topoplan {

ObjectiveVector evaluate(const Instance& instance, const Strategy& strategy) {
    if (static_cast<int>(strategy.genes.size()) != instance.t_max())
        throw ValidationError("strategy length != t_max");
    ObjectiveVector v;
    v.lf1 = -std::numeric_limits<double>::infinity();
    for (int t = 0; t < instance.t_max(); ++t) {
        TopologyId g = strategy.genes[t];
        v.lf1 = std::max(v.lf1, instance.lf1(g, t));  // throws if g not in G_t
        v.depth = std::max(v.depth, instance.depth_of(g));
        if (t >= 1 && g != strategy.genes[t - 1]) ++v.switches;
        if (g != instance.reference_id()) ++v.non_ref;
    }
    return v;
}

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    if (a.lf1 > b.lf1 || a.depth > b.depth || a.switches > b.switches || a.non_ref > b.non_ref)
        return false;
    return a.lf1 < b.lf1 || a.depth < b.depth || a.switches < b.switches || a.non_ref < b.non_ref;
}

namespace {

bool canonical_less(const ObjectiveVector& a, const ObjectiveVector& b) {
    if (a.lf1 != b.lf1) return a.lf1 < b.lf1;
    if (a.depth != b.depth) return a.depth < b.depth;
    if (a.switches != b.switches) return a.switches < b.switches;
    return a.non_ref < b.non_ref;
}

std::vector<ObjectiveVector> sorted_unique(std::span<const ObjectiveVector> points) {
    std::vector<ObjectiveVector> result(points.begin(), points.end());
    std::sort(result.begin(), result.end(), canonical_less);
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

}  // namespace

std::vector<ObjectiveVector> pareto_front(std::span<const ObjectiveVector> points) {
    // Canonical order is a linear extension of dominance, so a point can only
    // be dominated by an earlier one; scanning current front members suffices
    // (any dominator is itself dominated only by front members).
    auto sorted = sorted_unique(points);
    std::vector<ObjectiveVector> front;
    for (const auto& p : sorted) {
        bool dominated = false;
        for (const auto& q : front) {
            if (dominates(q, p)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) front.push_back(p);
    }
    return front;
}

std::vector<std::vector<ObjectiveVector>> rank_fronts(std::span<const ObjectiveVector> points,
                                                      int k_max) {
    if (k_max < 1) throw ValidationError("k_max must be >= 1");
    auto sorted = sorted_unique(points);
    const int beyond = k_max + 1;
    std::vector<int> rank(sorted.size(), 1);
    // rank = 1 + max rank among dominators; canonical order guarantees all
    // dominators of i precede i.
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (rank[j] >= rank[i] && dominates(sorted[j], sorted[i]))
                rank[i] = std::min(rank[j] + 1, beyond);
        }
    }
    int deepest = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (rank[i] <= k_max) deepest = std::max(deepest, rank[i]);
    std::vector<std::vector<ObjectiveVector>> fronts(deepest);
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (rank[i] <= k_max) fronts[rank[i] - 1].push_back(sorted[i]);
    return fronts;
}

double round_lf1(double x) {
    if (std::isinf(x)) return x;
    return static_cast<double>(std::llround(x * 10.0)) / 10.0;
}

long long lf1_to_deci(double x) {
    if (std::isinf(x)) return LF1_DECI_INFINITY;
    return std::llround(x * 10.0);
}

}  // namespace topoplan
