#include "topoplan/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "topoplan/errors.hpp"
#include "topoplan/parallel.hpp"

namespace topoplan {

namespace {

struct StepChoices {
    std::vector<TopologyId> ids;
    std::vector<double> lf1;
    std::vector<int> depth;
};

// Per-step choices pruned to depth <= d_max (a deeper gene makes the whole
// strategy infeasible). Never empty: the reference is always available.
std::vector<StepChoices> pruned_choices(const Instance& instance, int d_max) {
    std::vector<StepChoices> steps(instance.t_max());
    for (int t = 0; t < instance.t_max(); ++t) {
        const auto& ids = instance.available_at(t);
        const auto& values = instance.lf1_at(t);
        const auto& dense = instance.dense_indices_at(t);
        for (std::size_t i = 0; i < ids.size(); ++i) {
            int depth = instance.topologies()[dense[i]].depth;
            if (depth > d_max) continue;
            steps[t].ids.push_back(ids[i]);
            steps[t].lf1.push_back(values[i]);
            steps[t].depth.push_back(depth);
        }
    }
    return steps;
}

void check_limit(const Instance& instance, const OracleLimits& limits) {
    BigCount product = 1;
    for (int t = 0; t < instance.t_max(); ++t)
        product *= BigCount(instance.available_at(t).size());
    if (product > limits.max_strategy_count)
        throw ValidationError("strategy space of " + product.str() +
                              " strategies exceeds the oracle limit of " +
                              BigCount(limits.max_strategy_count).str());
}

std::uint64_t pack_point(int d, int l, int n, long long deci) {
    return (static_cast<std::uint64_t>(d) << 56) | (static_cast<std::uint64_t>(l) << 48) |
           (static_cast<std::uint64_t>(n) << 40) | static_cast<std::uint64_t>(deci);
}

ObjectiveVector unpack_point(std::uint64_t key) {
    ObjectiveVector v;
    v.depth = static_cast<int>((key >> 56) & 0xff);
    v.switches = static_cast<int>((key >> 48) & 0xff);
    v.non_ref = static_cast<int>((key >> 40) & 0xff);
    v.lf1 = static_cast<double>(static_cast<long long>(key & 0xffffffffffULL)) / 10.0;
    return v;
}

using PointCounts = std::unordered_map<std::uint64_t, std::uint64_t>;

void seed_digits(const std::vector<StepChoices>& steps, std::uint64_t flat,
                 std::vector<std::size_t>& digits) {
    for (int t = static_cast<int>(steps.size()) - 1; t >= 0; --t) {
        digits[t] = flat % steps[t].ids.size();
        flat /= steps[t].ids.size();
    }
}

void advance_digits(const std::vector<StepChoices>& steps, std::vector<std::size_t>& digits) {
    for (int t = static_cast<int>(steps.size()) - 1; t >= 0; --t) {
        if (++digits[t] < steps[t].ids.size()) return;
        digits[t] = 0;
    }
}

PointCounts enumerate_realized(const Instance& instance, const std::vector<StepChoices>& steps,
                               int s_max, std::uint64_t begin, std::uint64_t end) {
    const int t_max = instance.t_max();
    const TopologyId ref = instance.reference_id();
    PointCounts counts;
    std::vector<std::size_t> digits(t_max);
    seed_digits(steps, begin, digits);
    for (std::uint64_t flat = begin; flat < end; ++flat, advance_digits(steps, digits)) {
        double lf1 = 0.0;
        int depth = 0, switches = 0, non_ref = 0;
        for (int t = 0; t < t_max; ++t) {
            const auto& step = steps[t];
            const std::size_t i = digits[t];
            lf1 = std::max(lf1, step.lf1[i]);
            depth = std::max(depth, step.depth[i]);
            if (t >= 1 && step.ids[i] != steps[t - 1].ids[digits[t - 1]]) ++switches;
            if (step.ids[i] != ref) ++non_ref;
        }
        if (switches > s_max) continue;
        ++counts[pack_point(depth, switches, non_ref, lf1_to_deci(lf1))];
    }
    return counts;
}

}  // namespace

std::vector<std::vector<OracleFrontPoint>> brute_force_fronts(const Instance& instance, int d_max,
                                                              int s_max, int k_max,
                                                              const OracleLimits& limits,
                                                              int threads) {
    if (k_max < 1) throw ValidationError("k_max must be >= 1");
    if (d_max < 0 || s_max < 0 || s_max > instance.t_max() - 1)
        throw ValidationError("bounds out of range");
    check_limit(instance, limits);

    const auto steps = pruned_choices(instance, d_max);
    std::uint64_t total = 1;
    for (const auto& step : steps) total *= step.ids.size();

    const int workers = resolve_threads(threads);
    PointCounts counts;
    if (workers <= 1 || total < 4096) {
        counts = enumerate_realized(instance, steps, s_max, 0, total);
    } else {
        std::vector<PointCounts> partial(workers);
#ifdef _OPENMP
#pragma omp parallel for num_threads(workers)
#endif
        for (int w = 0; w < workers; ++w) {
            const std::uint64_t begin = total * w / workers;
            const std::uint64_t end = total * (w + 1) / workers;
            partial[w] = enumerate_realized(instance, steps, s_max, begin, end);
        }
        for (const auto& map : partial)
            for (const auto& [key, count] : map) counts[key] += count;
    }

    std::vector<ObjectiveVector> points;
    points.reserve(counts.size());
    for (const auto& [key, count] : counts) points.push_back(unpack_point(key));
    auto fronts = rank_fronts(points, k_max);

    std::vector<std::vector<OracleFrontPoint>> result(fronts.size());
    for (std::size_t f = 0; f < fronts.size(); ++f) {
        for (const auto& p : fronts[f]) {
            const auto key = pack_point(p.depth, p.switches, p.non_ref, lf1_to_deci(p.lf1));
            result[f].push_back({p, BigCount(counts.at(key))});
        }
    }
    return result;
}

namespace {

struct BlockwiseKey {
    std::uint32_t cut_mask;
    std::uint32_t ref_mask;
    std::uint8_t depth;

    friend bool operator==(const BlockwiseKey&, const BlockwiseKey&) = default;
};

struct BlockwiseKeyHash {
    std::size_t operator()(const BlockwiseKey& k) const {
        std::uint64_t v = (static_cast<std::uint64_t>(k.depth) << 56) |
                          (static_cast<std::uint64_t>(k.ref_mask) << 28) | k.cut_mask;
        return std::hash<std::uint64_t>{}(v);
    }
};

struct BlockwiseValue {
    double min_lf1;
    int non_ref;
    std::uint64_t loose = 0;
    std::uint64_t strict = 0;
};

// Visits every (depth bound, partition refinement, reference subset) a
// strategy realizes. The coarsest partition cuts exactly at gene changes;
// refinements add cuts at equal-gene boundaries. A refined block is in the
// reference subset iff its constant gene is the reference topology; subsets
// with adjacent reference blocks are not valid assignments.
template <typename Visit>
void visit_refinements(const std::vector<TopologyId>& genes, TopologyId ref, int t_max, int d_max,
                       int s_max, int max_depth_realized, Visit&& visit) {
    std::uint32_t coarsest = 0;
    for (int t = 1; t < t_max; ++t)
        if (genes[t] != genes[t - 1]) coarsest |= 1u << t;
    const int l0 = std::popcount(coarsest);
    if (l0 > s_max) return;

    std::uint32_t free_mask = 0;
    for (int t = 1; t < t_max; ++t)
        if (!((coarsest >> t) & 1u)) free_mask |= 1u << t;

    // all submasks of free_mask, including 0
    std::uint32_t sub = 0;
    while (true) {
        if (l0 + std::popcount(sub) <= s_max) {
            const std::uint32_t mask = coarsest | sub;
            std::uint32_t ref_mask = 0;
            bool valid = true;
            int block = 0;
            bool prev_ref = false;
            int start = 0;
            for (int t = 1; t <= t_max; ++t) {
                if (t == t_max || ((mask >> t) & 1u)) {
                    const bool is_ref = genes[start] == ref;
                    if (is_ref) {
                        if (prev_ref) {
                            valid = false;
                            break;
                        }
                        ref_mask |= 1u << block;
                    }
                    prev_ref = is_ref;
                    ++block;
                    start = t;
                }
            }
            if (valid) {
                for (int d = max_depth_realized; d <= d_max; ++d)
                    visit(BlockwiseKey{mask, ref_mask, static_cast<std::uint8_t>(d)}, sub == 0);
            }
        }
        if (sub == free_mask) break;
        sub = (sub - free_mask) & free_mask;
    }
}

}  // namespace

std::vector<std::vector<BlockwisePoint>> brute_force_blockwise_fronts(const Instance& instance,
                                                                      int d_max, int s_max,
                                                                      int k_max,
                                                                      const OracleLimits& limits) {
    if (k_max < 1) throw ValidationError("k_max must be >= 1");
    if (d_max < 0 || s_max < 0 || s_max > instance.t_max() - 1)
        throw ValidationError("bounds out of range");
    check_limit(instance, limits);

    const int t_max = instance.t_max();
    const TopologyId ref = instance.reference_id();
    const auto steps = pruned_choices(instance, d_max);
    std::uint64_t total = 1;
    for (const auto& step : steps) total *= step.ids.size();

    std::unordered_map<BlockwiseKey, BlockwiseValue, BlockwiseKeyHash> keys;
    std::vector<std::size_t> digits(t_max);
    std::vector<TopologyId> genes(t_max);

    for (int pass = 0; pass < 2; ++pass) {
        seed_digits(steps, 0, digits);
        for (std::uint64_t flat = 0; flat < total; ++flat, advance_digits(steps, digits)) {
            double lf1 = 0.0;
            int depth = 0, non_ref = 0;
            for (int t = 0; t < t_max; ++t) {
                const auto& step = steps[t];
                genes[t] = step.ids[digits[t]];
                lf1 = std::max(lf1, step.lf1[digits[t]]);
                depth = std::max(depth, step.depth[digits[t]]);
                if (genes[t] != ref) ++non_ref;
            }
            visit_refinements(genes, ref, t_max, d_max, s_max, depth,
                              [&](const BlockwiseKey& key, bool is_coarsest) {
                                  if (pass == 0) {
                                      auto [it, inserted] = keys.try_emplace(
                                          key, BlockwiseValue{lf1, non_ref});
                                      if (!inserted && lf1 < it->second.min_lf1)
                                          it->second.min_lf1 = lf1;
                                  } else {
                                      auto& value = keys.at(key);
                                      if (lf1 == value.min_lf1) {
                                          ++value.loose;
                                          if (is_coarsest) ++value.strict;
                                      }
                                  }
                              });
        }
    }

    // Aggregate keys into unique rounded objective tuples.
    struct Aggregate {
        BigCount loose = 0;
        BigCount strict = 0;
    };
    std::unordered_map<std::uint64_t, Aggregate> tuples;
    for (const auto& [key, value] : keys) {
        const auto point = pack_point(key.depth, std::popcount(key.cut_mask), value.non_ref,
                                      lf1_to_deci(value.min_lf1));
        auto& agg = tuples[point];
        agg.loose += value.loose;
        agg.strict += value.strict;
    }

    std::vector<ObjectiveVector> points;
    points.reserve(tuples.size());
    for (const auto& [key, agg] : tuples) points.push_back(unpack_point(key));
    auto fronts = rank_fronts(points, k_max);

    std::vector<std::vector<BlockwisePoint>> result(fronts.size());
    for (std::size_t f = 0; f < fronts.size(); ++f) {
        for (const auto& p : fronts[f]) {
            const auto key = pack_point(p.depth, p.switches, p.non_ref, lf1_to_deci(p.lf1));
            const auto& agg = tuples.at(key);
            result[f].push_back({p, agg.loose, agg.strict});
        }
    }
    return result;
}

namespace {

std::string describe_point(const ObjectiveVector& v) {
    std::ostringstream out;
    out << "(depth=" << v.depth << ", switches=" << v.switches << ", non_ref=" << v.non_ref
        << ", lf1=" << v.lf1 << ")";
    return out.str();
}

}  // namespace

EquivalenceReport check_equivalence(const Instance& instance, int d_max, int s_max, int k_max,
                                    const OracleLimits& limits) {
    EquivalenceReport report;

    auto exact_loose = exact_fronts(instance, d_max, s_max, k_max, /*strict_adjacency=*/false);
    auto exact_strict = exact_fronts(instance, d_max, s_max, k_max, /*strict_adjacency=*/true);
    auto blockwise = brute_force_blockwise_fronts(instance, d_max, s_max, k_max, limits);

    // Front-for-front equality of points and both counting modes against the
    // blockwise reconstruction.
    const int exact_front_count = exact_loose.front_count();
    if (exact_front_count != static_cast<int>(blockwise.size())) {
        report.detail = "front count mismatch: block solver has " +
                        std::to_string(exact_front_count) + ", oracle has " +
                        std::to_string(blockwise.size());
        return report;
    }
    for (int rank = 1; rank <= exact_front_count; ++rank) {
        auto loose_front = exact_loose.front(rank);
        auto strict_front = exact_strict.front(rank);
        const auto& oracle_front = blockwise[rank - 1];
        if (loose_front.size() != oracle_front.size()) {
            report.detail = "front " + std::to_string(rank) + " size mismatch: block solver " +
                            std::to_string(loose_front.size()) + ", oracle " +
                            std::to_string(oracle_front.size());
            return report;
        }
        // both sides are in canonical order modulo sorting conventions
        auto canonical = [](const auto& a, const auto& b) {
            return std::tie(a.depth, a.switches, a.non_ref, a.lf1_rounded) <
                   std::tie(b.depth, b.switches, b.non_ref, b.lf1_rounded);
        };
        std::sort(loose_front.begin(), loose_front.end(), canonical);
        std::sort(strict_front.begin(), strict_front.end(), canonical);
        std::vector<BlockwisePoint> oracle_sorted(oracle_front.begin(), oracle_front.end());
        std::sort(oracle_sorted.begin(), oracle_sorted.end(),
                  [](const BlockwisePoint& a, const BlockwisePoint& b) {
                      return std::tie(a.objectives.depth, a.objectives.switches,
                                      a.objectives.non_ref, a.objectives.lf1) <
                             std::tie(b.objectives.depth, b.objectives.switches,
                                      b.objectives.non_ref, b.objectives.lf1);
                  });
        for (std::size_t i = 0; i < oracle_sorted.size(); ++i) {
            const auto& exact_entry = loose_front[i];
            const auto& oracle_entry = oracle_sorted[i];
            ObjectiveVector exact_point{exact_entry.lf1_rounded, exact_entry.depth,
                                        exact_entry.switches, exact_entry.non_ref};
            if (lf1_to_deci(exact_point.lf1) != lf1_to_deci(oracle_entry.objectives.lf1) ||
                exact_point.depth != oracle_entry.objectives.depth ||
                exact_point.switches != oracle_entry.objectives.switches ||
                exact_point.non_ref != oracle_entry.objectives.non_ref) {
                report.detail = "front " + std::to_string(rank) + " point mismatch: block solver " +
                                describe_point(exact_point) + ", oracle " +
                                describe_point(oracle_entry.objectives);
                return report;
            }
            if (exact_entry.strategy_count != oracle_entry.loose_count) {
                report.detail = "front " + std::to_string(rank) + " loose count mismatch at " +
                                describe_point(exact_point) + ": block solver " +
                                exact_entry.strategy_count.str() + ", oracle " +
                                oracle_entry.loose_count.str();
                return report;
            }
            if (strict_front[i].strategy_count != oracle_entry.strict_count) {
                report.detail = "front " + std::to_string(rank) + " strict count mismatch at " +
                                describe_point(exact_point) + ": block solver " +
                                strict_front[i].strategy_count.str() + ", oracle " +
                                oracle_entry.strict_count.str();
                return report;
            }
        }
    }

    // First-front check against raw realized strategies; realized
    // multiplicities identify the adjacency counting mode.
    auto realized = brute_force_fronts(instance, d_max, s_max, 1, limits);
    auto exact_first = exact_loose.front(1);
    auto strict_first = exact_strict.front(1);
    std::vector<OracleFrontPoint> realized_first =
        realized.empty() ? std::vector<OracleFrontPoint>{} : realized[0];
    if (exact_first.size() != realized_first.size()) {
        report.detail = "realized front 1 size mismatch: block solver " +
                        std::to_string(exact_first.size()) + ", brute force " +
                        std::to_string(realized_first.size());
        return report;
    }
    auto canonical = [](const auto& a, const auto& b) {
        return std::tie(a.depth, a.switches, a.non_ref, a.lf1_rounded) <
               std::tie(b.depth, b.switches, b.non_ref, b.lf1_rounded);
    };
    std::sort(exact_first.begin(), exact_first.end(), canonical);
    std::sort(strict_first.begin(), strict_first.end(), canonical);
    std::vector<OracleFrontPoint> realized_sorted(realized_first.begin(), realized_first.end());
    std::sort(realized_sorted.begin(), realized_sorted.end(),
              [](const OracleFrontPoint& a, const OracleFrontPoint& b) {
                  return std::tie(a.objectives.depth, a.objectives.switches, a.objectives.non_ref,
                                  a.objectives.lf1) <
                         std::tie(b.objectives.depth, b.objectives.switches, b.objectives.non_ref,
                                  b.objectives.lf1);
              });
    bool strict_matches = true;
    bool loose_matches = true;
    for (std::size_t i = 0; i < realized_sorted.size(); ++i) {
        const auto& entry = exact_first[i];
        const auto& point = realized_sorted[i];
        if (lf1_to_deci(entry.lf1_rounded) != lf1_to_deci(point.objectives.lf1) ||
            entry.depth != point.objectives.depth || entry.switches != point.objectives.switches ||
            entry.non_ref != point.objectives.non_ref) {
            report.detail = "realized front 1 point mismatch: block solver " +
                            describe_point({entry.lf1_rounded, entry.depth, entry.switches,
                                            entry.non_ref}) +
                            ", brute force " + describe_point(point.objectives);
            return report;
        }
        if (strict_first[i].strategy_count != point.strategy_count) strict_matches = false;
        if (entry.strategy_count != point.strategy_count) loose_matches = false;
    }
    if (!strict_matches && !loose_matches) {
        report.detail = "realized front 1 multiplicities match neither counting mode";
        return report;
    }

    report.pass = true;
    report.matched_mode = strict_matches && loose_matches ? "both"
                          : strict_matches               ? "strict"
                                                          : "loose";
    report.detail = "fronts 1.." + std::to_string(exact_front_count) +
                    " match the blockwise oracle; realized multiplicities match " +
                    report.matched_mode + " counting";
    return report;
}

}  // namespace topoplan
