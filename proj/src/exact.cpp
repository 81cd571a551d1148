#include "topoplan/exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <tuple>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "topoplan/errors.hpp"
#include "topoplan/parallel.hpp"

namespace topoplan {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<Block> decode_blocks(std::uint32_t cut_mask, int t_max) {
    std::vector<Block> blocks;
    int start = 0;
    for (int t = 1; t < t_max; ++t) {
        if ((cut_mask >> t) & 1u) {
            blocks.push_back({start, t - 1});
            start = t;
        }
    }
    blocks.push_back({start, t_max - 1});
    return blocks;
}

// Lexicographic combinations of l cut positions from 1..t_max-1, as bitmasks.
std::vector<std::uint32_t> cut_masks(int t_max, int l) {
    std::vector<std::uint32_t> masks;
    std::vector<int> cuts(l);
    for (int i = 0; i < l; ++i) cuts[i] = i + 1;
    while (true) {
        std::uint32_t mask = 0;
        for (int cut : cuts) mask |= 1u << cut;
        masks.push_back(mask);
        int i = l - 1;
        while (i >= 0 && cuts[i] == t_max - 1 - (l - 1 - i)) --i;
        if (i < 0) break;
        ++cuts[i];
        for (int j = i + 1; j < l; ++j) cuts[j] = cuts[j - 1] + 1;
    }
    return masks;
}

std::uint64_t fibonacci_u64(int n) {
    std::uint64_t a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
        std::uint64_t next = a + b;
        a = b;
        b = next;
    }
    return a;  // F_n
}

// Non-adjacent subsets of n blocks, ascending mask order.
std::vector<std::uint32_t> non_adjacent_masks(int n) {
    std::vector<std::uint32_t> masks;
    masks.reserve(fibonacci_u64(n + 2));
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        if ((mask & (mask << 1)) == 0) masks.push_back(mask);
    return masks;
}

}  // namespace

BlockConfiguration ConfigRecord::config(int t_max) const {
    return {decode_blocks(cut_mask, t_max)};
}

ReferenceAssignment ConfigRecord::ref() const {
    ReferenceAssignment assignment;
    for (int j = 0; j < 32; ++j)
        if ((ref_mask >> j) & 1u) assignment.ref_blocks.push_back(j);
    return assignment;
}

namespace {

void validate_bounds(const Instance& instance, int d_max, int s_max) {
    if (instance.t_max() > 32)
        throw ValidationError("block solver supports horizons up to 32 steps");
    if (d_max < 0 || d_max > instance.max_depth())
        throw ValidationError("d_max " + std::to_string(d_max) + " outside 0.." +
                              std::to_string(instance.max_depth()));
    if (s_max < 0 || s_max > instance.t_max() - 1)
        throw ValidationError("s_max " + std::to_string(s_max) + " outside 0.." +
                              std::to_string(instance.t_max() - 1));
}

// Evaluates all (d, R) records of one block configuration into `out`,
// starting at slot `base`. Canonical record order is (d, l, cuts, ref), so
// consecutive d values of the same configuration are per_d slots apart.
void evaluate_config(const std::vector<BlockStats>& stats, std::uint32_t cut_mask, int t_max,
                     int d_max, const std::vector<std::uint32_t>& ref_masks,
                     std::vector<ConfigRecord>& out, std::size_t base, std::size_t per_d) {
    const auto blocks = decode_blocks(cut_mask, t_max);
    const int n_blocks = static_cast<int>(blocks.size());
    const auto l = static_cast<std::uint8_t>(n_blocks - 1);

    double ref_val[32];
    int len[32];
    const double* nonref_val[32];
    for (int j = 0; j < n_blocks; ++j) {
        const auto& s = stats[block_index(blocks[j].t_s, blocks[j].t_e, t_max)];
        ref_val[j] = s.ref_lf1;
        len[j] = blocks[j].length();
        nonref_val[j] = s.best_nonref_lf1.data();
    }

    for (std::size_t r = 0; r < ref_masks.size(); ++r) {
        const std::uint32_t ref_mask = ref_masks[r];
        double ref_part = -kInf;
        int covered = 0;
        for (int j = 0; j < n_blocks; ++j) {
            if ((ref_mask >> j) & 1u) {
                ref_part = std::max(ref_part, ref_val[j]);
                covered += len[j];
            }
        }
        const auto non_ref = static_cast<std::uint8_t>(t_max - covered);
        for (int d = 0; d <= d_max; ++d) {
            double value = ref_part;
            for (int j = 0; j < n_blocks; ++j)
                if (!((ref_mask >> j) & 1u)) value = std::max(value, nonref_val[j][d]);
            out[static_cast<std::size_t>(d) * per_d + base + r] = ConfigRecord{
                value, cut_mask, ref_mask, static_cast<std::uint8_t>(d), l, non_ref};
        }
    }
}

struct EnumerationPlan {
    std::vector<std::uint32_t> masks;        // all cut masks, l ascending then lex
    std::vector<std::size_t> base;           // record slot of each mask's first ref (at d=0)
    std::vector<std::vector<std::uint32_t>> refs_by_l;
    std::size_t per_d = 0;
};

EnumerationPlan make_plan(int t_max, int s_max) {
    EnumerationPlan plan;
    plan.refs_by_l.resize(s_max + 1);
    std::size_t offset = 0;
    for (int l = 0; l <= s_max; ++l) {
        plan.refs_by_l[l] = non_adjacent_masks(l + 1);
        for (std::uint32_t mask : cut_masks(t_max, l)) {
            plan.masks.push_back(mask);
            plan.base.push_back(offset);
            offset += plan.refs_by_l[l].size();
        }
    }
    plan.per_d = offset;
    return plan;
}

}  // namespace

BlockAlgorithmResult run_block_algorithm_serial(const Instance& instance, int d_max, int s_max) {
    validate_bounds(instance, d_max, s_max);
    const int t_max = instance.t_max();
    const auto stats = compute_all_block_stats_serial(instance, d_max);
    const auto plan = make_plan(t_max, s_max);

    BlockAlgorithmResult result;
    result.d_max = d_max;
    result.s_max = s_max;
    result.t_max = t_max;
    result.records.resize(plan.per_d * (d_max + 1));
    for (std::size_t c = 0; c < plan.masks.size(); ++c) {
        const int l = std::popcount(plan.masks[c]);
        evaluate_config(stats, plan.masks[c], t_max, d_max, plan.refs_by_l[l], result.records,
                        plan.base[c], plan.per_d);
    }
    result.eval_count = result.records.size();
    return result;
}

BlockAlgorithmResult run_block_algorithm(const Instance& instance, int d_max, int s_max,
                                         int threads) {
    validate_bounds(instance, d_max, s_max);
    const int t_max = instance.t_max();
    const int workers = resolve_threads(threads);
    if (workers <= 1) return run_block_algorithm_serial(instance, d_max, s_max);

    const auto stats = compute_all_block_stats(instance, d_max, threads);
    const auto plan = make_plan(t_max, s_max);

    BlockAlgorithmResult result;
    result.d_max = d_max;
    result.s_max = s_max;
    result.t_max = t_max;
    result.records.resize(plan.per_d * (d_max + 1));
    const auto n_configs = static_cast<std::int64_t>(plan.masks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) num_threads(workers)
#endif
    for (std::int64_t c = 0; c < n_configs; ++c) {
        const int l = std::popcount(plan.masks[c]);
        evaluate_config(stats, plan.masks[c], t_max, d_max, plan.refs_by_l[l], result.records,
                        plan.base[c], plan.per_d);
    }
    result.eval_count = result.records.size();
    return result;
}

std::vector<FilteredTuple> filter_nondominated(const std::vector<ConfigRecord>& records, int d_max,
                                               int s_max, int t_max) {
    // Padded tensor: index -1 in every dimension stays +inf forever.
    const int dd = d_max + 2, dl = s_max + 2, dn = t_max + 2;
    std::vector<double> tensor(static_cast<std::size_t>(dd) * dl * dn, kInf);
    auto at = [&](int d, int l, int n) -> double& {
        return tensor[(static_cast<std::size_t>(d + 1) * dl + (l + 1)) * dn + (n + 1)];
    };

    for (const auto& rec : records) {
        double& cell = at(rec.depth_bound, rec.switches, rec.non_ref);
        cell = std::min(cell, rec.lf1);
    }

    std::vector<FilteredTuple> survivors;
    for (int d = 0; d <= d_max; ++d) {
        for (int l = 0; l <= s_max; ++l) {
            for (int n = 0; n <= t_max; ++n) {
                const double neighbor_min =
                    std::min({at(d - 1, l, n), at(d, l - 1, n), at(d, l, n - 1)});
                if (round_lf1(at(d, l, n)) < round_lf1(neighbor_min))
                    survivors.push_back({d, l, n, at(d, l, n)});
                else
                    at(d, l, n) = neighbor_min;
            }
        }
    }
    return survivors;
}

namespace {

// Per-block, per-exact-depth candidates (bm = max loading over the block),
// sorted by (bm, id). Rows are built lazily with the same alive-tracking
// sweep as the block stats kernel.
class CandidateCache {
public:
    CandidateCache(const Instance& instance, int d_max)
        : instance_(instance),
          d_max_(d_max),
          per_block_(static_cast<std::size_t>(instance.t_max()) * (instance.t_max() + 1) / 2),
          row_built_(instance.t_max(), false) {}

    using DepthLists = std::vector<std::vector<std::pair<double, TopologyId>>>;

    const DepthLists& candidates(int t_s, int t_e) {
        if (!row_built_[t_s]) build_row(t_s);
        return per_block_[block_index(t_s, t_e, instance_.t_max())];
    }

    /// Admissible topologies with depth <= d and bm <= threshold.
    BigCount count(int t_s, int t_e, int d, double threshold) {
        const auto& lists = candidates(t_s, t_e);
        std::size_t total = 0;
        for (int depth = 1; depth <= d; ++depth) {
            const auto& list = lists[depth];
            total += static_cast<std::size_t>(
                std::upper_bound(list.begin(), list.end(),
                                 std::make_pair(threshold,
                                                std::numeric_limits<TopologyId>::max())) -
                list.begin());
        }
        return BigCount(total);
    }

    /// Same set as `count`, materialized and sorted by id.
    std::vector<TopologyId> ids(int t_s, int t_e, int d, double threshold) {
        const auto& lists = candidates(t_s, t_e);
        std::vector<TopologyId> result;
        for (int depth = 1; depth <= d; ++depth)
            for (const auto& [bm, id] : lists[depth]) {
                if (bm > threshold) break;
                result.push_back(id);
            }
        std::sort(result.begin(), result.end());
        return result;
    }

    /// Choices sorted by (bm, id) with depth <= d and bm <= threshold.
    std::vector<std::pair<double, TopologyId>> choices(int t_s, int t_e, int d, double threshold) {
        const auto& lists = candidates(t_s, t_e);
        std::vector<std::pair<double, TopologyId>> result;
        for (int depth = 1; depth <= d; ++depth)
            for (const auto& entry : lists[depth]) {
                if (entry.first > threshold) break;
                result.push_back(entry);
            }
        std::sort(result.begin(), result.end());
        return result;
    }

private:
    void build_row(int t_s) {
        const int t_max = instance_.t_max();
        const TopologyId ref = instance_.reference_id();
        std::vector<double> running_max(instance_.topology_count());
        std::vector<int> last_seen(instance_.topology_count(), -2);
        for (int t_e = t_s; t_e < t_max; ++t_e) {
            const auto& ids = instance_.available_at(t_e);
            const auto& values = instance_.lf1_at(t_e);
            const auto& dense = instance_.dense_indices_at(t_e);
            DepthLists lists(d_max_ + 1);
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
                if (ids[i] == ref) continue;
                const int depth = instance_.topologies()[idx].depth;
                if (depth <= d_max_) lists[depth].push_back({running_max[idx], ids[i]});
            }
            for (auto& list : lists) std::sort(list.begin(), list.end());
            per_block_[block_index(t_s, t_e, t_max)] = std::move(lists);
        }
        row_built_[t_s] = true;
    }

    const Instance& instance_;
    int d_max_;
    std::vector<DepthLists> per_block_;
    std::vector<bool> row_built_;
};

// Counts adjacency-distinct assignments over one run of consecutive
// non-reference blocks. N_k(g) (assignments of the prefix ending with g) has
// one shared value except where g also appears in the previous block's set,
// so it is carried as a default plus exceptions.
BigCount strict_run_count(const std::vector<std::vector<TopologyId>>& sets) {
    BigCount total_prev = 1;
    BigCount default_prev = 0;
    std::unordered_map<TopologyId, BigCount> exceptions_prev;
    const std::vector<TopologyId>* ids_prev = nullptr;

    for (const auto& ids : sets) {
        std::unordered_map<TopologyId, BigCount> exceptions;
        BigCount overlap_sum = 0;
        if (ids_prev != nullptr) {
            auto it_a = ids.begin();
            auto it_b = ids_prev->begin();
            while (it_a != ids.end() && it_b != ids_prev->end()) {
                if (*it_a < *it_b) {
                    ++it_a;
                } else if (*it_b < *it_a) {
                    ++it_b;
                } else {
                    auto exc = exceptions_prev.find(*it_a);
                    const BigCount& n_prev =
                        exc != exceptions_prev.end() ? exc->second : default_prev;
                    exceptions.emplace(*it_a, total_prev - n_prev);
                    overlap_sum += n_prev;
                    ++it_a;
                    ++it_b;
                }
            }
        }
        BigCount total = BigCount(ids.size()) * total_prev - overlap_sum;
        default_prev = total_prev;  // N_k(g) = S_{k-1} for g outside the overlap
        total_prev = std::move(total);
        exceptions_prev = std::move(exceptions);
        ids_prev = &ids;
    }
    return total_prev;
}

BigCount count_with_cache(const Instance& instance, const ConfigRecord& record, double threshold,
                          bool strict_adjacency, CandidateCache& cache) {
    if (std::isinf(record.lf1))
        throw ValidationError("cannot count strategies of an infeasible record");
    const auto blocks = decode_blocks(record.cut_mask, instance.t_max());
    const int d = record.depth_bound;

    if (!strict_adjacency) {
        BigCount product = 1;
        for (std::size_t j = 0; j < blocks.size(); ++j) {
            if (record.is_ref_block(static_cast<int>(j))) continue;
            product *= cache.count(blocks[j].t_s, blocks[j].t_e, d, threshold);
            if (product == 0) return product;
        }
        return product;
    }

    // Runs of consecutive non-reference blocks interact; reference blocks
    // separate them (non-reference candidates never equal the reference).
    BigCount product = 1;
    std::vector<std::vector<TopologyId>> run;
    auto flush = [&]() {
        if (!run.empty()) {
            product *= strict_run_count(run);
            run.clear();
        }
    };
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        if (record.is_ref_block(static_cast<int>(j))) {
            flush();
        } else {
            run.push_back(cache.ids(blocks[j].t_s, blocks[j].t_e, d, threshold));
        }
    }
    flush();
    return product;
}

Strategy materialize_with_cache(const Instance& instance, const ConfigRecord& record,
                                CandidateCache& cache) {
    if (std::isinf(record.lf1))
        throw ValidationError("cannot materialize an infeasible record");
    const int t_max = instance.t_max();
    const auto blocks = decode_blocks(record.cut_mask, t_max);
    const TopologyId ref = instance.reference_id();

    Strategy strategy;
    strategy.genes.assign(t_max, ref);
    bool prev_non_ref = false;
    TopologyId prev_choice = ref;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        if (record.is_ref_block(static_cast<int>(j))) {
            prev_non_ref = false;
            continue;
        }
        auto choices = cache.choices(blocks[j].t_s, blocks[j].t_e, record.depth_bound, record.lf1);
        std::size_t pick = 0;
        if (prev_non_ref) {
            while (pick < choices.size() && choices[pick].second == prev_choice) ++pick;
        }
        if (pick >= choices.size())
            throw InfeasibleError("no adjacency-valid topology for block [" +
                                  std::to_string(blocks[j].t_s) + "," +
                                  std::to_string(blocks[j].t_e) + "]");
        for (int t = blocks[j].t_s; t <= blocks[j].t_e; ++t)
            strategy.genes[t] = choices[pick].second;
        prev_non_ref = true;
        prev_choice = choices[pick].second;
    }
    return strategy;
}

}  // namespace

BigCount count_strategies(const Instance& instance, const ConfigRecord& record, double threshold,
                          bool strict_adjacency) {
    CandidateCache cache(instance, record.depth_bound);
    return count_with_cache(instance, record, threshold, strict_adjacency, cache);
}

Strategy materialize_representative(const Instance& instance, const ConfigRecord& record) {
    CandidateCache cache(instance, record.depth_bound);
    return materialize_with_cache(instance, record, cache);
}

namespace {

std::uint64_t pack_tuple(int d, int l, int n, long long deci) {
    if (deci < 0 || deci >= (1LL << 40))
        throw ValidationError("loading value out of packable range");
    return (static_cast<std::uint64_t>(d) << 56) | (static_cast<std::uint64_t>(l) << 48) |
           (static_cast<std::uint64_t>(n) << 40) | static_cast<std::uint64_t>(deci);
}

struct TupleInfo {
    double min_lf1 = kInf;
    std::uint32_t best_record = 0;
};

bool tuple_dominates(std::uint64_t a, std::uint64_t b) {
    // Packed fields are (d, l, n, deci) from the high bits down; per-field <=
    // with a != b is dominance on rounded tuples.
    if (a == b) return false;
    const auto field = [](std::uint64_t key, int shift, std::uint64_t mask) {
        return (key >> shift) & mask;
    };
    return field(a, 56, 0xff) <= field(b, 56, 0xff) && field(a, 48, 0xff) <= field(b, 48, 0xff) &&
           field(a, 40, 0xff) <= field(b, 40, 0xff) &&
           (a & 0xffffffffffULL) <= (b & 0xffffffffffULL);
}

}  // namespace

std::vector<ExactFrontEntry> ExactResult::front(int rank) const {
    std::vector<ExactFrontEntry> result;
    for (const auto& entry : entries)
        if (entry.front_rank == rank) result.push_back(entry);
    return result;
}

int ExactResult::front_count() const {
    int deepest = 0;
    for (const auto& entry : entries) deepest = std::max(deepest, entry.front_rank);
    return deepest;
}

ExactResult exact_fronts(const Instance& instance, int d_max, int s_max, int k_max,
                         bool strict_adjacency, int threads) {
    if (k_max < 1) throw ValidationError("k_max must be >= 1");
    auto run = run_block_algorithm(instance, d_max, s_max, threads);

    ExactResult result;
    result.eval_count = run.eval_count;
    result.d_max = d_max;
    result.s_max = s_max;
    result.t_max = run.t_max;

    // Unique rounded objective tuples; +inf records represent no strategy.
    std::unordered_map<std::uint64_t, TupleInfo> tuples;
    for (std::uint32_t i = 0; i < run.records.size(); ++i) {
        const auto& rec = run.records[i];
        if (std::isinf(rec.lf1)) continue;
        const auto key = pack_tuple(rec.depth_bound, rec.switches, rec.non_ref,
                                    lf1_to_deci(rec.lf1));
        auto [it, inserted] = tuples.try_emplace(key);
        if (inserted || rec.lf1 < it->second.min_lf1) {
            it->second.min_lf1 = rec.lf1;
            it->second.best_record = i;
        }
    }
    result.feasible = !tuples.empty();
    if (!result.feasible) return result;

    // Only the k_max best rounded loadings per discrete triple can reach a
    // front <= k_max: triple-mates below a point form a dominating chain.
    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> by_triple;
    for (const auto& [key, info] : tuples) by_triple[key >> 40].push_back(key);
    std::vector<std::uint64_t> candidates;
    for (auto& [triple, keys] : by_triple) {
        std::sort(keys.begin(), keys.end());
        keys.resize(std::min<std::size_t>(keys.size(), static_cast<std::size_t>(k_max)));
        candidates.insert(candidates.end(), keys.begin(), keys.end());
    }
    std::sort(candidates.begin(), candidates.end());  // linear extension of dominance

    const int beyond = k_max + 1;
    std::vector<int> rank(candidates.size(), 1);
    for (std::size_t i = 0; i < candidates.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (rank[j] >= rank[i] && tuple_dominates(candidates[j], candidates[i]))
                rank[i] = std::min(rank[j] + 1, beyond);

    std::unordered_map<std::uint64_t, std::size_t> entry_of;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (rank[i] > k_max) continue;
        const auto key = candidates[i];
        ExactFrontEntry entry;
        entry.front_rank = rank[i];
        entry.depth = static_cast<int>((key >> 56) & 0xff);
        entry.switches = static_cast<int>((key >> 48) & 0xff);
        entry.non_ref = static_cast<int>((key >> 40) & 0xff);
        entry.lf1 = tuples[key].min_lf1;
        entry.lf1_rounded = static_cast<double>(static_cast<long long>(key & 0xffffffffffULL)) /
                            10.0;
        entry.strategy_count = 0;
        entry_of.emplace(key, result.entries.size());
        result.entries.push_back(std::move(entry));
    }

    // Aggregate strategy counts over every record matching a front tuple.
    std::vector<std::vector<std::uint32_t>> matches(result.entries.size());
    for (std::uint32_t i = 0; i < run.records.size(); ++i) {
        const auto& rec = run.records[i];
        if (std::isinf(rec.lf1)) continue;
        const auto key = pack_tuple(rec.depth_bound, rec.switches, rec.non_ref,
                                    lf1_to_deci(rec.lf1));
        auto it = entry_of.find(key);
        if (it != entry_of.end()) matches[it->second].push_back(i);
    }

    CandidateCache cache(instance, d_max);
    for (std::size_t e = 0; e < result.entries.size(); ++e) {
        auto& entry = result.entries[e];
        for (std::uint32_t i : matches[e]) {
            const auto& rec = run.records[i];
            entry.strategy_count +=
                count_with_cache(instance, rec, rec.lf1, strict_adjacency, cache);
        }
        // Representative from the record with minimal unrounded loading,
        // enumeration order breaking ties; fall back on repair failures.
        std::sort(matches[e].begin(), matches[e].end(), [&](std::uint32_t a, std::uint32_t b) {
            if (run.records[a].lf1 != run.records[b].lf1)
                return run.records[a].lf1 < run.records[b].lf1;
            return a < b;
        });
        for (std::uint32_t i : matches[e]) {
            try {
                entry.representative = materialize_with_cache(instance, run.records[i], cache);
                break;
            } catch (const InfeasibleError&) {
                continue;
            }
        }
    }

    std::sort(result.entries.begin(), result.entries.end(),
              [](const ExactFrontEntry& a, const ExactFrontEntry& b) {
                  return std::tie(a.front_rank, a.depth, a.switches, a.non_ref, a.lf1_rounded) <
                         std::tie(b.front_rank, b.depth, b.switches, b.non_ref, b.lf1_rounded);
              });
    return result;
}

BigCount count_evaluations(int d_max, int l_max, int t_max) {
    if (t_max < 1) throw ValidationError("t_max must be >= 1");
    if (d_max < 0) throw ValidationError("d_max must be >= 0");
    if (l_max < 0 || l_max > t_max - 1)
        throw ValidationError("l_max " + std::to_string(l_max) + " outside 0.." +
                              std::to_string(t_max - 1));
    BigCount sum = 0;
    BigCount binom = 1;             // C(t_max-1, l), updated incrementally
    BigCount fib_a = 2, fib_b = 3;  // F_3, F_4
    for (int l = 0; l <= l_max; ++l) {
        if (l > 0) binom = binom * (t_max - l) / l;
        sum += binom * fib_a;
        BigCount next = fib_a + fib_b;
        fib_a = fib_b;
        fib_b = next;
    }
    return sum * (d_max + 1);
}

}  // namespace topoplan
