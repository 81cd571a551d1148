#include "topoplan/moea.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_map>

#include "topoplan/errors.hpp"

namespace topoplan {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::optional<MoeaConfig> named_config(std::string_view name) {
    if (name.size() != 6 || name.substr(0, 2) != "pm" || name[4] != '-') return std::nullopt;
    MoeaConfig config;
    const auto pm = name.substr(2, 2);
    if (pm == "05")
        config.p_m = 0.05;
    else if (pm == "10")
        config.p_m = 0.10;
    else if (pm == "15")
        config.p_m = 0.15;
    else if (pm == "20")
        config.p_m = 0.20;
    else
        return std::nullopt;
    switch (name[5]) {
        case 'S': config.l_bar = config.d_bar = 30; break;
        case 'M': config.l_bar = config.d_bar = 45; break;
        case 'L': config.l_bar = config.d_bar = 60; break;
        default: return std::nullopt;
    }
    return config;
}

namespace {

void validate_config(const Instance& instance, const MoeaConfig& config) {
    if (config.l_bar < 0 || config.d_bar < 0)
        throw ValidationError("sampling sizes must be >= 0");
    if (config.d_max < 0 || config.d_max > instance.max_depth())
        throw ValidationError("d_max outside instance depth range");
    if (config.s_max < 0 || config.s_max > instance.t_max() - 1)
        throw ValidationError("s_max outside 0..t_max-1");
    if (config.p_m < 0.0 || config.p_m > 1.0)
        throw ValidationError("mutation probability outside [0, 1]");
    if (config.k_crossover < 1) throw ValidationError("crossover point count must be >= 1");
    if (config.generations < 0) throw ValidationError("generations must be >= 0");
    if (config.n_reference_directions < 4)
        throw ValidationError("need at least as many reference directions as objectives");
}

// Topologies (including the reference) available at every step of the block.
class BlockPoolCache {
public:
    explicit BlockPoolCache(const Instance& instance) : instance_(instance) {}

    const std::vector<TopologyId>& pool(int t_s, int t_e) {
        const int key = t_s * instance_.t_max() + t_e;
        auto it = pools_.find(key);
        if (it != pools_.end()) return it->second;
        std::vector<TopologyId> ids;
        for (TopologyId id : instance_.available_at(t_s)) {
            bool everywhere = true;
            for (int t = t_s + 1; t <= t_e; ++t) {
                if (!instance_.available(id, t)) {
                    everywhere = false;
                    break;
                }
            }
            if (everywhere) ids.push_back(id);
        }
        return pools_.emplace(key, std::move(ids)).first->second;
    }

private:
    const Instance& instance_;
    std::unordered_map<int, std::vector<TopologyId>> pools_;
};

// Floyd's algorithm: l distinct values from 1..m, uniform, then sorted.
std::vector<int> sample_cuts(int l, int m, std::mt19937_64& rng) {
    std::vector<int> cuts;
    cuts.reserve(l);
    for (int j = m - l + 1; j <= m; ++j) {
        std::uniform_int_distribution<int> dist(1, j);
        int pos = dist(rng);
        if (std::find(cuts.begin(), cuts.end(), pos) != cuts.end())
            cuts.push_back(j);
        else
            cuts.push_back(pos);
    }
    std::sort(cuts.begin(), cuts.end());
    return cuts;
}

}  // namespace

Population init_population(const Instance& instance, const MoeaConfig& config,
                           std::mt19937_64& rng) {
    validate_config(instance, config);
    const int t_max = instance.t_max();
    Population population;
    population.reserve(config.population_size(t_max));
    BlockPoolCache pools(instance);

    // Switch-count strata: one random block configuration, one topology per
    // block, adjacent equal draws rejected so the stratum label is realized.
    for (int l = 0; l < t_max; ++l) {
        const long budget = 100L * std::max(config.l_bar, 1);
        long attempts = 0;
        int produced = 0;
        while (produced < config.l_bar) {
            if (++attempts > budget)
                throw ValidationError("switch stratum l=" + std::to_string(l) +
                                      " unsatisfiable after " + std::to_string(budget) +
                                      " resamples");
            const auto cuts = sample_cuts(l, t_max - 1, rng);
            Strategy strategy;
            strategy.genes.assign(t_max, instance.reference_id());
            bool ok = true;
            TopologyId prev = 0;
            int start = 0;
            for (int b = 0; b <= l; ++b) {
                const int end = b < l ? cuts[b] - 1 : t_max - 1;
                const auto& pool = pools.pool(start, end);
                if (pool.empty()) {
                    ok = false;
                    break;
                }
                TopologyId pick = 0;
                bool found = false;
                for (int retry = 0; retry < 50 && !found; ++retry) {
                    std::uniform_int_distribution<std::size_t> dist(0, pool.size() - 1);
                    pick = pool[dist(rng)];
                    found = b == 0 || pick != prev;
                }
                if (!found) {
                    ok = false;
                    break;
                }
                for (int t = start; t <= end; ++t) strategy.genes[t] = pick;
                prev = pick;
                start = end + 1;
            }
            if (!ok) continue;
            population.push_back({std::move(strategy), {}});
            population.back().objectives = evaluate(instance, population.back().strategy);
            ++produced;
        }
    }

    // Depth strata: uniform per-step draws capped at depth d; draws whose
    // realized depth falls short of the target are resampled.
    std::vector<std::vector<std::vector<TopologyId>>> capped(config.d_max + 1);
    for (int d = 1; d <= config.d_max; ++d) {
        capped[d].resize(t_max);
        for (int t = 0; t < t_max; ++t)
            for (TopologyId id : instance.available_at(t))
                if (instance.depth_of(id) <= d) capped[d][t].push_back(id);
    }
    for (int d = 1; d <= config.d_max; ++d) {
        const long budget = 100L * std::max(config.d_bar, 1);
        long attempts = 0;
        int produced = 0;
        while (produced < config.d_bar) {
            if (++attempts > budget)
                throw ValidationError("depth stratum d=" + std::to_string(d) +
                                      " unsatisfiable after " + std::to_string(budget) +
                                      " resamples");
            Strategy strategy;
            strategy.genes.resize(t_max);
            int realized = 0;
            bool ok = true;
            for (int t = 0; t < t_max; ++t) {
                const auto& pool = capped[d][t];
                if (pool.empty()) {
                    ok = false;
                    break;
                }
                std::uniform_int_distribution<std::size_t> dist(0, pool.size() - 1);
                strategy.genes[t] = pool[dist(rng)];
                realized = std::max(realized, instance.depth_of(strategy.genes[t]));
            }
            if (!ok || realized != d) continue;
            population.push_back({std::move(strategy), {}});
            population.back().objectives = evaluate(instance, population.back().strategy);
            ++produced;
        }
    }

    Strategy all_reference;
    all_reference.genes.assign(t_max, instance.reference_id());
    population.push_back({all_reference, evaluate(instance, all_reference)});
    return population;
}

Population init_population(const Instance& instance, const MoeaConfig& config) {
    std::mt19937_64 rng(config.seed);
    return init_population(instance, config, rng);
}

std::pair<Strategy, Strategy> crossover_kpoint(const Strategy& a, const Strategy& b, int k,
                                               std::mt19937_64& rng) {
    if (a.genes.size() != b.genes.size())
        throw ValidationError("crossover parents must have equal length");
    const int len = static_cast<int>(a.genes.size());
    Strategy c1 = a, c2 = b;
    const int cuts_wanted = std::min(k, len - 1);
    if (cuts_wanted <= 0) return {c1, c2};

    const auto cuts = sample_cuts(cuts_wanted, len - 1, rng);
    bool swapped = false;
    std::size_t cut_idx = 0;
    for (int t = 0; t < len; ++t) {
        if (cut_idx < cuts.size() && t == cuts[cut_idx]) {
            swapped = !swapped;
            ++cut_idx;
        }
        if (swapped) std::swap(c1.genes[t], c2.genes[t]);
    }
    return {c1, c2};
}

Strategy mutate_random_reset(const Instance& instance, const Strategy& s, double p_m,
                             std::mt19937_64& rng) {
    Strategy result = s;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int t = 0; t < static_cast<int>(result.genes.size()); ++t) {
        if (coin(rng) >= p_m) continue;
        const auto& pool = instance.available_at(t);
        std::uniform_int_distribution<std::size_t> dist(0, pool.size() - 1);
        result.genes[t] = pool[dist(rng)];
    }
    return result;
}

namespace {

void project_to_simplex(std::vector<double>& v) {
    std::vector<double> u = v;
    std::sort(u.begin(), u.end(), std::greater<>());
    double cumulative = 0.0;
    double theta = 0.0;
    int rho = 0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        cumulative += u[j];
        const double candidate = (1.0 - cumulative) / static_cast<double>(j + 1);
        if (u[j] + candidate > 0.0) {
            rho = static_cast<int>(j + 1);
            theta = candidate;
        }
    }
    (void)rho;
    for (auto& x : v) x = std::max(x + theta, 0.0);
}

double riesz_energy(const std::vector<std::vector<double>>& points, double s) {
    double energy = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            double dist2 = 0.0;
            for (std::size_t c = 0; c < points[i].size(); ++c) {
                const double diff = points[i][c] - points[j][c];
                dist2 += diff * diff;
            }
            energy += 1.0 / std::pow(std::max(dist2, 1e-24), s / 2.0);
        }
    }
    return energy;
}

void das_dennis(std::vector<std::vector<double>>& out, std::vector<int>& partial, int dim,
                int left, int index) {
    if (index == dim - 1) {
        partial[index] = left;
        std::vector<double> point(dim);
        const int total = std::accumulate(partial.begin(), partial.end(), 0);
        for (int c = 0; c < dim; ++c) point[c] = static_cast<double>(partial[c]) / total;
        out.push_back(std::move(point));
        return;
    }
    for (int v = 0; v <= left; ++v) {
        partial[index] = v;
        das_dennis(out, partial, dim, left - v, index + 1);
    }
}

}  // namespace

ReferenceDirections generate_reference_directions(int n, int dim, std::uint64_t seed) {
    if (dim < 1) throw ValidationError("dimension must be >= 1");
    if (n < dim) throw ValidationError("need at least dim directions");

    ReferenceDirections result;
    result.dim = dim;
    if (dim == 1) {
        result.directions.assign(n, {1.0});
        return result;
    }

    // Largest lattice that fits, seeded jitter for the shortfall.
    int h = 1;
    auto lattice_size = [&](int hh) {
        double size = 1.0;
        for (int i = 1; i <= dim - 1; ++i) size = size * (hh + i) / i;
        return size;
    };
    while (lattice_size(h + 1) <= n) ++h;
    std::vector<std::vector<double>> points;
    std::vector<int> partial(dim);
    das_dennis(points, partial, dim, h, 0);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(1e-9, 1.0);
    while (static_cast<int>(points.size()) < n) {
        std::vector<double> point(dim);
        double sum = 0.0;
        for (auto& x : point) {
            x = -std::log(unit(rng));
            sum += x;
        }
        for (auto& x : point) x /= sum;
        points.push_back(std::move(point));
    }
    points.resize(n);

    // Riesz s-energy descent with backtracking, projected to the simplex.
    const double s = 2.0 * dim;
    double energy = riesz_energy(points, s);
    double step = 1e-2;
    std::vector<std::vector<double>> gradient(n, std::vector<double>(dim));
    for (int iter = 0; iter < 1000; ++iter) {
        for (auto& row : gradient) std::fill(row.begin(), row.end(), 0.0);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                double dist2 = 0.0;
                for (int c = 0; c < dim; ++c) {
                    const double diff = points[i][c] - points[j][c];
                    dist2 += diff * diff;
                }
                dist2 = std::max(dist2, 1e-24);
                const double scale = -s / std::pow(dist2, s / 2.0 + 1.0);
                for (int c = 0; c < dim; ++c) {
                    const double diff = points[i][c] - points[j][c];
                    gradient[i][c] += scale * diff;
                    gradient[j][c] -= scale * diff;
                }
            }
        }
        double max_norm = 0.0;
        for (const auto& row : gradient) {
            double norm = 0.0;
            for (double g : row) norm += g * g;
            max_norm = std::max(max_norm, std::sqrt(norm));
        }
        if (max_norm < 1e-15) break;

        auto trial = points;
        for (int i = 0; i < n; ++i) {
            for (int c = 0; c < dim; ++c) trial[i][c] -= step / max_norm * gradient[i][c];
            project_to_simplex(trial[i]);
        }
        const double trial_energy = riesz_energy(trial, s);
        if (trial_energy < energy) {
            const double decrease = energy - trial_energy;
            points = std::move(trial);
            energy = trial_energy;
            step *= 1.2;
            if (decrease < 1e-8) break;
        } else {
            step *= 0.5;
            if (step < 1e-12) break;
        }
    }

    for (auto& point : points) {
        double sum = std::accumulate(point.begin(), point.end(), 0.0);
        for (auto& x : point) x /= sum;
    }
    result.directions = std::move(points);
    return result;
}

namespace {

int bound_violation(const ObjectiveVector& v, const DominanceBounds& bounds) {
    return std::max(0, v.depth - bounds.d_max) + std::max(0, v.switches - bounds.s_max);
}

bool constrained_dominates(const ObjectiveVector& a, const ObjectiveVector& b,
                           const std::optional<DominanceBounds>& bounds) {
    if (bounds) {
        const int va = bound_violation(a, *bounds);
        const int vb = bound_violation(b, *bounds);
        if (va != vb) return va < vb;
        if (va > 0) return false;  // equal nonzero violations: incomparable
    }
    return dominates(a, b);
}

// Front ranks via longest-dominating-chain DP; the sort key below is a
// linear extension of constrained dominance.
std::vector<int> front_ranks(const Population& population,
                             const std::optional<DominanceBounds>& bounds) {
    const std::size_t n = population.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto key = [&](std::size_t i) {
        const auto& v = population[i].objectives;
        const int violation = bounds ? bound_violation(v, *bounds) : 0;
        return std::make_tuple(violation, v.lf1, v.depth, v.switches, v.non_ref);
    };
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return key(a) < key(b); });

    std::vector<int> rank(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const auto a = order[j], b = order[i];
            if (rank[a] >= rank[b] &&
                constrained_dominates(population[a].objectives, population[b].objectives, bounds))
                rank[b] = rank[a] + 1;
        }
    }
    return rank;
}

struct Normalizer {
    std::array<double, 4> ideal;
    std::array<double, 4> span;

    std::array<double, 4> operator()(const ObjectiveVector& v) const {
        const std::array<double, 4> raw{v.lf1, static_cast<double>(v.depth),
                                        static_cast<double>(v.switches),
                                        static_cast<double>(v.non_ref)};
        std::array<double, 4> out;
        for (int c = 0; c < 4; ++c) out[c] = (raw[c] - ideal[c]) / span[c];
        return out;
    }
};

// Deb-Jain normalization: ideal point, ASF extreme points, hyperplane
// intercepts; falls back to per-objective maxima when degenerate.
Normalizer make_normalizer(const Population& population, const std::vector<std::size_t>& members) {
    Normalizer norm;
    std::array<std::array<double, 4>, 4> extremes;
    norm.ideal = {kInf, kInf, kInf, kInf};
    std::array<double, 4> maxima{-kInf, -kInf, -kInf, -kInf};
    auto raw = [&](std::size_t i) {
        const auto& v = population[i].objectives;
        return std::array<double, 4>{v.lf1, static_cast<double>(v.depth),
                                     static_cast<double>(v.switches),
                                     static_cast<double>(v.non_ref)};
    };
    for (std::size_t i : members) {
        const auto values = raw(i);
        for (int c = 0; c < 4; ++c) {
            norm.ideal[c] = std::min(norm.ideal[c], values[c]);
            maxima[c] = std::max(maxima[c], values[c]);
        }
    }
    for (int axis = 0; axis < 4; ++axis) {
        double best = kInf;
        for (std::size_t i : members) {
            const auto values = raw(i);
            double asf = -kInf;
            for (int c = 0; c < 4; ++c) {
                const double w = c == axis ? 1.0 : 1e-6;
                asf = std::max(asf, (values[c] - norm.ideal[c]) / w);
            }
            if (asf < best) {
                best = asf;
                extremes[axis] = values;
            }
        }
    }

    // Solve E x = 1 for the hyperplane through the extreme points.
    std::array<std::array<double, 5>, 4> m;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) m[r][c] = extremes[r][c] - norm.ideal[c];
        m[r][4] = 1.0;
    }
    bool singular = false;
    for (int col = 0; col < 4 && !singular; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        if (std::abs(m[pivot][col]) < 1e-10) {
            singular = true;
            break;
        }
        std::swap(m[col], m[pivot]);
        for (int r = col + 1; r < 4; ++r) {
            const double factor = m[r][col] / m[col][col];
            for (int c = col; c < 5; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    std::array<double, 4> plane{};
    if (!singular) {
        for (int r = 3; r >= 0; --r) {
            double value = m[r][4];
            for (int c = r + 1; c < 4; ++c) value -= m[r][c] * plane[c];
            plane[r] = value / m[r][r];
        }
    }
    for (int c = 0; c < 4; ++c) {
        double intercept = kInf;
        if (!singular && plane[c] > 1e-10) intercept = 1.0 / plane[c];
        if (!std::isfinite(intercept) || intercept < 1e-10)
            intercept = maxima[c] - norm.ideal[c];  // fallback
        norm.span[c] = std::max(intercept, 1e-10);
    }
    return norm;
}

double perpendicular_distance(const std::array<double, 4>& point,
                              const std::vector<double>& direction) {
    double dot = 0.0, norm2 = 0.0;
    for (int c = 0; c < 4; ++c) {
        dot += point[c] * direction[c];
        norm2 += direction[c] * direction[c];
    }
    const double scale = dot / norm2;
    double dist2 = 0.0;
    for (int c = 0; c < 4; ++c) {
        const double diff = point[c] - scale * direction[c];
        dist2 += diff * diff;
    }
    return std::sqrt(dist2);
}

}  // namespace

Population nsga3_select(const Population& candidates, int target_size,
                        const ReferenceDirections& dirs, std::mt19937_64& rng,
                        const std::optional<DominanceBounds>& bounds) {
    if (target_size <= 0) throw ValidationError("target size must be positive");
    if (static_cast<int>(candidates.size()) < target_size)
        throw ValidationError("fewer candidates than the target size");
    if (dirs.dim != 4 || dirs.directions.empty())
        throw ValidationError("reference directions must be 4-dimensional and non-empty");

    const auto ranks = front_ranks(candidates, bounds);
    const int max_rank = *std::max_element(ranks.begin(), ranks.end());
    std::vector<std::vector<std::size_t>> fronts(max_rank);
    for (std::size_t i = 0; i < candidates.size(); ++i) fronts[ranks[i] - 1].push_back(i);

    std::vector<std::size_t> selected;
    int splitting = -1;
    for (int f = 0; f < max_rank; ++f) {
        if (selected.size() + fronts[f].size() <= static_cast<std::size_t>(target_size)) {
            selected.insert(selected.end(), fronts[f].begin(), fronts[f].end());
            if (selected.size() == static_cast<std::size_t>(target_size)) break;
        } else {
            splitting = f;
            break;
        }
    }

    if (splitting >= 0) {
        auto& pool = fronts[splitting];
        std::vector<std::size_t> considered = selected;
        considered.insert(considered.end(), pool.begin(), pool.end());
        const auto norm = make_normalizer(candidates, considered);

        const std::size_t n_dirs = dirs.directions.size();
        std::vector<std::size_t> assoc(candidates.size());
        std::vector<double> assoc_dist(candidates.size());
        for (std::size_t i : considered) {
            const auto point = norm(candidates[i].objectives);
            double best = kInf;
            std::size_t best_dir = 0;
            for (std::size_t d = 0; d < n_dirs; ++d) {
                const double dist = perpendicular_distance(point, dirs.directions[d]);
                if (dist < best) {
                    best = dist;
                    best_dir = d;
                }
            }
            assoc[i] = best_dir;
            assoc_dist[i] = best;
        }

        std::vector<int> niche_count(n_dirs, 0);
        for (std::size_t i : selected) ++niche_count[assoc[i]];
        std::vector<std::vector<std::size_t>> potential(n_dirs);
        for (std::size_t i : pool) potential[assoc[i]].push_back(i);
        std::vector<bool> active(n_dirs, true);

        while (selected.size() < static_cast<std::size_t>(target_size)) {
            int min_count = std::numeric_limits<int>::max();
            for (std::size_t d = 0; d < n_dirs; ++d)
                if (active[d]) min_count = std::min(min_count, niche_count[d]);
            std::vector<std::size_t> minimal;
            for (std::size_t d = 0; d < n_dirs; ++d)
                if (active[d] && niche_count[d] == min_count) minimal.push_back(d);
            std::uniform_int_distribution<std::size_t> pick_dir(0, minimal.size() - 1);
            const std::size_t dir = minimal[pick_dir(rng)];

            auto& members = potential[dir];
            if (members.empty()) {
                active[dir] = false;
                continue;
            }
            std::size_t chosen_pos;
            if (niche_count[dir] == 0) {
                chosen_pos = 0;
                for (std::size_t p = 1; p < members.size(); ++p)
                    if (assoc_dist[members[p]] < assoc_dist[members[chosen_pos]]) chosen_pos = p;
            } else {
                std::uniform_int_distribution<std::size_t> pick_member(0, members.size() - 1);
                chosen_pos = pick_member(rng);
            }
            selected.push_back(members[chosen_pos]);
            members.erase(members.begin() + static_cast<std::ptrdiff_t>(chosen_pos));
            ++niche_count[dir];
        }
    }

    std::sort(selected.begin(), selected.end());
    Population result;
    result.reserve(selected.size());
    for (std::size_t i : selected) result.push_back(candidates[i]);
    return result;
}

namespace {

std::vector<ObjectiveVector> population_front(const Population& population,
                                              const std::optional<DominanceBounds>& bounds) {
    const auto ranks = front_ranks(population, bounds);
    std::vector<ObjectiveVector> points;
    for (std::size_t i = 0; i < population.size(); ++i)
        if (ranks[i] == 1) points.push_back(population[i].objectives);
    return pareto_front(points);  // dedupe and canonical order
}

}  // namespace

RunTrace run_moea(const Instance& instance, const MoeaConfig& config) {
    validate_config(instance, config);
    std::mt19937_64 rng(config.seed);

    RunTrace trace;
    Population population = init_population(instance, config, rng);
    const int pop_size = static_cast<int>(population.size());
    const auto dirs = generate_reference_directions(config.n_reference_directions, 4, config.seed);
    const DominanceBounds bounds{config.d_max, config.s_max};

    trace.fronts_per_generation.push_back(population_front(population, bounds));

    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> pick(0, population.size() - 1);
    for (int gen = 0; gen < config.generations; ++gen) {
        const auto ranks = front_ranks(population, bounds);
        auto tournament = [&]() -> const Individual& {
            const std::size_t a = pick(rng);
            const std::size_t b = pick(rng);
            if (ranks[a] != ranks[b]) return population[ranks[a] < ranks[b] ? a : b];
            return population[coin(rng) < 0.5 ? a : b];
        };

        Population offspring;
        offspring.reserve(pop_size + 1);
        while (static_cast<int>(offspring.size()) < pop_size) {
            const Individual& p1 = tournament();
            const Individual& p2 = tournament();
            Strategy c1 = p1.strategy, c2 = p2.strategy;
            if (coin(rng) < config.crossover_probability())
                std::tie(c1, c2) = crossover_kpoint(p1.strategy, p2.strategy, config.k_crossover,
                                                    rng);
            c1 = mutate_random_reset(instance, c1, config.p_m, rng);
            c2 = mutate_random_reset(instance, c2, config.p_m, rng);
            offspring.push_back({std::move(c1), {}});
            offspring.back().objectives = evaluate(instance, offspring.back().strategy);
            if (static_cast<int>(offspring.size()) < pop_size) {
                offspring.push_back({std::move(c2), {}});
                offspring.back().objectives = evaluate(instance, offspring.back().strategy);
            }
        }

        Population candidates = population;
        candidates.insert(candidates.end(), offspring.begin(), offspring.end());
        population = nsga3_select(candidates, pop_size, dirs, rng, bounds);
        trace.fronts_per_generation.push_back(population_front(population, bounds));
    }

    trace.final_population = std::move(population);
    return trace;
}

std::vector<std::vector<ObjectiveVector>> combine_seeds(const std::vector<RunTrace>& traces) {
    if (traces.empty()) return {};
    const std::size_t generations = traces.front().fronts_per_generation.size();
    for (const auto& trace : traces)
        if (trace.fronts_per_generation.size() != generations)
            throw ValidationError("traces have mismatched generation counts");

    std::vector<std::vector<ObjectiveVector>> combined(generations);
    for (std::size_t g = 0; g < generations; ++g) {
        std::vector<ObjectiveVector> pool;
        for (const auto& trace : traces)
            pool.insert(pool.end(), trace.fronts_per_generation[g].begin(),
                        trace.fronts_per_generation[g].end());
        combined[g] = pareto_front(pool);
    }
    return combined;
}

}  // namespace topoplan
