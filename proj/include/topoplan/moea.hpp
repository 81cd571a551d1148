#ifndef TOPOPLAN_MOEA_HPP
#define TOPOPLAN_MOEA_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "topoplan/instance.hpp"
#include "topoplan/objectives.hpp"

namespace topoplan {

struct MoeaConfig {
    int l_bar = 30;  // per-switch-count sample size
    int d_bar = 30;  // per-depth sample size
    int d_max = 3;
    int s_max = 5;
    double p_m = 0.10;  // per-gene mutation probability; crossover prob = 1 - p_m
    int k_crossover = 2;
    int n_reference_directions = 100;
    int generations = 100;
    std::uint64_t seed = 0;

    double crossover_probability() const { return 1.0 - p_m; }
    int population_size(int t_max) const { return t_max * l_bar + d_max * d_bar + 1; }
};

/// Named configurations pm{05,10,15,20}-{S,M,L}: mutation probability from the
/// prefix, sampling sizes 30/45/60 from the suffix. Empty optional on unknown
/// names.
std::optional<MoeaConfig> named_config(std::string_view name);

struct Individual {
    Strategy strategy;
    ObjectiveVector objectives;
};

using Population = std::vector<Individual>;

/// Well-spread points on the unit simplex for NSGA-III niching.
struct ReferenceDirections {
    int dim = 0;
    std::vector<std::vector<double>> directions;
};

/// Per-generation nondominated points of one run (index 0 is the initial
/// population) plus the final population.
struct RunTrace {
    std::vector<std::vector<ObjectiveVector>> fronts_per_generation;
    Population final_population;
};

/// Operational bounds for constraint-domination: in-bounds individuals
/// dominate out-of-bounds ones; out-of-bounds compare by total violation.
struct DominanceBounds {
    int d_max;
    int s_max;
};

/// Structure-guided initial population: l_bar strategies per switch count
/// (one random block configuration, one topology per block, adjacent equal
/// choices rejected), d_bar strategies per exact max depth 1..d_max, plus the
/// all-reference strategy. Throws ValidationError when a stratum cannot be
/// filled within the resample budget.
Population init_population(const Instance& instance, const MoeaConfig& config);
Population init_population(const Instance& instance, const MoeaConfig& config,
                           std::mt19937_64& rng);

/// k distinct cut positions chosen uniformly; offspring alternate parent
/// segments. Feasible by construction. k is capped at length - 1.
std::pair<Strategy, Strategy> crossover_kpoint(const Strategy& a, const Strategy& b, int k,
                                               std::mt19937_64& rng);

/// Each gene independently replaced, with probability p_m, by a uniform draw
/// from the topologies available at its step.
Strategy mutate_random_reset(const Instance& instance, const Strategy& s, double p_m,
                             std::mt19937_64& rng);

/// n simplex points: deterministic simplex-lattice start (seeded jitter fills
/// any shortfall) refined by Riesz s-energy descent (s = 2*dim) projected back
/// to the simplex until the energy decrease drops below 1e-8 or 1000 rounds.
ReferenceDirections generate_reference_directions(int n, int dim, std::uint64_t seed);

/// NSGA-III environmental selection: nondominated sorting (constraint-aware
/// when bounds are given), whole fronts while they fit, then reference-
/// direction niching on the splitting front. Deterministic per rng state.
Population nsga3_select(const Population& candidates, int target_size,
                        const ReferenceDirections& dirs, std::mt19937_64& rng,
                        const std::optional<DominanceBounds>& bounds = {});

/// Full evolutionary run, fully determined by config.seed.
RunTrace run_moea(const Instance& instance, const MoeaConfig& config);

/// Per-generation Pareto front over the union of all seeds' populations,
/// unique points only. Throws ValidationError on mismatched trace lengths.
std::vector<std::vector<ObjectiveVector>> combine_seeds(const std::vector<RunTrace>& traces);

}  // namespace topoplan

#endif  // TOPOPLAN_MOEA_HPP
