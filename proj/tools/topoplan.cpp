#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "topoplan/errors.hpp"
#include "topoplan/exact.hpp"
#include "topoplan/instance.hpp"
#include "topoplan/metrics.hpp"
#include "topoplan/moea.hpp"
#include "topoplan/objectives.hpp"
#include "topoplan/oracle.hpp"
#include "topoplan/parallel.hpp"

namespace fs = std::filesystem;
using namespace topoplan;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitIo = 3;

std::string format_double(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::string format_rounded(double x) {
    if (std::isinf(x)) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.1f", x);
    return buf;
}

std::string join_genes(const Strategy& strategy) {
    std::string out;
    for (std::size_t t = 0; t < strategy.genes.size(); ++t) {
        if (t > 0) out += ';';
        out += std::to_string(strategy.genes[t]);
    }
    return out;
}

std::map<int, int> parse_depth_counts(const std::string& text) {
    std::map<int, int> counts;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw ValidationError("bad --depth-counts entry '" + item + "', expected d:c");
        counts[std::stoi(item.substr(0, colon))] = std::stoi(item.substr(colon + 1));
    }
    if (counts.empty()) throw ValidationError("--depth-counts must not be empty");
    return counts;
}

std::pair<double, double> parse_range(const std::string& text, const char* flag) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw ValidationError(std::string("bad ") + flag + " '" + text + "', expected lo:hi");
    return {std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1))};
}

void write_front_csv(const ExactResult& result, const fs::path& file) {
    std::ofstream out(file);
    if (!out) throw IoError("cannot write " + file.string());
    out << "front_rank,depth,switches,non_ref_steps,lf1,lf1_rounded,strategy_count,"
           "representative\n";
    for (const auto& entry : result.entries) {
        out << entry.front_rank << ',' << entry.depth << ',' << entry.switches << ','
            << entry.non_ref << ',' << format_double(entry.lf1) << ','
            << format_rounded(entry.lf1_rounded) << ',' << entry.strategy_count.str() << ',';
        if (entry.representative) out << join_genes(*entry.representative);
        out << '\n';
    }
    if (!out) throw IoError("write failed for " + file.string());
}

struct FrontRow {
    int front_rank;
    ObjectiveVector objectives;  // lf1 holds the rounded value
    BigCount strategy_count;
};

std::vector<FrontRow> read_front_csv(const fs::path& file) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot open " + file.string());
    std::string line;
    if (!std::getline(in, line)) throw ValidationError("empty front file " + file.string());
    std::vector<FrontRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream stream(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(stream, field, ',')) fields.push_back(field);
        if (fields.size() < 7) throw ValidationError("bad front row: " + line);
        FrontRow row;
        row.front_rank = std::stoi(fields[0]);
        row.objectives.depth = std::stoi(fields[1]);
        row.objectives.switches = std::stoi(fields[2]);
        row.objectives.non_ref = std::stoi(fields[3]);
        row.objectives.lf1 = std::stod(fields[5]);
        row.strategy_count = BigCount(fields[6]);
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_trace_csv(const std::vector<std::vector<ObjectiveVector>>& fronts,
                     const fs::path& file) {
    std::ofstream out(file);
    if (!out) throw IoError("cannot write " + file.string());
    out << "generation,lf1,depth,switches,non_ref\n";
    for (std::size_t g = 0; g < fronts.size(); ++g)
        for (const auto& p : fronts[g])
            out << g << ',' << format_double(p.lf1) << ',' << p.depth << ',' << p.switches << ','
                << p.non_ref << '\n';
}

std::vector<std::vector<ObjectiveVector>> read_trace_csv(const fs::path& file) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot open " + file.string());
    std::string line;
    if (!std::getline(in, line)) throw ValidationError("empty trace file " + file.string());
    std::vector<std::vector<ObjectiveVector>> generations;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream stream(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(stream, field, ',')) fields.push_back(field);
        if (fields.size() != 5) throw ValidationError("bad trace row: " + line);
        const auto g = static_cast<std::size_t>(std::stoul(fields[0]));
        if (g >= generations.size()) generations.resize(g + 1);
        generations[g].push_back({std::stod(fields[1]), std::stoi(fields[2]),
                                  std::stoi(fields[3]), std::stoi(fields[4])});
    }
    return generations;
}

NormalizationBounds read_bounds_json(const fs::path& file) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot open " + file.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("bad bounds file: " + std::string(e.what()));
    }
    auto parse = [](const nlohmann::json& node) {
        return ObjectiveVector{node.at("lf1").get<double>(), node.at("depth").get<int>(),
                               node.at("switches").get<int>(), node.at("non_ref").get<int>()};
    };
    return {parse(doc.at("ideal")), parse(doc.at("maximum"))};
}

int cmd_gen(const std::string& depth_counts, int t_max, std::uint64_t seed, double drop_rate,
            const std::string& lf1_range, const std::string& lf1_noise, const std::string& name,
            const fs::path& out_dir) {
    GeneratorConfig config;
    config.t_max = t_max;
    config.count_per_depth = parse_depth_counts(depth_counts);
    config.seed = seed;
    config.availability_drop_rate = drop_rate;
    if (!lf1_range.empty()) config.lf1_base_range = parse_range(lf1_range, "--lf1-range");
    if (!lf1_noise.empty()) config.lf1_noise_range = parse_range(lf1_noise, "--lf1-noise");
    config.name = name.empty() ? "synthetic-seed" + std::to_string(seed) : name;

    auto instance = generate_instance(config);
    store_instance(instance, out_dir);

    std::cout << "instance '" << instance.name() << "': " << instance.topology_count()
              << " topologies, t_max=" << instance.t_max() << "\n";
    std::cout << "depth histogram:";
    for (const auto& [depth, count] : depth_histogram(instance))
        std::cout << " " << depth << ":" << count;
    std::cout << "\n";
    return kExitOk;
}

int cmd_exact(const fs::path& instance_dir, int d_max, int s_max, int fronts, bool strict,
              bool count_evals, const fs::path& out_file) {
    auto instance = load_instance(instance_dir);
    auto result = exact_fronts(instance, d_max, s_max, fronts, strict);

    if (count_evals) {
        const auto expected = count_evaluations(d_max, s_max, instance.t_max());
        std::cout << "evaluations (closed form):  " << expected.str() << "\n";
        std::cout << "evaluations (instrumented): " << result.eval_count << "\n";
        if (expected != BigCount(result.eval_count))
            throw ValidationError("evaluation count mismatch");
    }
    if (!result.feasible) {
        std::cout << "no feasible configuration within bounds\n";
        return kExitInfeasible;
    }

    write_front_csv(result, out_file);
    std::cout << "wrote " << out_file.string() << ": ";
    for (int rank = 1; rank <= result.front_count(); ++rank)
        std::cout << (rank > 1 ? ", " : "") << "front " << rank << ": "
                  << result.front(rank).size() << " points";
    std::cout << "\n";
    return kExitOk;
}

int cmd_moea(const fs::path& instance_dir, const std::string& config_name, int l_bar, int d_bar,
             double pm, int generations, int seeds, std::uint64_t seed_base, int d_max_flag,
             int s_max_flag, int k_crossover, int ref_dirs, const fs::path& out_dir) {
    auto instance = load_instance(instance_dir);

    MoeaConfig config;
    if (!config_name.empty()) {
        auto named = named_config(config_name);
        if (!named) throw ValidationError("unknown configuration name '" + config_name + "'");
        config = *named;
    } else {
        config.l_bar = l_bar;
        config.d_bar = d_bar;
        config.p_m = pm;
    }
    config.generations = generations;
    config.k_crossover = k_crossover;
    config.n_reference_directions = ref_dirs;
    config.d_max = d_max_flag >= 0 ? d_max_flag : std::min(3, instance.max_depth());
    config.s_max = s_max_flag >= 0 ? s_max_flag : std::min(5, instance.t_max() - 1);

    fs::create_directories(out_dir);
    std::vector<RunTrace> traces(seeds);
    const int workers = resolve_threads(0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::min(workers, seeds))
#endif
    for (int i = 0; i < seeds; ++i) {
        MoeaConfig seed_config = config;
        seed_config.seed = seed_base + static_cast<std::uint64_t>(i);
        traces[i] = run_moea(instance, seed_config);
    }

    for (int i = 0; i < seeds; ++i)
        write_trace_csv(traces[i].fronts_per_generation,
                        out_dir / ("seed" + std::to_string(i) + "_trace.csv"));

    auto combined = combine_seeds(traces);
    write_trace_csv(combined, out_dir / "trace.csv");

    // Final front with one representative per point: the lexicographically
    // smallest realizing strategy across all seeds' final populations.
    std::map<std::tuple<double, int, int, int>, Strategy> representatives;
    for (const auto& trace : traces)
        for (const auto& member : trace.final_population) {
            const auto key = std::make_tuple(member.objectives.lf1, member.objectives.depth,
                                             member.objectives.switches, member.objectives.non_ref);
            auto it = representatives.find(key);
            if (it == representatives.end())
                representatives.emplace(key, member.strategy);
            else if (member.strategy < it->second)
                it->second = member.strategy;
        }
    {
        std::ofstream out(out_dir / "final_front.csv");
        if (!out) throw IoError("cannot write " + (out_dir / "final_front.csv").string());
        out << "generation,lf1,depth,switches,non_ref,representative\n";
        const std::size_t last = combined.size() - 1;
        for (const auto& p : combined.back()) {
            out << last << ',' << format_double(p.lf1) << ',' << p.depth << ',' << p.switches
                << ',' << p.non_ref << ',';
            auto it = representatives.find(std::make_tuple(p.lf1, p.depth, p.switches, p.non_ref));
            if (it != representatives.end()) out << join_genes(it->second);
            out << '\n';
        }
    }

    std::cout << "ran " << seeds << " seed(s), population "
              << config.population_size(instance.t_max()) << ", " << generations
              << " generation(s); final combined front: " << combined.back().size()
              << " points\n";
    return kExitOk;
}

int cmd_metrics(const fs::path& reference_file, const fs::path& approx_dir,
                const std::string& bounds_spec, const fs::path& instance_dir, int d_max, int s_max,
                int fronts, const fs::path& out_file) {
    const auto rows = read_front_csv(reference_file);
    ReferenceFronts reference;
    for (const auto& row : rows) {
        if (row.front_rank < 1) throw ValidationError("bad front rank in reference");
        if (static_cast<int>(reference.fronts.size()) < row.front_rank)
            reference.fronts.resize(row.front_rank);
        reference.fronts[row.front_rank - 1].push_back(row.objectives);
    }
    if (reference.fronts.empty()) throw ValidationError("reference file holds no points");
    const int k_max = std::min<int>(fronts, static_cast<int>(reference.fronts.size()));

    NormalizationBounds bounds;
    if (bounds_spec == "auto") {
        if (instance_dir.empty())
            throw ValidationError("--bounds auto requires --instance, --d-max and --s-max");
        auto instance = load_instance(instance_dir);
        auto run = run_block_algorithm(instance, d_max, s_max);
        bounds = bounds_from_records(run.records, d_max, s_max, instance.t_max());
    } else {
        bounds = read_bounds_json(bounds_spec);
    }

    for (const auto& front : reference.fronts)
        for (const auto& p : front)
            if (p.non_ref > bounds.maximum.non_ref || p.switches > bounds.maximum.switches ||
                p.depth > bounds.maximum.depth)
                throw ValidationError("reference points exceed the normalization bounds; "
                                      "mismatched horizon or bounds");

    const auto generations = read_trace_csv(approx_dir / "trace.csv");
    std::ofstream out(out_file);
    if (!out) throw IoError("cannot write " + out_file.string());
    out << "generation,igd_plus";
    for (int k = 1; k <= k_max; ++k) out << ",I_" << k;
    for (int k = 1; k <= k_max; ++k) out << ",Ihat_" << k;
    out << '\n';

    const auto& first_front = reference.fronts[0];
    for (std::size_t g = 0; g < generations.size(); ++g) {
        const auto& approx = generations[g];
        const double igd = igd_plus(approx, first_front, bounds);
        out << g << ',' << format_double(igd);
        std::vector<std::pair<std::size_t, double>> coverage(k_max);
        for (int k = 1; k <= k_max; ++k) coverage[k - 1] = front_coverage(approx, reference, k);
        for (int k = 1; k <= k_max; ++k) out << ',' << coverage[k - 1].first;
        for (int k = 1; k <= k_max; ++k) out << ',' << format_double(coverage[k - 1].second);
        out << '\n';
    }
    std::cout << "wrote " << out_file.string() << " (" << generations.size()
              << " generations, " << k_max << " reference fronts)\n";
    return kExitOk;
}

int cmd_oracle(const fs::path& instance_dir, int d_max, int s_max, int fronts,
               std::uint64_t limit, const fs::path& front_file) {
    auto instance = load_instance(instance_dir);
    OracleLimits limits;
    if (limit > 0) limits.max_strategy_count = limit;

    if (!front_file.empty()) {
        // Compare an existing front file against the blockwise oracle.
        const auto rows = read_front_csv(front_file);
        auto oracle = brute_force_blockwise_fronts(instance, d_max, s_max, fronts, limits);
        std::map<std::tuple<int, long long, int, int, int>, BigCount> expected;
        for (std::size_t f = 0; f < oracle.size(); ++f)
            for (const auto& p : oracle[f])
                expected[{static_cast<int>(f) + 1, lf1_to_deci(p.objectives.lf1),
                          p.objectives.depth, p.objectives.switches, p.objectives.non_ref}] =
                    p.loose_count;
        std::size_t seen = 0;
        for (const auto& row : rows) {
            if (row.front_rank > fronts) continue;
            const auto key = std::make_tuple(row.front_rank, lf1_to_deci(row.objectives.lf1),
                                             row.objectives.depth, row.objectives.switches,
                                             row.objectives.non_ref);
            auto it = expected.find(key);
            if (it == expected.end()) {
                std::cout << "MISMATCH: front " << row.front_rank << " point (depth="
                          << row.objectives.depth << ", switches=" << row.objectives.switches
                          << ", non_ref=" << row.objectives.non_ref << ", lf1="
                          << format_rounded(row.objectives.lf1)
                          << ") not found by the oracle\n";
                return kExitInfeasible;
            }
            ++seen;
        }
        if (seen != expected.size()) {
            std::cout << "MISMATCH: oracle found " << expected.size() << " points in fronts 1.."
                      << fronts << ", file has " << seen << "\n";
            return kExitInfeasible;
        }
        std::cout << "PASS: " << seen << " points across fronts 1.." << fronts
                  << " match the oracle\n";
        return kExitOk;
    }

    auto report = check_equivalence(instance, d_max, s_max, fronts, limits);
    if (!report.pass) {
        std::cout << "MISMATCH: " << report.detail << "\n";
        return kExitInfeasible;
    }
    std::cout << "PASS: " << report.detail << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and evolutionary day-ahead transmission topology planning"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a synthetic instance");
    std::string gen_counts, gen_range, gen_noise, gen_name;
    int gen_t_max = 24;
    std::uint64_t gen_seed = 0;
    double gen_drop = 0.0;
    fs::path gen_out;
    gen->add_option("--t-max", gen_t_max, "number of time steps")->required();
    gen->add_option("--depth-counts", gen_counts, "topologies per depth, d:c[,d:c...]")
        ->required();
    gen->add_option("--seed", gen_seed, "generator seed")->required();
    gen->add_option("--out", gen_out, "output directory")->required();
    gen->add_option("--drop-rate", gen_drop, "per-(topology,t) unavailability probability");
    gen->add_option("--lf1-range", gen_range, "base loading range lo:hi (percent)");
    gen->add_option("--lf1-noise", gen_noise, "per-step noise range lo:hi (percent)");
    gen->add_option("--name", gen_name, "instance name");

    // exact
    auto* exact = app.add_subcommand("exact", "enumerate the exact dominance fronts");
    fs::path exact_instance, exact_out = "front.csv";
    int exact_d_max = 0, exact_s_max = 0, exact_fronts_k = 10;
    bool exact_strict = false, exact_count_evals = false;
    exact->add_option("--instance", exact_instance, "instance directory")->required();
    exact->add_option("--d-max", exact_d_max, "maximum topological depth")->required();
    exact->add_option("--s-max", exact_s_max, "maximum switching time steps")->required();
    exact->add_option("--fronts", exact_fronts_k, "number of dominance fronts");
    exact->add_flag("--strict-adjacency", exact_strict,
                    "count only strategies whose coarsest block structure matches");
    exact->add_flag("--count-evals", exact_count_evals,
                    "print closed-form and instrumented evaluation counts");
    exact->add_option("--out", exact_out, "output front file");

    // moea
    auto* moea = app.add_subcommand("moea", "run the evolutionary optimizer");
    fs::path moea_instance, moea_out;
    std::string moea_config;
    int moea_l_bar = 30, moea_d_bar = 30, moea_generations = 100, moea_seeds = 15;
    int moea_d_max = -1, moea_s_max = -1, moea_k = 2, moea_dirs = 100;
    double moea_pm = 0.10;
    std::uint64_t moea_seed_base = 0;
    moea->add_option("--instance", moea_instance, "instance directory")->required();
    moea->add_option("--out", moea_out, "output run directory")->required();
    moea->add_option("--config", moea_config, "named configuration pm{05|10|15|20}-{S|M|L}");
    moea->add_option("--l-bar", moea_l_bar, "per-switch-count sample size");
    moea->add_option("--d-bar", moea_d_bar, "per-depth sample size");
    moea->add_option("--pm", moea_pm, "per-gene mutation probability");
    moea->add_option("--generations", moea_generations, "generations per seed");
    moea->add_option("--seeds", moea_seeds, "number of independent seeds");
    moea->add_option("--seed-base", moea_seed_base, "seed of the first run");
    moea->add_option("--d-max", moea_d_max, "depth bound (default min(3, instance depth))");
    moea->add_option("--s-max", moea_s_max, "switch bound (default min(5, t_max-1))");
    moea->add_option("--k-crossover", moea_k, "crossover point count");
    moea->add_option("--ref-dirs", moea_dirs, "number of reference directions");

    // metrics
    auto* metrics = app.add_subcommand("metrics", "score a run against a reference front");
    fs::path metrics_reference, metrics_approx, metrics_instance, metrics_out = "metrics.csv";
    std::string metrics_bounds = "auto";
    int metrics_fronts = 10, metrics_d_max = 3, metrics_s_max = 5;
    metrics->add_option("--reference", metrics_reference, "reference front.csv")->required();
    metrics->add_option("--approx", metrics_approx, "run directory with trace.csv")->required();
    metrics->add_option("--bounds", metrics_bounds, "'auto' or a bounds JSON file");
    metrics->add_option("--instance", metrics_instance, "instance directory (for auto bounds)");
    metrics->add_option("--d-max", metrics_d_max, "depth bound (for auto bounds)");
    metrics->add_option("--s-max", metrics_s_max, "switch bound (for auto bounds)");
    metrics->add_option("--fronts", metrics_fronts, "number of reference fronts to score");
    metrics->add_option("--out", metrics_out, "output metrics file");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "cross-check the solver by brute force");
    fs::path oracle_instance, oracle_front;
    int oracle_d_max = 0, oracle_s_max = 0, oracle_fronts = 3;
    std::uint64_t oracle_limit = 0;
    oracle->add_option("--instance", oracle_instance, "instance directory")->required();
    oracle->add_option("--d-max", oracle_d_max, "maximum topological depth")->required();
    oracle->add_option("--s-max", oracle_s_max, "maximum switching time steps")->required();
    oracle->add_option("--fronts", oracle_fronts, "fronts to compare");
    oracle->add_option("--limit", oracle_limit, "strategy-space refusal limit");
    oracle->add_option("--front", oracle_front, "compare an existing front file instead");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_gen(gen_counts, gen_t_max, gen_seed, gen_drop, gen_range, gen_noise,
                           gen_name, gen_out);
        if (exact->parsed())
            return cmd_exact(exact_instance, exact_d_max, exact_s_max, exact_fronts_k,
                             exact_strict, exact_count_evals, exact_out);
        if (moea->parsed())
            return cmd_moea(moea_instance, moea_config, moea_l_bar, moea_d_bar, moea_pm,
                            moea_generations, moea_seeds, moea_seed_base, moea_d_max, moea_s_max,
                            moea_k, moea_dirs, moea_out);
        if (metrics->parsed())
            return cmd_metrics(metrics_reference, metrics_approx, metrics_bounds,
                               metrics_instance, metrics_d_max, metrics_s_max, metrics_fronts,
                               metrics_out);
        if (oracle->parsed())
            return cmd_oracle(oracle_instance, oracle_d_max, oracle_s_max, oracle_fronts,
                              oracle_limit, oracle_front);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
