#ifndef TOPOPLAN_INSTANCE_HPP
#define TOPOPLAN_INSTANCE_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace topoplan {

using TopologyId = std::uint32_t;

struct TopologyRecord {
    TopologyId id;
    int depth;  // additional busbars vs. the reference; 0 iff reference

    friend bool operator==(const TopologyRecord&, const TopologyRecord&) = default;
};

/// Immutable topology dataset: per-topology depth, per-timestep availability,
/// per-(topology, timestep) worst-case N-1 loading values, and a distinguished
/// reference topology. A topology is available at t iff it has a loading value
/// there. Safe to share across threads once constructed.
class Instance {
public:
    Instance(std::string name, int t_max, TopologyId reference_id,
             std::vector<TopologyRecord> topologies,
             std::vector<std::vector<std::pair<TopologyId, double>>> rows_per_t);

    const std::string& name() const { return name_; }
    int t_max() const { return t_max_; }
    TopologyId reference_id() const { return reference_id_; }

    /// All topologies, ascending by id.
    const std::vector<TopologyRecord>& topologies() const { return topologies_; }
    std::size_t topology_count() const { return topologies_.size(); }
    int max_depth() const { return max_depth_; }

    bool has_topology(TopologyId id) const;
    int depth_of(TopologyId id) const;  // throws ValidationError on unknown id
    /// Dense index of `id` (its position in topologies()).
    std::size_t index_of(TopologyId id) const;

    /// Ids available at t, ascending. G_t in objective terms.
    const std::vector<TopologyId>& available_at(int t) const { return avail_ids_[t]; }
    /// Loading values aligned with available_at(t).
    const std::vector<double>& lf1_at(int t) const { return avail_lf1_[t]; }
    /// Dense indices aligned with available_at(t).
    const std::vector<std::uint32_t>& dense_indices_at(int t) const { return avail_idx_[t]; }

    bool available(TopologyId id, int t) const;
    double lf1(TopologyId id, int t) const;  // throws ValidationError if g not in G_t

    bool operator==(const Instance& other) const;

private:
    std::string name_;
    int t_max_;
    TopologyId reference_id_;
    std::vector<TopologyRecord> topologies_;             // ascending id
    std::vector<std::vector<TopologyId>> avail_ids_;     // per t, ascending
    std::vector<std::vector<double>> avail_lf1_;         // per t, aligned
    std::vector<std::vector<std::uint32_t>> avail_idx_;  // per t, aligned
    int max_depth_ = 0;
};

struct GeneratorConfig {
    int t_max = 24;
    std::map<int, int> count_per_depth;  // depth -> number of topologies; depth 0 forced to 1
    double availability_drop_rate = 0.0;
    std::pair<double, double> lf1_base_range{70.0, 180.0};
    std::pair<double, double> lf1_noise_range{-10.0, 10.0};
    std::uint64_t seed = 0;
    std::string name = "synthetic";
};

/// Loads an instance directory (manifest.json, topologies.csv, lf1.csv).
/// Availability is derived from lf1.csv row presence.
Instance load_instance(const std::filesystem::path& dir);

/// Writes the directory layout read back by load_instance, bit-exact on lf1.
void store_instance(const Instance& instance, const std::filesystem::path& dir);

/// Empty iff all Instance invariants hold; each violation names the offending id/t.
std::vector<std::string> validate_instance(const Instance& instance);

/// Deterministic synthetic instance for a fixed config (including seed).
/// Reference topology gets id 0 and is available everywhere.
Instance generate_instance(const GeneratorConfig& config);

/// Unique-topology counts per depth (over the topology set, not per timestep).
std::map<int, std::size_t> depth_histogram(const Instance& instance);

}  // namespace topoplan

#endif  // TOPOPLAN_INSTANCE_HPP
