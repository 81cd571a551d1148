#include "topoplan/instance.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "topoplan/errors.hpp"

namespace topoplan {

namespace {

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

}  // namespace

Instance::Instance(std::string name, int t_max, TopologyId reference_id,
                   std::vector<TopologyRecord> topologies,
                   std::vector<std::vector<std::pair<TopologyId, double>>> rows_per_t)
    : name_(std::move(name)),
      t_max_(t_max),
      reference_id_(reference_id),
      topologies_(std::move(topologies)) {
    if (t_max_ < 1) throw ValidationError("t_max must be >= 1, got " + std::to_string(t_max_));
    if (static_cast<int>(rows_per_t.size()) != t_max_)
        throw ValidationError("expected one row set per time step");

    std::sort(topologies_.begin(), topologies_.end(),
              [](const TopologyRecord& a, const TopologyRecord& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < topologies_.size(); ++i) {
        if (topologies_[i].id == topologies_[i - 1].id)
            throw ValidationError("duplicate topology id " + std::to_string(topologies_[i].id));
    }
    for (const auto& rec : topologies_) max_depth_ = std::max(max_depth_, rec.depth);

    avail_ids_.resize(t_max_);
    avail_lf1_.resize(t_max_);
    avail_idx_.resize(t_max_);
    for (int t = 0; t < t_max_; ++t) {
        auto& rows = rows_per_t[t];
        std::sort(rows.begin(), rows.end());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i > 0 && rows[i].first == rows[i - 1].first)
                throw ValidationError("duplicate lf1 row for topology " +
                                      std::to_string(rows[i].first) + " at t=" +
                                      std::to_string(t));
            if (!has_topology(rows[i].first))
                throw ValidationError("lf1 row references unknown topology " +
                                      std::to_string(rows[i].first));
            avail_ids_[t].push_back(rows[i].first);
            avail_lf1_[t].push_back(rows[i].second);
            avail_idx_[t].push_back(static_cast<std::uint32_t>(index_of(rows[i].first)));
        }
    }
}

bool Instance::has_topology(TopologyId id) const {
    auto it = std::lower_bound(topologies_.begin(), topologies_.end(), id,
                               [](const TopologyRecord& rec, TopologyId v) { return rec.id < v; });
    return it != topologies_.end() && it->id == id;
}

int Instance::depth_of(TopologyId id) const {
    auto it = std::lower_bound(topologies_.begin(), topologies_.end(), id,
                               [](const TopologyRecord& rec, TopologyId v) { return rec.id < v; });
    if (it == topologies_.end() || it->id != id)
        throw ValidationError("unknown topology id " + std::to_string(id));
    return it->depth;
}

std::size_t Instance::index_of(TopologyId id) const {
    auto it = std::lower_bound(topologies_.begin(), topologies_.end(), id,
                               [](const TopologyRecord& rec, TopologyId v) { return rec.id < v; });
    if (it == topologies_.end() || it->id != id)
        throw ValidationError("unknown topology id " + std::to_string(id));
    return static_cast<std::size_t>(it - topologies_.begin());
}

bool Instance::available(TopologyId id, int t) const {
    const auto& ids = avail_ids_[t];
    return std::binary_search(ids.begin(), ids.end(), id);
}

double Instance::lf1(TopologyId id, int t) const {
    const auto& ids = avail_ids_[t];
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id)
        throw ValidationError("topology " + std::to_string(id) + " not available at t=" +
                              std::to_string(t));
    return avail_lf1_[t][static_cast<std::size_t>(it - ids.begin())];
}

bool Instance::operator==(const Instance& other) const {
    return name_ == other.name_ && t_max_ == other.t_max_ &&
           reference_id_ == other.reference_id_ && topologies_ == other.topologies_ &&
           avail_ids_ == other.avail_ids_ && avail_lf1_ == other.avail_lf1_;
}

namespace {

std::vector<std::string> read_lines(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot open " + file.string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

long long parse_int(const std::string& s, const char* what) {
    long long v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw ValidationError(std::string("bad ") + what + " value '" + s + "'");
    return v;
}

double parse_double(const std::string& s, const char* what) {
    double v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw ValidationError(std::string("bad ") + what + " value '" + s + "'");
    return v;
}

}  // namespace

Instance load_instance(const std::filesystem::path& dir) {
    std::ifstream manifest_in(dir / "manifest.json");
    if (!manifest_in) throw IoError("cannot open " + (dir / "manifest.json").string());
    nlohmann::json manifest;
    try {
        manifest_in >> manifest;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("bad manifest.json: " + std::string(e.what()));
    }
    if (!manifest.contains("t_max") || !manifest.contains("reference_id"))
        throw ValidationError("manifest.json must declare t_max and reference_id");
    int t_max = manifest["t_max"].get<int>();
    auto reference_id = manifest["reference_id"].get<TopologyId>();
    std::string name = manifest.value("name", "");

    std::vector<TopologyRecord> topologies;
    {
        auto lines = read_lines(dir / "topologies.csv");
        if (lines.empty() || lines[0] != "topology_id,depth")
            throw ValidationError("topologies.csv: expected header 'topology_id,depth'");
        for (std::size_t i = 1; i < lines.size(); ++i) {
            auto fields = split_csv(lines[i]);
            if (fields.size() != 2) throw ValidationError("topologies.csv: bad row " + lines[i]);
            auto id = static_cast<TopologyId>(parse_int(fields[0], "topology_id"));
            int depth = static_cast<int>(parse_int(fields[1], "depth"));
            if (depth < 0) throw ValidationError("negative depth for topology " + fields[0]);
            topologies.push_back({id, depth});
        }
    }

    std::vector<std::vector<std::pair<TopologyId, double>>> rows(t_max);
    {
        auto lines = read_lines(dir / "lf1.csv");
        if (lines.empty() || lines[0] != "topology_id,t,lf1")
            throw ValidationError("lf1.csv: expected header 'topology_id,t,lf1'");
        for (std::size_t i = 1; i < lines.size(); ++i) {
            auto fields = split_csv(lines[i]);
            if (fields.size() != 3) throw ValidationError("lf1.csv: bad row " + lines[i]);
            auto id = static_cast<TopologyId>(parse_int(fields[0], "topology_id"));
            int t = static_cast<int>(parse_int(fields[1], "t"));
            double value = parse_double(fields[2], "lf1");
            if (t < 0 || t >= t_max)
                throw ValidationError("lf1.csv: t=" + fields[1] + " outside horizon");
            rows[t].push_back({id, value});
        }
    }

    Instance instance(std::move(name), t_max, reference_id, std::move(topologies),
                      std::move(rows));
    auto violations = validate_instance(instance);
    if (!violations.empty()) throw ValidationError("invalid instance: " + violations.front());
    return instance;
}

void store_instance(const Instance& instance, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);

    {
        nlohmann::json manifest;
        manifest["t_max"] = instance.t_max();
        manifest["reference_id"] = instance.reference_id();
        manifest["name"] = instance.name();
        std::ofstream out(dir / "manifest.json");
        if (!out) throw IoError("cannot write " + (dir / "manifest.json").string());
        out << manifest.dump(2) << "\n";
    }
    {
        std::ofstream out(dir / "topologies.csv");
        if (!out) throw IoError("cannot write " + (dir / "topologies.csv").string());
        out << "topology_id,depth\n";
        for (const auto& rec : instance.topologies())
            out << rec.id << "," << rec.depth << "\n";
    }
    {
        std::ofstream out(dir / "lf1.csv");
        if (!out) throw IoError("cannot write " + (dir / "lf1.csv").string());
        out << "topology_id,t,lf1\n";
        // one row per available (topology, timestep), sorted by (id, t)
        std::vector<std::pair<TopologyId, int>> order;
        for (int t = 0; t < instance.t_max(); ++t)
            for (TopologyId id : instance.available_at(t)) order.push_back({id, t});
        std::sort(order.begin(), order.end());
        for (auto [id, t] : order)
            out << id << "," << t << "," << format_double(instance.lf1(id, t)) << "\n";
        if (!out) throw IoError("write failed for " + (dir / "lf1.csv").string());
    }
}

std::vector<std::string> validate_instance(const Instance& instance) {
    std::vector<std::string> violations;
    if (!instance.has_topology(instance.reference_id()))
        violations.push_back("reference topology " + std::to_string(instance.reference_id()) +
                             " not in topology table");

    for (const auto& rec : instance.topologies()) {
        bool is_ref = rec.id == instance.reference_id();
        if (is_ref && rec.depth != 0)
            violations.push_back("reference topology " + std::to_string(rec.id) +
                                 " has depth " + std::to_string(rec.depth));
        if (!is_ref && rec.depth == 0)
            violations.push_back("non-reference topology " + std::to_string(rec.id) +
                                 " has depth 0");
    }

    for (int t = 0; t < instance.t_max(); ++t) {
        if (!instance.available(instance.reference_id(), t))
            violations.push_back("reference topology missing at t=" + std::to_string(t));
        const auto& ids = instance.available_at(t);
        const auto& values = instance.lf1_at(t);
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (!(values[i] > 0.0))
                violations.push_back("non-positive lf1 for topology " + std::to_string(ids[i]) +
                                     " at t=" + std::to_string(t));
        }
    }
    return violations;
}

Instance generate_instance(const GeneratorConfig& config) {
    if (config.t_max < 1) throw ValidationError("generator: t_max must be >= 1");
    if (config.count_per_depth.empty())
        throw ValidationError("generator: count_per_depth must not be empty");
    if (config.availability_drop_rate < 0.0 || config.availability_drop_rate >= 1.0)
        throw ValidationError("generator: drop rate must be in [0, 1)");
    for (const auto& [depth, count] : config.count_per_depth) {
        if (depth < 0) throw ValidationError("generator: negative depth");
        if (depth == 0 && count != 1)
            throw ValidationError("generator: depth 0 holds exactly the reference topology");
        if (count < 0) throw ValidationError("generator: negative count");
    }

    std::vector<TopologyRecord> topologies;
    topologies.push_back({0, 0});
    TopologyId next_id = 1;
    for (const auto& [depth, count] : config.count_per_depth) {
        if (depth == 0) continue;
        for (int i = 0; i < count; ++i) topologies.push_back({next_id++, depth});
    }

    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> base_dist(config.lf1_base_range.first,
                                                     config.lf1_base_range.second);
    std::uniform_real_distribution<double> noise_dist(config.lf1_noise_range.first,
                                                      config.lf1_noise_range.second);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    std::vector<std::vector<std::pair<TopologyId, double>>> rows(config.t_max);
    for (const auto& rec : topologies) {
        double base = base_dist(rng);
        for (int t = 0; t < config.t_max; ++t) {
            if (rec.id != 0 && coin(rng) < config.availability_drop_rate) continue;
            double value = std::max(base + noise_dist(rng), 0.1);
            rows[t].push_back({rec.id, value});
        }
    }

    return Instance(config.name, config.t_max, 0, std::move(topologies), std::move(rows));
}

std::map<int, std::size_t> depth_histogram(const Instance& instance) {
    std::map<int, std::size_t> histogram;
    for (const auto& rec : instance.topologies()) ++histogram[rec.depth];
    return histogram;
}

}  // namespace topoplan
