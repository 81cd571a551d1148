#include "topoplan/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "topoplan/errors.hpp"

namespace topoplan {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::array<double, 4> normalize(const ObjectiveVector& v, const NormalizationBounds& bounds) {
    const std::array<double, 4> raw{v.lf1, static_cast<double>(v.depth),
                                    static_cast<double>(v.switches),
                                    static_cast<double>(v.non_ref)};
    const std::array<double, 4> lo{bounds.ideal.lf1, static_cast<double>(bounds.ideal.depth),
                                   static_cast<double>(bounds.ideal.switches),
                                   static_cast<double>(bounds.ideal.non_ref)};
    const std::array<double, 4> hi{bounds.maximum.lf1, static_cast<double>(bounds.maximum.depth),
                                   static_cast<double>(bounds.maximum.switches),
                                   static_cast<double>(bounds.maximum.non_ref)};
    std::array<double, 4> out;
    for (int c = 0; c < 4; ++c) {
        if (!(hi[c] > lo[c])) throw ValidationError("zero-width normalization bound");
        out[c] = std::clamp((raw[c] - lo[c]) / (hi[c] - lo[c]), 0.0, 1.0);
    }
    return out;
}

double igd_plus(std::span<const ObjectiveVector> approx, std::span<const ObjectiveVector> reference,
                const NormalizationBounds& bounds) {
    if (reference.empty()) throw ValidationError("reference set must not be empty");
    if (approx.empty()) return kInf;

    std::vector<std::array<double, 4>> approx_norm;
    approx_norm.reserve(approx.size());
    for (const auto& a : approx) approx_norm.push_back(normalize(a, bounds));

    double sum = 0.0;
    for (const auto& z : reference) {
        const auto zn = normalize(z, bounds);
        double best = kInf;
        for (const auto& an : approx_norm) {
            double dist2 = 0.0;
            for (int c = 0; c < 4; ++c) {
                const double diff = std::max(an[c] - zn[c], 0.0);
                dist2 += diff * diff;
            }
            best = std::min(best, dist2);
        }
        sum += std::sqrt(best);
    }
    return sum / static_cast<double>(reference.size());
}

std::pair<std::size_t, double> front_coverage(std::span<const ObjectiveVector> approx_front,
                                              const ReferenceFronts& reference, int k) {
    if (k < 1 || k > static_cast<int>(reference.fronts.size()))
        throw ValidationError("front index outside the reference fronts");
    const auto& front = reference.fronts[k - 1];
    if (front.empty()) throw ValidationError("reference front " + std::to_string(k) + " is empty");

    auto key = [](const ObjectiveVector& v) {
        return std::make_tuple(lf1_to_deci(v.lf1), v.depth, v.switches, v.non_ref);
    };
    std::vector<std::tuple<long long, int, int, int>> front_keys;
    front_keys.reserve(front.size());
    for (const auto& v : front) front_keys.push_back(key(v));
    std::sort(front_keys.begin(), front_keys.end());

    std::size_t hits = 0;
    for (const auto& a : approx_front)
        if (std::binary_search(front_keys.begin(), front_keys.end(), key(a))) ++hits;
    return {hits, static_cast<double>(hits) / static_cast<double>(front.size())};
}

NormalizationBounds bounds_from_records(const std::vector<ConfigRecord>& records, int d_max,
                                        int s_max, int t_max) {
    double lo = kInf, hi = -kInf;
    for (const auto& rec : records) {
        if (std::isinf(rec.lf1)) continue;
        lo = std::min(lo, rec.lf1);
        hi = std::max(hi, rec.lf1);
    }
    if (std::isinf(lo)) throw ValidationError("no feasible records to derive bounds from");
    if (!(lo < hi)) hi = lo + 0.1;  // degenerate single-value range
    NormalizationBounds bounds;
    bounds.ideal = {lo, 0, 0, 0};
    bounds.maximum = {hi, d_max, s_max, t_max};
    return bounds;
}

}  // namespace topoplan
