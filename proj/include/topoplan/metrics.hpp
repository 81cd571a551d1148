#ifndef TOPOPLAN_METRICS_HPP
#define TOPOPLAN_METRICS_HPP

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "topoplan/exact.hpp"
#include "topoplan/objectives.hpp"

namespace topoplan {

struct NormalizationBounds {
    ObjectiveVector ideal;
    ObjectiveVector maximum;  // must exceed ideal in every component
};

/// Exact reference fronts ordered by increasing dominance rank, loading
/// values rounded to one decimal.
struct ReferenceFronts {
    std::vector<std::vector<ObjectiveVector>> fronts;
};

/// Component-wise (v - ideal) / (maximum - ideal), clamped to [0, 1].
/// Order: lf1, depth, switches, non_ref. Throws ValidationError on
/// zero-width bounds.
std::array<double, 4> normalize(const ObjectiveVector& v, const NormalizationBounds& bounds);

/// Mean over reference points of the dominance-preserving distance
/// sqrt(sum_i max(a_i - z_i, 0)^2) to the nearest approximation point, on
/// normalized objectives. +inf for an empty approximation set.
double igd_plus(std::span<const ObjectiveVector> approx, std::span<const ObjectiveVector> reference,
                const NormalizationBounds& bounds);

/// (I_k, I_k / |F_k|): approximation points whose rounded-loading tuple lies
/// in reference front k (1-based). Throws ValidationError on an empty front.
std::pair<std::size_t, double> front_coverage(std::span<const ObjectiveVector> approx_front,
                                              const ReferenceFronts& reference, int k);

/// Bounds the way the reference calculation defines them: loading from the
/// min/max finite record values before nondominated filtering, discrete
/// objectives from the operational limits.
NormalizationBounds bounds_from_records(const std::vector<ConfigRecord>& records, int d_max,
                                        int s_max, int t_max);

}  // namespace topoplan

#endif  // TOPOPLAN_METRICS_HPP
