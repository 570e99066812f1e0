#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace detpred::features {

// Lag-d co-occurrence matrix over a Q-level equal-width quantization of the
// series' own value range. Counts are normalized to probabilities before any
// feature is computed, so features are comparable across windows of
// different lengths.
struct CooccurrenceMatrix {
    int q = 0;
    int lag = 0;
    std::size_t pair_count = 0;
    double value_min = 0.0;
    double value_max = 0.0;
    std::vector<double> prob;  // q*q row-major, sums to 1 when pair_count > 0

    double at(int i, int j) const { return prob[static_cast<std::size_t>(i) * q + j]; }
};

struct CooccurrenceFeatures {
    double energy = 0.0;
    double entropy = 0.0;  // sum c*log(c), 0*log0 := 0 (non-positive by construction)
    double inertia = 0.0;
    double local_homogeneity = 0.0;
    std::optional<double> correlation;  // undefined when a marginal is degenerate
};

// level index in [0, q) for one value given the matrix bounds
int quantize_level(double value, double lo, double hi, int q);

CooccurrenceMatrix build_cooccurrence(std::span<const double> series, int q, int lag);

// Builder over explicit (x_t, x_{t+lag}) pairs; used by the assembly code so
// that pairs spanning a missing minute are skipped. Bounds are taken from
// all values appearing in the pairs.
CooccurrenceMatrix build_cooccurrence_pairs(std::span<const std::pair<double, double>> pairs,
                                            int q, int lag);

CooccurrenceFeatures cooccurrence_features(const CooccurrenceMatrix& matrix);
CooccurrenceFeatures cooccurrence_features(std::span<const double> series, int q, int lag);

}  // namespace detpred::features
