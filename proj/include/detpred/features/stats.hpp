#pragma once

#include <optional>
#include <span>

namespace detpred::features {

// First-order series statistics. The population denominator N is used for
// the standard deviation; skewness and kurtosis divide by (N-1) powers of
// sigma and kurtosis is excess (normal -> 0).
struct FirstOrderStats {
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;
    std::optional<double> stddev;    // needs N >= 2
    std::optional<double> skewness;  // needs N >= 3 and sigma > 0
    std::optional<double> kurtosis;  // needs N >= 3 and sigma > 0
};

FirstOrderStats first_order_stats(std::span<const double> values);

}  // namespace detpred::features
