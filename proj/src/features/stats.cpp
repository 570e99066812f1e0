#include "detpred/features/stats.hpp"

#include <algorithm>
#include <cmath>

#include "detpred/core/error.hpp"
#include "detpred/kernels/kernels.hpp"

namespace detpred::features {

FirstOrderStats first_order_stats(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n == 0) throw data_error("first_order_stats: empty series");

    FirstOrderStats out;
    out.mean = kernels::sum(values.data(), n) / static_cast<double>(n);
    auto [mn, mx] = std::minmax_element(values.begin(), values.end());
    out.min = *mn;
    out.max = *mx;
    if (n < 2) return out;

    const kernels::PowerSums ps = kernels::central_power_sums(values.data(), n, out.mean);
    const double sigma = std::sqrt(ps.p2 / static_cast<double>(n));
    out.stddev = sigma;
    if (n < 3 || sigma <= 0.0) return out;

    const double nm1 = static_cast<double>(n - 1);
    out.skewness = ps.p3 / (nm1 * sigma * sigma * sigma);
    out.kurtosis = ps.p4 / (nm1 * sigma * sigma * sigma * sigma) - 3.0;
    return out;
}

}  // namespace detpred::features
