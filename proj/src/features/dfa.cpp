#include "detpred/features/dfa.hpp"

#include <cmath>

#include "detpred/core/error.hpp"
#include "detpred/kernels/kernels.hpp"

namespace detpred::features {

double dfa_fluctuation(std::span<const double> series, int window_n) {
    const std::size_t n = static_cast<std::size_t>(window_n);
    if (window_n < 4) throw data_error("dfa: segment length must be >= 4");
    if (series.size() < 2 * n) throw data_error("dfa: series shorter than two segments");

    const double mean =
        kernels::sum(series.data(), series.size()) / static_cast<double>(series.size());
    std::vector<double> profile(series.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        acc += series[i] - mean;
        profile[i] = acc;
    }

    const std::size_t segments = series.size() / n;
    // ramp sums for a fixed segment length
    const double st = static_cast<double>(n - 1) * n / 2.0;
    const double stt = static_cast<double>(n - 1) * n * (2.0 * n - 1.0) / 6.0;
    const double denom = static_cast<double>(n) * stt - st * st;

    double rss = 0.0;
    for (std::size_t s = 0; s < segments; ++s) {
        const double* y = profile.data() + s * n;
        const double sy = kernels::sum(y, n);
        const double sty = kernels::iota_dot(y, n);
        const double slope = (static_cast<double>(n) * sty - st * sy) / denom;
        const double intercept = (sy - slope * st) / static_cast<double>(n);
        for (std::size_t t = 0; t < n; ++t) {
            const double r = y[t] - (intercept + slope * static_cast<double>(t));
            rss += r * r;
        }
    }
    return std::sqrt(rss / static_cast<double>(segments * n));
}

double dfa_scaling_exponent(std::span<const double> series, const std::vector<int>& windows) {
    if (windows.size() < 2) throw data_error("dfa exponent: need at least two segment lengths");
    // least squares of log F on log n
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double count = 0;
    for (int w : windows) {
        const double f = dfa_fluctuation(series, w);
        if (f <= 0.0) continue;  // flat series contributes no slope information
        const double lx = std::log(static_cast<double>(w));
        const double ly = std::log(f);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        count += 1.0;
    }
    if (count < 2.0) throw data_error("dfa exponent: fewer than two usable fluctuation values");
    return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

}  // namespace detpred::features
