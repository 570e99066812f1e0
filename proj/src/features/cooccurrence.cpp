#include "detpred/features/cooccurrence.hpp"

#include <algorithm>
#include <cmath>

#include "detpred/core/error.hpp"

namespace detpred::features {

int quantize_level(double value, double lo, double hi, int q) {
    if (hi <= lo) return 0;  // degenerate range, single level
    int level = static_cast<int>((value - lo) / (hi - lo) * q);
    return std::clamp(level, 0, q - 1);
}

CooccurrenceMatrix build_cooccurrence(std::span<const double> series, int q, int lag) {
    if (q < 1) throw data_error("cooccurrence: Q must be >= 1");
    if (lag < 1) throw data_error("cooccurrence: lag must be >= 1");
    if (series.size() <= static_cast<std::size_t>(lag))
        throw data_error("cooccurrence: series length must exceed the lag");

    std::vector<std::pair<double, double>> pairs;
    pairs.reserve(series.size() - lag);
    for (std::size_t t = 0; t + lag < series.size(); ++t)
        pairs.emplace_back(series[t], series[t + lag]);
    return build_cooccurrence_pairs(pairs, q, lag);
}

CooccurrenceMatrix build_cooccurrence_pairs(std::span<const std::pair<double, double>> pairs,
                                            int q, int lag) {
    if (q < 1) throw data_error("cooccurrence: Q must be >= 1");
    CooccurrenceMatrix m;
    m.q = q;
    m.lag = lag;
    m.prob.assign(static_cast<std::size_t>(q) * q, 0.0);
    m.pair_count = pairs.size();
    if (pairs.empty()) return m;

    m.value_min = pairs.front().first;
    m.value_max = pairs.front().first;
    for (const auto& [a, b] : pairs) {
        m.value_min = std::min({m.value_min, a, b});
        m.value_max = std::max({m.value_max, a, b});
    }
    for (const auto& [a, b] : pairs) {
        int i = quantize_level(a, m.value_min, m.value_max, q);
        int j = quantize_level(b, m.value_min, m.value_max, q);
        m.prob[static_cast<std::size_t>(i) * q + j] += 1.0;
    }
    const double n = static_cast<double>(pairs.size());
    for (double& c : m.prob) c /= n;
    return m;
}

CooccurrenceFeatures cooccurrence_features(const CooccurrenceMatrix& m) {
    if (m.pair_count == 0) throw data_error("cooccurrence: no valid pairs");
    CooccurrenceFeatures f;
    const int q = m.q;

    std::vector<double> px(q, 0.0), py(q, 0.0);
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j) {
            const double c = m.at(i, j);
            px[i] += c;
            py[j] += c;
            f.energy += c * c;
            if (c > 0.0) f.entropy += c * std::log(c);
            const double dij = static_cast<double>(i - j);
            f.inertia += dij * dij * c;
            f.local_homogeneity += c / (1.0 + dij * dij);
        }
    }

    // marginal moments over 1-based levels, divided by Q
    double mu_x = 0.0, mu_y = 0.0;
    for (int i = 0; i < q; ++i) {
        mu_x += (i + 1.0) * px[i];
        mu_y += (i + 1.0) * py[i];
    }
    mu_x /= q;
    mu_y /= q;
    double var_x = 0.0, var_y = 0.0;
    for (int i = 0; i < q; ++i) {
        var_x += (i + 1.0 - mu_x) * (i + 1.0 - mu_x) * px[i];
        var_y += (i + 1.0 - mu_y) * (i + 1.0 - mu_y) * py[i];
    }
    var_x /= q;
    var_y /= q;
    const double sigma_x = std::sqrt(var_x);
    const double sigma_y = std::sqrt(var_y);
    if (sigma_x > 0.0 && sigma_y > 0.0) {
        double num = 0.0;
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j)
                num += (i + 1.0 - mu_x) * (j + 1.0 - mu_y) * m.at(i, j);
        f.correlation = num / (sigma_x * sigma_y);
    }
    return f;
}

CooccurrenceFeatures cooccurrence_features(std::span<const double> series, int q, int lag) {
    return cooccurrence_features(build_cooccurrence(series, q, lag));
}

}  // namespace detpred::features
