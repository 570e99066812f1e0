#include "kernels_internal.hpp"

// Reference kernels. Plain loops, one accumulator, no reassociation: these
// define the semantics the vector variants are tested against.

namespace detpred::kernels {
namespace {

double scalar_sum(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i];
    return acc;
}

double scalar_dot(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double scalar_squared_distance(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

double scalar_iota_dot(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += static_cast<double>(i) * x[i];
    return acc;
}

PowerSums scalar_central_power_sums(const double* x, std::size_t n, double mean) {
    PowerSums out;
    for (std::size_t i = 0; i < n; ++i) {
        double d = x[i] - mean;
        double d2 = d * d;
        out.p2 += d2;
        out.p3 += d2 * d;
        out.p4 += d2 * d2;
    }
    return out;
}

}  // namespace

const KernelTable kScalarTable = {
    scalar_sum, scalar_dot, scalar_squared_distance, scalar_iota_dot,
    scalar_central_power_sums,
};

}  // namespace detpred::kernels
