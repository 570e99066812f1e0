#pragma once

#include <cstddef>

// Data-parallel inner loops shared by the feature extractors and models.
// A scalar reference implementation always exists; on x86-64 an AVX2+FMA
// variant is selected at runtime when the CPU supports it. The two variants
// are equivalence-tested against each other (bitwise results may differ in
// the last ulps because vector accumulation reorders additions).

namespace detpred::kernels {

enum class Backend { Auto, Scalar, Avx2 };

// Auto picks the widest variant the CPU supports. Returns the backend that
// will actually serve calls after the change.
Backend set_backend(Backend b);
Backend active_backend();
const char* backend_name(Backend b);

bool cpu_has_avx2();

double sum(const double* x, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
double squared_distance(const double* a, const double* b, std::size_t n);

// sum of i * x[i], i = 0..n-1; the ramp inner product used by the
// least-squares segment fits.
double iota_dot(const double* x, std::size_t n);

// Sums of (x[i] - mean)^p for p = 2, 3, 4 in one pass.
struct PowerSums {
    double p2 = 0.0;
    double p3 = 0.0;
    double p4 = 0.0;
};
PowerSums central_power_sums(const double* x, std::size_t n, double mean);

}  // namespace detpred::kernels
