#if defined(DETPRED_HAVE_AVX2)

#include <immintrin.h>

#include "kernels_internal.hpp"

// AVX2+FMA variants. This translation unit is compiled with -mavx2 -mfma and
// must only be entered through the dispatch table after the CPUID check.
// Each kernel keeps four independent lane accumulators that are reduced once
// at the end, then finishes the ragged tail with the scalar recurrence.

namespace detpred::kernels {
namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d swapped = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

double avx2_sum(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
    double out = hsum(acc);
    for (; i < n; ++i) out += x[i];
    return out;
}

double avx2_dot(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
    double out = hsum(acc);
    for (; i < n; ++i) out += a[i] * b[i];
    return out;
}

double avx2_squared_distance(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_fmadd_pd(d, d, acc);
    }
    double out = hsum(acc);
    for (; i < n; ++i) {
        double d = a[i] - b[i];
        out += d * d;
    }
    return out;
}

double avx2_iota_dot(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    __m256d idx = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);
    const __m256d four = _mm256_set1_pd(4.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_fmadd_pd(idx, _mm256_loadu_pd(x + i), acc);
        idx = _mm256_add_pd(idx, four);
    }
    double out = hsum(acc);
    for (; i < n; ++i) out += static_cast<double>(i) * x[i];
    return out;
}

PowerSums avx2_central_power_sums(const double* x, std::size_t n, double mean) {
    __m256d acc2 = _mm256_setzero_pd();
    __m256d acc3 = _mm256_setzero_pd();
    __m256d acc4 = _mm256_setzero_pd();
    const __m256d mu = _mm256_set1_pd(mean);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), mu);
        __m256d d2 = _mm256_mul_pd(d, d);
        acc2 = _mm256_add_pd(acc2, d2);
        acc3 = _mm256_fmadd_pd(d2, d, acc3);
        acc4 = _mm256_fmadd_pd(d2, d2, acc4);
    }
    PowerSums out;
    out.p2 = hsum(acc2);
    out.p3 = hsum(acc3);
    out.p4 = hsum(acc4);
    for (; i < n; ++i) {
        double d = x[i] - mean;
        double d2 = d * d;
        out.p2 += d2;
        out.p3 += d2 * d;
        out.p4 += d2 * d2;
    }
    return out;
}

}  // namespace

const KernelTable kAvx2Table = {
    avx2_sum, avx2_dot, avx2_squared_distance, avx2_iota_dot, avx2_central_power_sums,
};

}  // namespace detpred::kernels

#endif  // DETPRED_HAVE_AVX2
