#include "detpred/kernels/kernels.hpp"

#include <atomic>

#include "kernels_internal.hpp"

namespace detpred::kernels {
namespace {

bool detect_avx2() {
#if defined(DETPRED_HAVE_AVX2) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable* table_for(Backend b) {
#if defined(DETPRED_HAVE_AVX2)
    if (b == Backend::Avx2 || (b == Backend::Auto && detect_avx2())) return &kAvx2Table;
#endif
    return &kScalarTable;
}

std::atomic<const KernelTable*> g_table{nullptr};
std::atomic<Backend> g_active{Backend::Scalar};

const KernelTable& table() {
    const KernelTable* t = g_table.load(std::memory_order_acquire);
    if (!t) {
        set_backend(Backend::Auto);
        t = g_table.load(std::memory_order_acquire);
    }
    return *t;
}

}  // namespace

Backend set_backend(Backend b) {
    const KernelTable* t = table_for(b);
    Backend active = Backend::Scalar;
#if defined(DETPRED_HAVE_AVX2)
    if (t == &kAvx2Table) active = Backend::Avx2;
#endif
    g_table.store(t, std::memory_order_release);
    g_active.store(active, std::memory_order_release);
    return active;
}

Backend active_backend() {
    table();  // force detection
    return g_active.load(std::memory_order_acquire);
}

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::Auto: return "auto";
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
    }
    return "?";
}

bool cpu_has_avx2() { return detect_avx2(); }

double sum(const double* x, std::size_t n) { return table().sum(x, n); }

double dot(const double* a, const double* b, std::size_t n) { return table().dot(a, b, n); }

double squared_distance(const double* a, const double* b, std::size_t n) {
    return table().squared_distance(a, b, n);
}

double iota_dot(const double* x, std::size_t n) { return table().iota_dot(x, n); }

PowerSums central_power_sums(const double* x, std::size_t n, double mean) {
    return table().central_power_sums(x, n, mean);
}

}  // namespace detpred::kernels
