#pragma once

#include <cstddef>

#include "detpred/kernels/kernels.hpp"

namespace detpred::kernels {

struct KernelTable {
    double (*sum)(const double*, std::size_t);
    double (*dot)(const double*, const double*, std::size_t);
    double (*squared_distance)(const double*, const double*, std::size_t);
    double (*iota_dot)(const double*, std::size_t);
    PowerSums (*central_power_sums)(const double*, std::size_t, double);
};

extern const KernelTable kScalarTable;

#if defined(DETPRED_HAVE_AVX2)
extern const KernelTable kAvx2Table;
#endif

}  // namespace detpred::kernels
