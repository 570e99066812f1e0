#pragma once

#include <span>
#include <vector>

namespace detpred::features {

// Detrended fluctuation at one segment length: integrate the mean-centered
// series, fit a least-squares line per non-overlapping segment of length n
// (trailing partial segment discarded), return the RMS residual over the
// fitted points. F(c * series, n) == c * F(series, n) for c > 0.
double dfa_fluctuation(std::span<const double> series, int window_n);

// log-log slope of F(n) against n over the given segment lengths; the
// scaling exponent (0.5 for white noise, 1.5 for a Brownian path).
double dfa_scaling_exponent(std::span<const double> series, const std::vector<int>& windows);

}  // namespace detpred::features
