#pragma once

#include <cmath>
#include <cstddef>

#include "vbcm/rng.hpp"

// Scalar bodies shared by the ref:: and par:: kernel variants. Keeping the
// arithmetic in one place is what makes the two variants bit-identical.

namespace vbcm::kernels::detail {

inline double sgn(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

inline double mu_compress_scalar(double x, double mu, double norm_a,
                                 double inv_log1p_mu) {
    return norm_a * sgn(x) * std::log1p(mu * std::fabs(x / norm_a)) * inv_log1p_mu;
}

inline double mu_expand_scalar(double y, double mu, double norm_a,
                               double log1p_mu) {
    return norm_a * sgn(y) * std::expm1(std::fabs(y / norm_a) * log1p_mu) / mu;
}

inline constexpr double kAfMu = 255.0;
// ln(256)
inline constexpr double kAfLog1pMu = 5.5451774444795624753378569716654;

inline double af_scalar(double x, bool* clamped) {
    double a = std::fabs(x);
    if (a > 1.0) {
        a = 1.0;
        *clamped = true;
    } else {
        *clamped = false;
    }
    return sgn(x) * std::log1p(kAfMu * a) / kAfLog1pMu;
}

// d/dx AF: mu / ((1 + mu|x|) ln(1+mu)); zero in the clamp region.
inline double af_grad_scalar(double z) {
    double a = std::fabs(z);
    if (a > 1.0) return 0.0;
    return kAfMu / ((1.0 + kAfMu * a) * kAfLog1pMu);
}

inline double rapp_scalar(double x, double a_sat, double gain, double p) {
    double num = gain * x;
    double r = std::fabs(num) / a_sat;
    return num / std::pow(1.0 + std::pow(r, 2.0 * p), 1.0 / (2.0 * p));
}

// numpy-style 'reflect' (no edge repeat): valid for |offset| < n.
inline std::ptrdiff_t reflect_index(std::ptrdiff_t i, std::ptrdiff_t n) {
    if (i < 0) return -i;
    if (i >= n) return 2 * n - 2 - i;
    return i;
}

inline double moving_average_at(const double* x, std::ptrdiff_t n,
                                std::ptrdiff_t i, int half, double inv_w) {
    double acc = 0.0;
    for (std::ptrdiff_t j = i - half; j <= i + half; ++j) {
        acc += x[reflect_index(j, n)];
    }
    return acc * inv_w;
}

inline constexpr std::size_t kMcChunk = 1 << 16;

// One fixed-size Monte-Carlo chunk; the chunk id seeds its own stream so the
// total over chunks does not depend on how chunks are scheduled.
inline void mc_clip_chunk(double peak, double sigma, std::size_t count,
                          std::uint64_t chunk_seed, double* sum1, double* sum2) {
    Rng rng(chunk_seed);
    double s1 = 0.0;
    double s2 = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        double g = sigma * rng.gaussian();
        if (g > peak) {
            double d = g - peak;
            double v = d * d;
            s1 += v;
            s2 += v * v;
        }
    }
    *sum1 = s1;
    *sum2 = s2;
}

}  // namespace vbcm::kernels::detail
