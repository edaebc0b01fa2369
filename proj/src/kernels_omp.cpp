#include <algorithm>
#include <cmath>
#include <vector>

#include "kernels_detail.hpp"
#include "vbcm/kernels.hpp"

// OpenMP kernels. Reductions fill a per-block partial array in parallel and
// combine it serially in block order, which reproduces the ref:: results
// bit-for-bit at any thread count.

namespace vbcm::kernels::par {

using namespace vbcm::kernels::detail;

namespace {

template <typename BlockFn>
double blocked_reduce(std::size_t n, BlockFn&& block_sum) {
    const std::ptrdiff_t n_blocks =
        static_cast<std::ptrdiff_t>((n + kSumBlock - 1) / kSumBlock);
    std::vector<double> partial(static_cast<std::size_t>(n_blocks), 0.0);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < n_blocks; ++b) {
        std::size_t lo = static_cast<std::size_t>(b) * kSumBlock;
        std::size_t hi = std::min(n, lo + kSumBlock);
        partial[static_cast<std::size_t>(b)] = block_sum(lo, hi);
    }
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

}  // namespace

double sum(std::span<const double> x) {
    return blocked_reduce(x.size(), [&](std::size_t a, std::size_t b) {
        double s = 0.0;
        for (std::size_t i = a; i < b; ++i) s += x[i];
        return s;
    });
}

double sum_squares(std::span<const double> x) {
    return blocked_reduce(x.size(), [&](std::size_t a, std::size_t b) {
        double s = 0.0;
        for (std::size_t i = a; i < b; ++i) s += x[i] * x[i];
        return s;
    });
}

double sum_abs(std::span<const double> x) {
    return blocked_reduce(x.size(), [&](std::size_t a, std::size_t b) {
        double s = 0.0;
        for (std::size_t i = a; i < b; ++i) s += std::fabs(x[i]);
        return s;
    });
}

double max_abs(std::span<const double> x) {
    double m = 0.0;
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for reduction(max : m) schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        m = std::max(m, std::fabs(x[static_cast<std::size_t>(i)]));
    }
    return m;
}

double sum_sq_diff(std::span<const double> a, std::span<const double> b) {
    return blocked_reduce(a.size(), [&](std::size_t lo, std::size_t hi) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) {
            double d = a[i] - b[i];
            s += d * d;
        }
        return s;
    });
}

double sum_abs_diff(std::span<const double> a, std::span<const double> b) {
    return blocked_reduce(a.size(), [&](std::size_t lo, std::size_t hi) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += std::fabs(a[i] - b[i]);
        return s;
    });
}

void scale(std::span<const double> x, double c, std::span<double> out) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = c * x[static_cast<std::size_t>(i)];
    }
}

void mu_compress(std::span<const double> x, double mu, double norm_a,
                 std::span<double> out) {
    const double inv = 1.0 / std::log1p(mu);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] =
            mu_compress_scalar(x[static_cast<std::size_t>(i)], mu, norm_a, inv);
    }
}

void mu_expand(std::span<const double> y, double mu, double norm_a,
               std::span<double> out) {
    const double lg = std::log1p(mu);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(y.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] =
            mu_expand_scalar(y[static_cast<std::size_t>(i)], mu, norm_a, lg);
    }
}

std::size_t af_mu(std::span<const double> x, std::span<double> out) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
    std::size_t clamped = 0;
#pragma omp parallel for reduction(+ : clamped) schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        bool c = false;
        out[static_cast<std::size_t>(i)] =
            af_scalar(x[static_cast<std::size_t>(i)], &c);
        clamped += c ? 1 : 0;
    }
    return clamped;
}

void af_mu_grad(std::span<const double> z, std::span<double> grad) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(z.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        grad[static_cast<std::size_t>(i)] =
            af_grad_scalar(z[static_cast<std::size_t>(i)]);
    }
}

void rapp(std::span<const double> x, double a_sat, double gain, double p,
          std::span<double> out) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] =
            rapp_scalar(x[static_cast<std::size_t>(i)], a_sat, gain, p);
    }
}

void moving_average_reflect(std::span<const double> x, int window,
                            std::span<double> out) {
    const int half = window / 2;
    const double inv_w = 1.0 / window;
    const auto n = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] =
            moving_average_at(x.data(), n, i, half, inv_w);
    }
}

void conv1d_forward(const Conv1dShape& s, const double* x, const double* w,
                    const double* bias, double* y) {
    const int out_len = s.out_len();
    const int pl = s.pad_left();
#pragma omp parallel for collapse(2) schedule(static)
    for (int oc = 0; oc < s.out_channels; ++oc) {
        for (int o = 0; o < out_len; ++o) {
            double acc = bias ? bias[oc] : 0.0;
            for (int ci = 0; ci < s.in_channels; ++ci) {
                const double* xr = x + static_cast<std::size_t>(ci) * s.in_len;
                const double* wr =
                    w + (static_cast<std::size_t>(oc) * s.in_channels + ci) * s.kernel_len;
                for (int k = 0; k < s.kernel_len; ++k) {
                    int i = o * s.stride + k - pl;
                    if (i >= 0 && i < s.in_len) acc += wr[k] * xr[i];
                }
            }
            y[static_cast<std::size_t>(oc) * out_len + o] = acc;
        }
    }
}

void conv1d_grad_input(const Conv1dShape& s, const double* w, const double* gy,
                       double* gx) {
    const int out_len = s.out_len();
    const int pl = s.pad_left();
#pragma omp parallel for collapse(2) schedule(static)
    for (int ci = 0; ci < s.in_channels; ++ci) {
        for (int i = 0; i < s.in_len; ++i) {
            double acc = 0.0;
            for (int oc = 0; oc < s.out_channels; ++oc) {
                const double* wr =
                    w + (static_cast<std::size_t>(oc) * s.in_channels + ci) * s.kernel_len;
                const double* gyr = gy + static_cast<std::size_t>(oc) * out_len;
                for (int k = 0; k < s.kernel_len; ++k) {
                    int num = i + pl - k;
                    if (num < 0 || num % s.stride != 0) continue;
                    int o = num / s.stride;
                    if (o < out_len) acc += wr[k] * gyr[o];
                }
            }
            gx[static_cast<std::size_t>(ci) * s.in_len + i] = acc;
        }
    }
}

void conv1d_grad_weights(const Conv1dShape& s, const double* x, const double* gy,
                         double* gw, double* gbias) {
    const int out_len = s.out_len();
    const int pl = s.pad_left();
#pragma omp parallel for collapse(2) schedule(static)
    for (int oc = 0; oc < s.out_channels; ++oc) {
        for (int ci = 0; ci < s.in_channels; ++ci) {
            const double* gyr = gy + static_cast<std::size_t>(oc) * out_len;
            const double* xr = x + static_cast<std::size_t>(ci) * s.in_len;
            double* gwr =
                gw + (static_cast<std::size_t>(oc) * s.in_channels + ci) * s.kernel_len;
            for (int k = 0; k < s.kernel_len; ++k) {
                double acc = 0.0;
                for (int o = 0; o < out_len; ++o) {
                    int i = o * s.stride + k - pl;
                    if (i >= 0 && i < s.in_len) acc += gyr[o] * xr[i];
                }
                gwr[k] = acc;
            }
        }
    }
    if (gbias) {
        for (int oc = 0; oc < s.out_channels; ++oc) {
            const double* gyr = gy + static_cast<std::size_t>(oc) * out_len;
            double acc = 0.0;
            for (int o = 0; o < out_len; ++o) acc += gyr[o];
            gbias[oc] = acc;
        }
    }
}

void upsample2(const double* x, int channels, int len, double* y) {
#pragma omp parallel for collapse(2) schedule(static)
    for (int c = 0; c < channels; ++c) {
        for (int i = 0; i < len; ++i) {
            double v = x[static_cast<std::size_t>(c) * len + i];
            double* yr = y + static_cast<std::size_t>(c) * len * 2;
            yr[2 * i] = v;
            yr[2 * i + 1] = v;
        }
    }
}

void upsample2_grad(const double* gy, int channels, int len_in, double* gx) {
#pragma omp parallel for collapse(2) schedule(static)
    for (int c = 0; c < channels; ++c) {
        for (int i = 0; i < len_in; ++i) {
            const double* gyr = gy + static_cast<std::size_t>(c) * len_in * 2;
            gx[static_cast<std::size_t>(c) * len_in + i] =
                gyr[2 * i] + gyr[2 * i + 1];
        }
    }
}

double mc_clip_tail(double peak, double sigma2, std::size_t n, std::uint64_t seed,
                    double* sum_sq) {
    const double sigma = std::sqrt(sigma2);
    const std::ptrdiff_t n_chunks =
        static_cast<std::ptrdiff_t>((n + kMcChunk - 1) / kMcChunk);
    std::vector<double> p1(static_cast<std::size_t>(n_chunks), 0.0);
    std::vector<double> p2(static_cast<std::size_t>(n_chunks), 0.0);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t c = 0; c < n_chunks; ++c) {
        std::size_t count =
            std::min(kMcChunk, n - static_cast<std::size_t>(c) * kMcChunk);
        mc_clip_chunk(peak, sigma, count,
                      mix_seed(seed, static_cast<std::uint64_t>(c)),
                      &p1[static_cast<std::size_t>(c)],
                      &p2[static_cast<std::size_t>(c)]);
    }
    double s1 = 0.0;
    double s2 = 0.0;
    for (std::ptrdiff_t c = 0; c < n_chunks; ++c) {
        s1 += p1[static_cast<std::size_t>(c)];
        s2 += p2[static_cast<std::size_t>(c)];
    }
    if (sum_sq) *sum_sq = s2 / static_cast<double>(n);
    return s1 / static_cast<double>(n);
}

}  // namespace vbcm::kernels::par
