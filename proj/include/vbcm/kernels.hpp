#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace vbcm::kernels {

// Hot inner loops over long sample arrays. Every kernel exists twice:
//   ref::  plain serial loops, the reference the tests trust
//   par::  OpenMP versions
// Both use the same arithmetic order (reductions are block-accumulated with
// a fixed block size, elementwise kernels write disjoint slots), so par::
// results are bit-identical to ref:: for any thread count. The unqualified
// wrappers dispatch on exec::mode() and fall back to ref:: inside an
// enclosing parallel region.

inline constexpr std::size_t kSumBlock = 4096;

struct Conv1dShape {
    int in_channels = 1;
    int out_channels = 1;
    int in_len = 0;
    int kernel_len = 1;
    int stride = 1;

    // Keras-style same padding: out_len = ceil(in_len / stride).
    int out_len() const { return (in_len + stride - 1) / stride; }
    int pad_total() const {
        int t = (out_len() - 1) * stride + kernel_len - in_len;
        return t > 0 ? t : 0;
    }
    int pad_left() const { return pad_total() / 2; }
};

namespace ref {

double sum(std::span<const double> x);
double sum_squares(std::span<const double> x);
double sum_abs(std::span<const double> x);
double max_abs(std::span<const double> x);
double sum_sq_diff(std::span<const double> a, std::span<const double> b);
double sum_abs_diff(std::span<const double> a, std::span<const double> b);

void scale(std::span<const double> x, double c, std::span<double> out);
void mu_compress(std::span<const double> x, double mu, double norm_a,
                 std::span<double> out);
void mu_expand(std::span<const double> y, double mu, double norm_a,
               std::span<double> out);
std::size_t af_mu(std::span<const double> x, std::span<double> out);
void af_mu_grad(std::span<const double> z, std::span<double> grad);
void rapp(std::span<const double> x, double a_sat, double gain, double p,
          std::span<double> out);
void moving_average_reflect(std::span<const double> x, int window,
                            std::span<double> out);

// x: [in_channels][in_len] row-major, w: [out_ch][in_ch][k], y: [out_ch][out_len]
void conv1d_forward(const Conv1dShape& s, const double* x, const double* w,
                    const double* bias, double* y);
void conv1d_grad_input(const Conv1dShape& s, const double* w, const double* gy,
                       double* gx);
void conv1d_grad_weights(const Conv1dShape& s, const double* x, const double* gy,
                         double* gw, double* gbias);
void upsample2(const double* x, int channels, int len, double* y);
void upsample2_grad(const double* gy, int channels, int len_in, double* gx);

// Monte-Carlo clipped-tail second moment: mean of (g - peak)^2 over g > peak,
// g ~ N(0, sigma2), accumulated over fixed chunks of the sample budget so the
// result is independent of the thread count. Returns the mean; *sum_sq gets
// the mean of the squared addends for standard-error computation.
double mc_clip_tail(double peak, double sigma2, std::size_t n, std::uint64_t seed,
                    double* sum_sq);

}  // namespace ref

namespace par {

double sum(std::span<const double> x);
double sum_squares(std::span<const double> x);
double sum_abs(std::span<const double> x);
double max_abs(std::span<const double> x);
double sum_sq_diff(std::span<const double> a, std::span<const double> b);
double sum_abs_diff(std::span<const double> a, std::span<const double> b);

void scale(std::span<const double> x, double c, std::span<double> out);
void mu_compress(std::span<const double> x, double mu, double norm_a,
                 std::span<double> out);
void mu_expand(std::span<const double> y, double mu, double norm_a,
               std::span<double> out);
std::size_t af_mu(std::span<const double> x, std::span<double> out);
void af_mu_grad(std::span<const double> z, std::span<double> grad);
void rapp(std::span<const double> x, double a_sat, double gain, double p,
          std::span<double> out);
void moving_average_reflect(std::span<const double> x, int window,
                            std::span<double> out);

void conv1d_forward(const Conv1dShape& s, const double* x, const double* w,
                    const double* bias, double* y);
void conv1d_grad_input(const Conv1dShape& s, const double* w, const double* gy,
                       double* gx);
void conv1d_grad_weights(const Conv1dShape& s, const double* x, const double* gy,
                         double* gw, double* gbias);
void upsample2(const double* x, int channels, int len, double* y);
void upsample2_grad(const double* gy, int channels, int len_in, double* gx);

double mc_clip_tail(double peak, double sigma2, std::size_t n, std::uint64_t seed,
                    double* sum_sq);

}  // namespace par

// Dispatching wrappers.
double sum(std::span<const double> x);
double sum_squares(std::span<const double> x);
double sum_abs(std::span<const double> x);
double max_abs(std::span<const double> x);
double sum_sq_diff(std::span<const double> a, std::span<const double> b);
double sum_abs_diff(std::span<const double> a, std::span<const double> b);
void scale(std::span<const double> x, double c, std::span<double> out);
void mu_compress(std::span<const double> x, double mu, double norm_a,
                 std::span<double> out);
void mu_expand(std::span<const double> y, double mu, double norm_a,
               std::span<double> out);
std::size_t af_mu(std::span<const double> x, std::span<double> out);
void af_mu_grad(std::span<const double> z, std::span<double> grad);
void rapp(std::span<const double> x, double a_sat, double gain, double p,
          std::span<double> out);
void moving_average_reflect(std::span<const double> x, int window,
                            std::span<double> out);
void conv1d_forward(const Conv1dShape& s, const double* x, const double* w,
                    const double* bias, double* y);
void conv1d_grad_input(const Conv1dShape& s, const double* w, const double* gy,
                       double* gx);
void conv1d_grad_weights(const Conv1dShape& s, const double* x, const double* gy,
                         double* gw, double* gbias);
void upsample2(const double* x, int channels, int len, double* y);
void upsample2_grad(const double* gy, int channels, int len_in, double* gx);
double mc_clip_tail(double peak, double sigma2, std::size_t n, std::uint64_t seed,
                    double* sum_sq);

inline double mean_power(std::span<const double> x) {
    return x.empty() ? 0.0 : sum_squares(x) / static_cast<double>(x.size());
}

}  // namespace vbcm::kernels
