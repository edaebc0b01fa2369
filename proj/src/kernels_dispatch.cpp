#include "vbcm/exec.hpp"
#include "vbcm/kernels.hpp"

namespace vbcm::kernels {

namespace {
inline bool use_par() {
    return exec::mode() == exec::Mode::parallel && !exec::in_parallel_region();
}
}  // namespace

#define VBCM_DISPATCH(call) return use_par() ? par::call : ref::call

double sum(std::span<const double> x) { VBCM_DISPATCH(sum(x)); }
double sum_squares(std::span<const double> x) { VBCM_DISPATCH(sum_squares(x)); }
double sum_abs(std::span<const double> x) { VBCM_DISPATCH(sum_abs(x)); }
double max_abs(std::span<const double> x) { VBCM_DISPATCH(max_abs(x)); }
double sum_sq_diff(std::span<const double> a, std::span<const double> b) {
    VBCM_DISPATCH(sum_sq_diff(a, b));
}
double sum_abs_diff(std::span<const double> a, std::span<const double> b) {
    VBCM_DISPATCH(sum_abs_diff(a, b));
}
void scale(std::span<const double> x, double c, std::span<double> out) {
    if (use_par()) par::scale(x, c, out); else ref::scale(x, c, out);
}
void mu_compress(std::span<const double> x, double mu, double norm_a,
                 std::span<double> out) {
    if (use_par()) par::mu_compress(x, mu, norm_a, out);
    else ref::mu_compress(x, mu, norm_a, out);
}
void mu_expand(std::span<const double> y, double mu, double norm_a,
               std::span<double> out) {
    if (use_par()) par::mu_expand(y, mu, norm_a, out);
    else ref::mu_expand(y, mu, norm_a, out);
}
std::size_t af_mu(std::span<const double> x, std::span<double> out) {
    VBCM_DISPATCH(af_mu(x, out));
}
void af_mu_grad(std::span<const double> z, std::span<double> grad) {
    if (use_par()) par::af_mu_grad(z, grad); else ref::af_mu_grad(z, grad);
}
void rapp(std::span<const double> x, double a_sat, double gain, double p,
          std::span<double> out) {
    if (use_par()) par::rapp(x, a_sat, gain, p, out);
    else ref::rapp(x, a_sat, gain, p, out);
}
void moving_average_reflect(std::span<const double> x, int window,
                            std::span<double> out) {
    if (use_par()) par::moving_average_reflect(x, window, out);
    else ref::moving_average_reflect(x, window, out);
}
void conv1d_forward(const Conv1dShape& s, const double* x, const double* w,
                    const double* bias, double* y) {
    if (use_par()) par::conv1d_forward(s, x, w, bias, y);
    else ref::conv1d_forward(s, x, w, bias, y);
}
void conv1d_grad_input(const Conv1dShape& s, const double* w, const double* gy,
                       double* gx) {
    if (use_par()) par::conv1d_grad_input(s, w, gy, gx);
    else ref::conv1d_grad_input(s, w, gy, gx);
}
void conv1d_grad_weights(const Conv1dShape& s, const double* x, const double* gy,
                         double* gw, double* gbias) {
    if (use_par()) par::conv1d_grad_weights(s, x, gy, gw, gbias);
    else ref::conv1d_grad_weights(s, x, gy, gw, gbias);
}
void upsample2(const double* x, int channels, int len, double* y) {
    if (use_par()) par::upsample2(x, channels, len, y);
    else ref::upsample2(x, channels, len, y);
}
void upsample2_grad(const double* gy, int channels, int len_in, double* gx) {
    if (use_par()) par::upsample2_grad(gy, channels, len_in, gx);
    else ref::upsample2_grad(gy, channels, len_in, gx);
}
double mc_clip_tail(double peak, double sigma2, std::size_t n, std::uint64_t seed,
                    double* sum_sq) {
    VBCM_DISPATCH(mc_clip_tail(peak, sigma2, n, seed, sum_sq));
}

#undef VBCM_DISPATCH

}  // namespace vbcm::kernels
