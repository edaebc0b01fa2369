#include "vbcm/compander.hpp"

#include <cmath>

#include "vbcm/kernels.hpp"
#include "vbcm/special.hpp"

namespace vbcm {

std::vector<double> mu_compress(const std::vector<double>& x, const MuLawParams& p) {
    p.validate();
    if (kernels::max_abs(x) > p.norm_a * (1.0 + 1e-15)) {
        throw RangeError("mu_compress input exceeds normalization constant A");
    }
    std::vector<double> out(x.size());
    kernels::mu_compress(x, p.mu, p.norm_a, out);
    return out;
}

std::vector<double> mu_expand(const std::vector<double>& y, const MuLawParams& p) {
    p.validate();
    if (kernels::max_abs(y) > p.norm_a * (1.0 + 1e-15)) {
        throw RangeError("mu_expand input exceeds normalization constant A");
    }
    std::vector<double> out(y.size());
    kernels::mu_expand(y, p.mu, p.norm_a, out);
    return out;
}

MuLawParams mu_params_for(const std::vector<double>& x, double mu) {
    const double peak = kernels::max_abs(x);
    if (peak <= 0.0) throw DegenerateError("cannot normalize an all-zero signal");
    return MuLawParams{mu, peak};
}

std::vector<double> power_scale(const std::vector<double>& x, double target_mean_power) {
    if (!(target_mean_power > 0.0)) throw ParamError("target mean power must be positive");
    const double cur = kernels::mean_power(x);
    if (cur <= 0.0) throw DegenerateError("power_scale undefined for all-zero signal");
    std::vector<double> out(x.size());
    kernels::scale(x, std::sqrt(target_mean_power / cur), out);
    return out;
}

double compression_loss(const std::vector<double>& target,
                        const std::function<std::vector<double>(const std::vector<double>&)>& af,
                        ErrorMetric metric) {
    const double peak = kernels::max_abs(target);
    if (peak <= 0.0) throw DegenerateError("compression loss undefined for all-zero target");
    const double p_in = kernels::mean_power(target);
    std::vector<double> u(target.size());
    kernels::scale(target, 1.0 / peak, u);
    std::vector<double> compressed = af(u);
    std::vector<double> xpc = power_scale(compressed, p_in);
    const double n = static_cast<double>(target.size());
    if (metric == ErrorMetric::mse) {
        return kernels::sum_sq_diff(target, xpc) / n;
    }
    return kernels::sum_abs_diff(target, xpc) / n;
}

double peak_c(double papr_t_db, double p_in) {
    if (!(p_in > 0.0)) throw ParamError("p_in must be positive");
    return std::sqrt(ratio_from_db(papr_t_db) * p_in);
}

double clipping_noise_approx(double papr_t_db, double sigma2) {
    if (!(sigma2 >= 0.0)) throw ParamError("sigma2 must be nonnegative");
    if (papr_t_db < 3.0) {
        throw RangeError("clipping_noise_approx requires PAPR_t >= 3 dB");
    }
    const double pt = ratio_from_db(papr_t_db);
    return 2.0 * std::sqrt(2.0 / 3.14159265358979323846) * sigma2 *
           std::pow(std::sqrt(pt), -3.0) * std::exp(-pt / 2.0);
}

McResult clipping_noise_oracle(double papr_t_db, double sigma2, std::size_t n_mc,
                               std::uint64_t seed) {
    if (!(sigma2 > 0.0)) throw ParamError("sigma2 must be positive");
    if (n_mc < 100000) throw ParamError("n_mc must be >= 1e5");
    const double peak = peak_c(papr_t_db, sigma2);
    double m2 = 0.0;
    const double m1 = kernels::mc_clip_tail(peak, sigma2, n_mc, seed, &m2);
    McResult r;
    r.value = 2.0 * m1;
    // var of the addend, then of the mean; the leading 2 scales both.
    const double var = m2 - m1 * m1;
    r.std_error = 2.0 * std::sqrt(var > 0.0 ? var / static_cast<double>(n_mc) : 0.0);
    return r;
}

}  // namespace vbcm
