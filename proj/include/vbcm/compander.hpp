#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "vbcm/types.hpp"

namespace vbcm {

struct MuLawParams {
    double mu = 255.0;
    double norm_a = 1.0;

    void validate() const {
        if (!(mu > 0.0)) throw ParamError("mu must be positive");
        if (!(norm_a > 0.0)) throw ParamError("norm_a must be positive");
    }
};

// y = A sgn(x) ln(1 + mu|x/A|) / ln(1 + mu). Rejects |x| > A.
std::vector<double> mu_compress(const std::vector<double>& x, const MuLawParams& p);
// Exact inverse of mu_compress. Rejects |y| > A.
std::vector<double> mu_expand(const std::vector<double>& y, const MuLawParams& p);

// Per-signal normalization A = max|x|.
MuLawParams mu_params_for(const std::vector<double>& x, double mu = 255.0);

// Uniform amplitude scaling to the requested mean power (the only choice
// that preserves PAPR).
std::vector<double> power_scale(const std::vector<double>& x, double target_mean_power);

enum class ErrorMetric { mse, mae };

// Compression loss (the training floor): error between the target signal and
// its compressed, power-preserved form P(AF(x/max|x|)).
double compression_loss(const std::vector<double>& target,
                        const std::function<std::vector<double>(const std::vector<double>&)>& af,
                        ErrorMetric metric = ErrorMetric::mse);

// Peak of a compressed, power-preserved signal at a target PAPR:
// sqrt(PAPR_t,linear * P_in).
double peak_c(double papr_t_db, double p_in);

// One-term asymptotic of the clipping-noise integral:
// 2 sqrt(2/pi) sigma^2 PAPR_t^{-3/2} e^{-PAPR_t/2}. Requires >= 3 dB; the
// series is unreliable below that and still overestimates the integral by
// tens of percent through ~10 dB.
double clipping_noise_approx(double papr_t_db, double sigma2);

struct McResult {
    double value = 0.0;
    double std_error = 0.0;
};

// Monte-Carlo evaluation of the clipping-noise integral
// 2 E[(x - Peak_c)^2 1{x > Peak_c}], x ~ N(0, sigma2); deterministic per seed.
McResult clipping_noise_oracle(double papr_t_db, double sigma2, std::size_t n_mc,
                               std::uint64_t seed);

}  // namespace vbcm
