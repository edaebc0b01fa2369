#pragma once

#include <cstdint>
#include <vector>

#include "vbcm/types.hpp"

namespace vbcm {

// Rapp SSPA AM/AM parameters. AM/PM conversion is neglected.
struct RappParams {
    double a_sat = 1.0;  // saturation level
    double gain_a = 1.0; // linear gain a
    double p = 2.0;      // smoothness; large p approaches a hard limiter

    void validate() const {
        if (!(a_sat > 0.0)) throw ParamError("a_sat must be positive");
        if (!(gain_a >= 0.0)) throw ParamError("gain_a must be nonnegative");
        if (!(p > 0.0)) throw ParamError("p must be strictly positive");
    }
};

// A_out = a*A_in / (1 + ((a|A_in|)/A_sat)^(2p))^(1/(2p)), sign preserved;
// |output| < A_sat for all finite inputs.
std::vector<double> rapp_amplify(const std::vector<double>& x, const RappParams& params);
VibrationSignal rapp_amplify(const VibrationSignal& s, const RappParams& params);

// Amplitude scaling by 10^(-ibo_db/20).
std::vector<double> apply_ibo(const std::vector<double>& x, double ibo_db);
VibrationSignal apply_ibo(const VibrationSignal& s, double ibo_db);

// Adds white Gaussian noise with variance = mean power / 10^(snr_db/10);
// deterministic per seed.
std::vector<double> add_awgn(const std::vector<double>& x, double snr_db,
                             std::uint64_t seed);
VibrationSignal add_awgn(const VibrationSignal& s, double snr_db, std::uint64_t seed);

// Mean over signals of per-signal average power, used verbatim as the
// amplitude saturation level (the source text mixes power and amplitude
// units here; the value is logged so runs stay reproducible).
double saturation_from_set(const SignalSet& set);

}  // namespace vbcm
