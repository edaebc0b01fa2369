#include "vbcm/rf_chain.hpp"

#include <cmath>

#include "vbcm/kernels.hpp"
#include "vbcm/rng.hpp"
#include "vbcm/special.hpp"

namespace vbcm {

std::vector<double> rapp_amplify(const std::vector<double>& x, const RappParams& params) {
    params.validate();
    std::vector<double> out(x.size());
    kernels::rapp(x, params.a_sat, params.gain_a, params.p, out);
    return out;
}

VibrationSignal rapp_amplify(const VibrationSignal& s, const RappParams& params) {
    VibrationSignal out = s;
    out.samples = rapp_amplify(s.samples, params);
    return out;
}

std::vector<double> apply_ibo(const std::vector<double>& x, double ibo_db) {
    if (!(ibo_db >= 0.0)) throw ParamError("ibo_db must be nonnegative");
    std::vector<double> out(x.size());
    kernels::scale(x, std::pow(10.0, -ibo_db / 20.0), out);
    return out;
}

VibrationSignal apply_ibo(const VibrationSignal& s, double ibo_db) {
    VibrationSignal out = s;
    out.samples = apply_ibo(s.samples, ibo_db);
    return out;
}

std::vector<double> add_awgn(const std::vector<double>& x, double snr_db,
                             std::uint64_t seed) {
    const double p = kernels::mean_power(x);
    if (p <= 0.0) throw DegenerateError("add_awgn undefined for all-zero signal");
    const double sigma = std::sqrt(p / ratio_from_db(snr_db));
    Rng rng(seed);
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = x[i] + sigma * rng.gaussian();
    }
    return out;
}

VibrationSignal add_awgn(const VibrationSignal& s, double snr_db, std::uint64_t seed) {
    VibrationSignal out = s;
    out.samples = add_awgn(s.samples, snr_db, seed);
    return out;
}

double saturation_from_set(const SignalSet& set) {
    validate_set(set);
    double acc = 0.0;
    for (const auto& s : set.signals) {
        acc += kernels::mean_power(s.samples);
    }
    return acc / static_cast<double>(set.size());
}

}  // namespace vbcm
