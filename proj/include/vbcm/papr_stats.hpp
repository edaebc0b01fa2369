#pragma once

#include <string>
#include <vector>

#include "vbcm/types.hpp"

namespace vbcm {

enum class CcdfKind { exact, closed_form, empirical };

struct CcdfCurve {
    std::vector<double> thresholds_db;  // ascending
    std::vector<double> probabilities;  // non-increasing, in [0,1]
    CcdfKind kind = CcdfKind::empirical;
    std::size_t n_samples = 0;

    void validate() const;
};

std::string to_string(CcdfKind k);

// max|x|^2 / mean|x|^2; >= 1 for any non-degenerate signal.
double papr(const VibrationSignal& signal);
double papr_db(double ratio);

// Eq.-exact CCDF of the per-signal PAPR of an N-sample Gaussian signal:
// 1 - erf(sqrt(P_o/2))^N with P_o taken in dB.
double ccdf_exact(double p_o_db, std::size_t n_samples);

// One-term asymptotic closed form 1 - (1 - e^{-P_o/2}/sqrt(P_o*pi/2))^N,
// clamped to [0,1]. Rejects thresholds below 3 dB where the expansion is
// unreliable.
double ccdf_closed_form(double p_o_db, std::size_t n_samples);

CcdfCurve ccdf_exact_curve(const std::vector<double>& thresholds_db,
                           std::size_t n_samples);
CcdfCurve ccdf_closed_form_curve(const std::vector<double>& thresholds_db,
                                 std::size_t n_samples);

// Fraction of signals whose papr_db strictly exceeds each threshold.
CcdfCurve ccdf_empirical(const SignalSet& set,
                         const std::vector<double>& thresholds_db);

void write_ccdf_csv(const CcdfCurve& curve, const std::string& path);

std::vector<double> threshold_grid(double from_db, double to_db, double step_db);

}  // namespace vbcm
