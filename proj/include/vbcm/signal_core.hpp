#pragma once

#include <cstdint>
#include <string>

#include "vbcm/types.hpp"

namespace vbcm {

// i.i.d. zero-mean Gaussian samples with standard deviation sigma;
// bit-reproducible for a fixed seed.
VibrationSignal synth_gaussian_vibration(std::size_t n_samples, double sigma,
                                         std::uint64_t seed,
                                         double sample_rate_hz = 64000.0);

// Non-overlapping consecutive segments; a trailing remainder shorter than
// segment_len is discarded.
SignalSet segment(const VibrationSignal& long_signal, std::size_t segment_len);

// Zero-phase centered moving average with reflect padding. window_len must
// be odd and < signal length.
VibrationSignal smooth(const VibrationSignal& signal, int window_len);

// Bundle I/O: <path>.bin holds row-major little-endian f64 samples
// (n_signals x n_samples), <path>.json the header
// {version, n_signals, n_samples, sample_rate_hz, labels, source_id}.
// load_bundle also accepts a .csv file (one signal per row, import only).
void save_bundle(const SignalSet& set, const std::string& path);
SignalSet load_bundle(const std::string& path, double csv_sample_rate_hz = 64000.0);

}  // namespace vbcm
