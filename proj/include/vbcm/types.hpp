#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace vbcm {

// Error hierarchy. The CLI maps these onto exit codes:
// ParamError/RangeError -> 2 (usage), FormatError/DegenerateError -> 3 (data),
// TrainingError -> 4.
struct ParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct RangeError : std::domain_error {
    using std::domain_error::domain_error;
};
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TrainingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One fixed-length real-valued sample sequence. Samples are dimensionless
// acceleration units; label optionally carries the health condition.
struct VibrationSignal {
    std::vector<double> samples;
    double sample_rate_hz = 0.0;
    std::string label;

    std::size_t size() const { return samples.size(); }
};

// Ordered collection of equal-length signals sharing one sample rate.
struct SignalSet {
    std::vector<VibrationSignal> signals;
    std::size_t segment_len = 0;
    std::string source_id;

    std::size_t size() const { return signals.size(); }
    const VibrationSignal& operator[](std::size_t i) const { return signals[i]; }
    VibrationSignal& operator[](std::size_t i) { return signals[i]; }
};

// Throws ParamError if the signal violates its invariants (length >= 2,
// finite samples, positive sample rate).
void validate_signal(const VibrationSignal& s);

// Throws ParamError unless all members share length and sample rate and the
// set is non-empty.
void validate_set(const SignalSet& set);

}  // namespace vbcm
