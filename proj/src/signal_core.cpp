#include "vbcm/signal_core.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vbcm/kernels.hpp"
#include "vbcm/rng.hpp"

namespace vbcm {

using nlohmann::json;

namespace {

bool all_finite(const std::vector<double>& v) {
    for (double x : v) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

static_assert(std::endian::native == std::endian::little,
              "bundle format is little-endian");

}  // namespace

void validate_signal(const VibrationSignal& s) {
    if (s.samples.size() < 2) {
        throw ParamError("signal must hold at least 2 samples");
    }
    if (!(s.sample_rate_hz > 0.0)) {
        throw ParamError("sample_rate_hz must be positive");
    }
    if (!all_finite(s.samples)) {
        throw ParamError("signal contains NaN/Inf samples");
    }
}

void validate_set(const SignalSet& set) {
    if (set.signals.empty()) throw ParamError("signal set is empty");
    const std::size_t n = set.signals.front().size();
    const double fs = set.signals.front().sample_rate_hz;
    for (const auto& s : set.signals) {
        validate_signal(s);
        if (s.size() != n) throw ParamError("signal lengths differ within set");
        if (s.sample_rate_hz != fs) throw ParamError("sample rates differ within set");
    }
}

VibrationSignal synth_gaussian_vibration(std::size_t n_samples, double sigma,
                                         std::uint64_t seed, double sample_rate_hz) {
    if (n_samples < 2) throw ParamError("n_samples must be >= 2");
    if (!(sigma > 0.0)) throw ParamError("sigma must be positive");
    if (!(sample_rate_hz > 0.0)) throw ParamError("sample_rate_hz must be positive");
    VibrationSignal out;
    out.sample_rate_hz = sample_rate_hz;
    out.samples.resize(n_samples);
    Rng rng(seed);
    for (auto& v : out.samples) v = sigma * rng.gaussian();
    return out;
}

SignalSet segment(const VibrationSignal& long_signal, std::size_t segment_len) {
    validate_signal(long_signal);
    if (segment_len < 2) throw ParamError("segment_len must be >= 2");
    if (segment_len > long_signal.size()) {
        throw ParamError("segment_len exceeds signal length");
    }
    SignalSet set;
    set.segment_len = segment_len;
    const std::size_t n_segments = long_signal.size() / segment_len;
    set.signals.reserve(n_segments);
    for (std::size_t s = 0; s < n_segments; ++s) {
        VibrationSignal seg;
        seg.sample_rate_hz = long_signal.sample_rate_hz;
        seg.label = long_signal.label;
        auto begin = long_signal.samples.begin() + static_cast<std::ptrdiff_t>(s * segment_len);
        seg.samples.assign(begin, begin + static_cast<std::ptrdiff_t>(segment_len));
        set.signals.push_back(std::move(seg));
    }
    return set;
}

VibrationSignal smooth(const VibrationSignal& signal, int window_len) {
    validate_signal(signal);
    if (window_len < 1 || window_len % 2 == 0 ||
        static_cast<std::size_t>(window_len) >= signal.size()) {
        throw ParamError("window_len must be odd and in [1, N)");
    }
    VibrationSignal out = signal;
    if (window_len == 1) return out;
    kernels::moving_average_reflect(signal.samples, window_len, out.samples);
    return out;
}

void save_bundle(const SignalSet& set, const std::string& path) {
    validate_set(set);
    json header;
    header["version"] = 1;
    header["n_signals"] = set.size();
    header["n_samples"] = set.signals.front().size();
    header["sample_rate_hz"] = set.signals.front().sample_rate_hz;
    header["source_id"] = set.source_id;
    json labels = json::array();
    bool any_label = false;
    for (const auto& s : set.signals) {
        labels.push_back(s.label);
        if (!s.label.empty()) any_label = true;
    }
    header["labels"] = any_label ? labels : json();

    std::ofstream hs(path + ".json");
    if (!hs) throw FormatError("cannot write bundle header: " + path + ".json");
    hs << header.dump(2) << "\n";

    std::ofstream bs(path + ".bin", std::ios::binary);
    if (!bs) throw FormatError("cannot write bundle payload: " + path + ".bin");
    for (const auto& s : set.signals) {
        bs.write(reinterpret_cast<const char*>(s.samples.data()),
                 static_cast<std::streamsize>(s.samples.size() * sizeof(double)));
    }
    if (!bs) throw FormatError("short write on bundle payload: " + path + ".bin");
}

namespace {

SignalSet load_csv(const std::string& path, double sample_rate_hz) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open CSV: " + path);
    SignalSet set;
    set.source_id = path;
    std::string line;
    std::size_t expect = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        VibrationSignal sig;
        sig.sample_rate_hz = sample_rate_hz;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            std::size_t pos = 0;
            double v = 0.0;
            try {
                v = std::stod(cell, &pos);
            } catch (const std::exception&) {
                throw FormatError("CSV cell is not numeric: '" + cell + "'");
            }
            if (!std::isfinite(v)) {
                throw FormatError("CSV contains non-finite value in " + path);
            }
            sig.samples.push_back(v);
        }
        if (expect == 0) {
            expect = sig.samples.size();
        } else if (sig.samples.size() != expect) {
            throw FormatError("CSV rows have inconsistent lengths in " + path);
        }
        set.signals.push_back(std::move(sig));
    }
    if (set.signals.empty()) throw FormatError("CSV holds no signals: " + path);
    set.segment_len = expect;
    validate_set(set);
    return set;
}

}  // namespace

SignalSet load_bundle(const std::string& path, double csv_sample_rate_hz) {
    if (path.size() > 4 && path.substr(path.size() - 4) == ".csv") {
        return load_csv(path, csv_sample_rate_hz);
    }
    std::string base = path;
    if (base.size() > 5 && base.substr(base.size() - 5) == ".json") {
        base = base.substr(0, base.size() - 5);
    }
    std::ifstream hs(base + ".json");
    if (!hs) throw FormatError("cannot open bundle header: " + base + ".json");
    json header;
    try {
        hs >> header;
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed bundle header: ") + e.what());
    }
    for (const char* field : {"version", "n_signals", "n_samples", "sample_rate_hz"}) {
        if (!header.contains(field)) {
            throw FormatError(std::string("bundle header missing field '") + field + "'");
        }
    }
    if (header["version"].get<int>() != 1) {
        throw FormatError("unsupported bundle version");
    }
    const auto n_signals = header["n_signals"].get<std::size_t>();
    const auto n_samples = header["n_samples"].get<std::size_t>();
    const auto fs = header["sample_rate_hz"].get<double>();
    if (n_signals == 0) throw FormatError("bundle header field 'n_signals' is zero");
    if (n_samples < 2) throw FormatError("bundle header field 'n_samples' is < 2");
    if (!(fs > 0.0)) throw FormatError("bundle header field 'sample_rate_hz' not positive");

    std::ifstream bs(base + ".bin", std::ios::binary | std::ios::ate);
    if (!bs) throw FormatError("cannot open bundle payload: " + base + ".bin");
    const auto bytes = static_cast<std::size_t>(bs.tellg());
    if (bytes != n_signals * n_samples * sizeof(double)) {
        throw FormatError("bundle payload size does not match header n_signals*n_samples");
    }
    bs.seekg(0);

    SignalSet set;
    set.segment_len = n_samples;
    set.source_id = header.value("source_id", std::string{});
    std::vector<std::string> labels;
    if (header.contains("labels") && header["labels"].is_array()) {
        labels = header["labels"].get<std::vector<std::string>>();
        if (labels.size() != n_signals) {
            throw FormatError("bundle header field 'labels' length mismatch");
        }
    }
    set.signals.resize(n_signals);
    for (std::size_t i = 0; i < n_signals; ++i) {
        auto& sig = set.signals[i];
        sig.sample_rate_hz = fs;
        if (!labels.empty()) sig.label = labels[i];
        sig.samples.resize(n_samples);
        bs.read(reinterpret_cast<char*>(sig.samples.data()),
                static_cast<std::streamsize>(n_samples * sizeof(double)));
        if (!bs) throw FormatError("short read on bundle payload");
        if (!all_finite(sig.samples)) {
            throw FormatError("bundle payload contains non-finite samples (signal " +
                              std::to_string(i) + ")");
        }
    }
    return set;
}

}  // namespace vbcm
