#include "vbcm/papr_stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "vbcm/kernels.hpp"
#include "vbcm/special.hpp"

namespace vbcm {

void CcdfCurve::validate() const {
    if (thresholds_db.size() != probabilities.size()) {
        throw ParamError("ccdf curve arrays differ in length");
    }
    for (std::size_t i = 0; i + 1 < thresholds_db.size(); ++i) {
        if (!(thresholds_db[i] < thresholds_db[i + 1])) {
            throw ParamError("ccdf thresholds must be strictly ascending");
        }
    }
    for (double p : probabilities) {
        if (!(p >= 0.0 && p <= 1.0)) throw ParamError("ccdf probability outside [0,1]");
    }
    for (std::size_t i = 0; i + 1 < probabilities.size(); ++i) {
        if (probabilities[i + 1] > probabilities[i] + 1e-12) {
            throw ParamError("ccdf probabilities must be non-increasing");
        }
    }
}

std::string to_string(CcdfKind k) {
    switch (k) {
        case CcdfKind::exact: return "exact";
        case CcdfKind::closed_form: return "closed_form";
        case CcdfKind::empirical: return "empirical";
    }
    return "?";
}

double papr(const VibrationSignal& signal) {
    validate_signal(signal);
    const double peak = kernels::max_abs(signal.samples);
    const double mean_pow = kernels::mean_power(signal.samples);
    if (mean_pow <= 0.0) throw DegenerateError("papr undefined for all-zero signal");
    return peak * peak / mean_pow;
}

double papr_db(double ratio) {
    if (!(ratio > 0.0)) throw ParamError("papr ratio must be positive");
    return db_from_ratio(ratio);
}

double ccdf_exact(double p_o_db, std::size_t n_samples) {
    if (n_samples < 1) throw ParamError("n_samples must be >= 1");
    const double po = ratio_from_db(p_o_db);
    const double cdf = erf_approx(std::sqrt(po / 2.0));
    return 1.0 - std::pow(cdf, static_cast<double>(n_samples));
}

double ccdf_closed_form(double p_o_db, std::size_t n_samples) {
    if (n_samples < 1) throw ParamError("n_samples must be >= 1");
    if (p_o_db < 3.0) {
        throw RangeError("closed-form CCDF requires P_o >= 3 dB (asymptotic validity)");
    }
    const double po = ratio_from_db(p_o_db);
    const double q = std::exp(-po / 2.0) / std::sqrt(po * 1.5707963267948966);
    const double v = 1.0 - std::pow(1.0 - q, static_cast<double>(n_samples));
    return std::clamp(v, 0.0, 1.0);
}

namespace {

template <typename Fn>
CcdfCurve analytic_curve(const std::vector<double>& thresholds_db,
                         std::size_t n_samples, CcdfKind kind, Fn&& f) {
    CcdfCurve c;
    c.kind = kind;
    c.n_samples = n_samples;
    c.thresholds_db = thresholds_db;
    c.probabilities.resize(thresholds_db.size());
    for (std::size_t i = 0; i < thresholds_db.size(); ++i) {
        c.probabilities[i] = f(thresholds_db[i], n_samples);
    }
    c.validate();
    return c;
}

}  // namespace

CcdfCurve ccdf_exact_curve(const std::vector<double>& thresholds_db,
                           std::size_t n_samples) {
    return analytic_curve(thresholds_db, n_samples, CcdfKind::exact,
                          [](double db, std::size_t n) { return ccdf_exact(db, n); });
}

CcdfCurve ccdf_closed_form_curve(const std::vector<double>& thresholds_db,
                                 std::size_t n_samples) {
    return analytic_curve(thresholds_db, n_samples, CcdfKind::closed_form,
                          [](double db, std::size_t n) { return ccdf_closed_form(db, n); });
}

CcdfCurve ccdf_empirical(const SignalSet& set,
                         const std::vector<double>& thresholds_db) {
    validate_set(set);
    for (std::size_t i = 0; i + 1 < thresholds_db.size(); ++i) {
        if (!(thresholds_db[i] < thresholds_db[i + 1])) {
            throw ParamError("thresholds must be strictly ascending");
        }
    }
    const std::ptrdiff_t n_sig = static_cast<std::ptrdiff_t>(set.size());
    std::vector<double> papr_dbs(set.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n_sig; ++i) {
        papr_dbs[static_cast<std::size_t>(i)] =
            papr_db(papr(set.signals[static_cast<std::size_t>(i)]));
    }
    CcdfCurve c;
    c.kind = CcdfKind::empirical;
    c.n_samples = set.signals.front().size();
    c.thresholds_db = thresholds_db;
    c.probabilities.resize(thresholds_db.size());
    for (std::size_t t = 0; t < thresholds_db.size(); ++t) {
        std::size_t above = 0;
        for (double p : papr_dbs) {
            if (p > thresholds_db[t]) ++above;  // strict, per the tail-event definition
        }
        c.probabilities[t] = static_cast<double>(above) / static_cast<double>(set.size());
    }
    c.validate();
    return c;
}

void write_ccdf_csv(const CcdfCurve& curve, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write CCDF CSV: " + path);
    out << "threshold_db,probability,kind,n_samples\n";
    char buf[64];
    for (std::size_t i = 0; i < curve.thresholds_db.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g", curve.thresholds_db[i],
                      curve.probabilities[i]);
        out << buf << ',' << to_string(curve.kind) << ',' << curve.n_samples << "\n";
    }
}

std::vector<double> threshold_grid(double from_db, double to_db, double step_db) {
    if (!(step_db > 0.0) || !(to_db >= from_db)) {
        throw ParamError("invalid threshold grid");
    }
    std::vector<double> g;
    const auto n = static_cast<std::size_t>(std::floor((to_db - from_db) / step_db + 0.5));
    g.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        double v = from_db + static_cast<double>(i) * step_db;
        if (v > to_db + 1e-12) break;
        g.push_back(v);
    }
    return g;
}

}  // namespace vbcm
