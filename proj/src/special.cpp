#include "vbcm/special.hpp"

#include <cmath>
#include <limits>

namespace vbcm {

namespace {

constexpr double kTwoOverSqrtPi = 1.1283791670955125738961589031215;

// erf via its Maclaurin series; converges in < 45 terms for |x| < 2 with at
// most one decimal digit lost to cancellation.
double erf_series(double x) {
    const double x2 = x * x;
    double term = x;
    double sum = x;
    for (int n = 1; n < 200; ++n) {
        term *= -x2 / n;
        double add = term / (2 * n + 1);
        sum += add;
        if (std::fabs(add) < 1e-18 * std::fabs(sum)) break;
    }
    return kTwoOverSqrtPi * sum;
}

// erfc(x) = e^{-x^2}/sqrt(pi) * 1/(x + (1/2)/(x + (2/2)/(x + (3/2)/(x + ...))))
// evaluated with the modified Lentz algorithm; x >= 2.
double erfc_cf(double x) {
    const double tiny = 1e-300;
    double f = x > tiny ? x : tiny;
    double c = f;
    double d = 0.0;
    for (int n = 1; n < 300; ++n) {
        double a = 0.5 * n;
        d = x + a * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = x + a / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = c * d;
        f *= delta;
        if (std::fabs(delta - 1.0) < 1e-17) break;
    }
    return std::exp(-x * x) / 1.7724538509055160272981674833411 / f;
}

}  // namespace

double erf_approx(double x) {
    if (std::isnan(x)) return x;
    const double a = std::fabs(x);
    double v;
    if (a < 2.0) {
        v = erf_series(a);
    } else if (a > 27.0) {
        v = 1.0;  // erfc underflows double
    } else {
        v = 1.0 - erfc_cf(a);
    }
    return x < 0.0 ? -v : v;
}

double erfc_approx(double x) {
    if (std::isnan(x)) return x;
    if (x >= 2.0) return x > 27.0 ? 0.0 : erfc_cf(x);
    if (x <= -2.0) return 2.0 - erfc_approx(-x);
    return 1.0 - erf_series(x);
}

}  // namespace vbcm
