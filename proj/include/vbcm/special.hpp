#pragma once

#include <cmath>

namespace vbcm {

// Error function, implemented in-repo: Maclaurin series for |x| < 2 and a
// Lentz-evaluated continued fraction for the tail. Absolute error is below
// 1e-14 over the real line (validated against a long-double series oracle
// and std::erf in the tests).
double erf_approx(double x);
double erfc_approx(double x);

inline double db_from_ratio(double r) { return 10.0 * std::log10(r); }
inline double ratio_from_db(double db) { return std::pow(10.0, db / 10.0); }

}  // namespace vbcm
