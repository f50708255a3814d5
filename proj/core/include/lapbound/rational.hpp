#pragma once

#include <boost/rational.hpp>
#include <string>

namespace lapbound {

// Exact arithmetic for combinatorial quantities (degree sums, cut sizes,
// cut/(n-m) ratios).  Eigenvalue sums stay floating point; the rational side
// is converted at the comparison site, never earlier.
using Rational = boost::rational<long long>;

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// Canonical "p/q" rendering (q > 0, reduced).
inline std::string to_fraction_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace lapbound
