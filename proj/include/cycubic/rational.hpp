#pragma once

#include <gmpxx.h>

#include <string>

namespace cycubic {

/// Exact rational scalar. All coefficient arithmetic in the project is exact;
/// there is no floating-point fallback anywhere.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Builds a rational from decimal strings; denominator must be positive after
/// canonicalization (the wire format requires it, gmp guarantees it).
Rational rat_from_strings(const std::string& num, const std::string& den);

std::string num_string(const Rational& r);
std::string den_string(const Rational& r);

/// Human-readable "n/d" (or just "n" for integers).
std::string rat_string(const Rational& r);

} // namespace cycubic
