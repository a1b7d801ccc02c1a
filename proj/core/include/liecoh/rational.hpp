#pragma once

#include <gmpxx.h>

#include <string>

#include "liecoh/errors.hpp"

namespace liecoh {

/// Exact arbitrary-precision rational. Everything in this library is
/// computed over Q; there is no floating point anywhere. mpq_class keeps
/// values canonical (lowest terms, positive denominator, 0 == 0/1).
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r) {
    return r.get_str();
}

/// Parses "p" or "p/q" (arbitrary precision). Rejects q == 0 and garbage.
inline Rational parse_rational(const std::string& text) {
    if (text.empty())
        throw input_error("empty rational literal");
    mpq_t raw;
    mpq_init(raw);
    if (mpq_set_str(raw, text.c_str(), 10) != 0) {
        mpq_clear(raw);
        throw input_error("unparsable rational literal '" + text + "'");
    }
    if (mpz_sgn(mpq_denref(raw)) == 0) {
        mpq_clear(raw);
        throw input_error("zero denominator in rational literal '" + text + "'");
    }
    Rational r(raw);
    mpq_clear(raw);
    r.canonicalize();
    return r;
}

} // namespace liecoh
