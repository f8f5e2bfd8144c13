#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace polycert {

// Exact arbitrary-precision rationals back every symbolic computation;
// doubles appear only in simulation and sampling.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rational_from_string(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational literal: " + text);
    r.canonicalize();
    return r;
}

inline std::string rational_to_string(const Rational& r) { return r.get_str(); }

inline double rational_to_double(const Rational& r) { return r.get_d(); }

inline int rational_sign(const Rational& r) { return sgn(r); }

}  // namespace polycert
