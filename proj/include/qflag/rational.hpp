#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace qflag {

using Rational = mpq_class;

// Parses "num", "num/den", or "-num/den". Throws on a zero denominator.
inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational: " + s);
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) {
    return r.get_str();
}

}  // namespace qflag
