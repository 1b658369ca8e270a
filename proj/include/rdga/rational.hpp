#pragma once
#include <gmpxx.h>
#include <string>

namespace rdga {

using Rational = mpq_class;

// a/b in lowest terms (the two-argument mpq constructor does not reduce)
inline Rational ratio(long a, long b) {
    Rational q(a, b);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Parses "3", "-7/2" or a plain decimal like "0.25".
Rational parse_rational(const std::string& s);

inline int sign_pow(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace rdga
