#ifndef CREMONA_RATIONAL_HPP
#define CREMONA_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

#include "error.hpp"

namespace cremona {

// Exact arithmetic throughout: every coefficient in the library is an
// mpq_class kept in canonical form (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) fail(Err::InvalidArgument, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) fail(Err::InvalidArgument, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p" or "p/q" with optional sign, arbitrary precision.
inline Rational rational_from_string(const std::string& s) {
    if (s.empty()) fail(Err::ParseError, "empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        fail(Err::ParseError, "malformed rational literal: '" + s + "'");
    if (q.get_den() == 0)
        fail(Err::ParseError, "zero denominator in rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

} // namespace cremona

#endif
