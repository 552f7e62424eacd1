#pragma once

#include <gmpxx.h>
#include <optional>
#include <string>

namespace dgla {

// Ground field: exact rationals (GMP-backed). Arithmetic on mpq_class keeps
// the canonical form (reduced, denominator > 0); constructors from raw
// num/den pairs must go through rational_from, which canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational_from(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rational_from(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Prints integers without the "/1" suffix, everything else as "p/q".
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q"; denominator must be positive and nonzero.
std::optional<Rational> parse_rational(const std::string& text);

} // namespace dgla
