#pragma once

#include <gmpxx.h>

#include <string>

#include "hyperfaces/errors.hpp"

namespace hyperfaces {

// Exact arbitrary-precision integers and rationals (GMP-backed).
// Rationals are always kept in lowest terms with a positive denominator;
// equality is value equality.
using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline int sign_of(const BigInt& v) { return mpz_sgn(v.get_mpz_t()); }
inline int sign_of(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Exact conversion; throws NonIntegerResult if q has a denominator.
inline BigInt to_integer(const Rational& q) {
    if (!is_integer(q)) throw NonIntegerResult("expected an integer, got " + q.get_str());
    return q.get_num();
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace hyperfaces
