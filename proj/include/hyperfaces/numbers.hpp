#pragma once

#include "hyperfaces/rational.hpp"

namespace hyperfaces {

BigInt factorial(int n);

// Generalized binomial coefficient C(top, k): zero for k < 0, defined for
// negative top via the falling-factorial form.
BigInt binomial(const BigInt& top, long k);
inline BigInt binomial(long top, long k) { return binomial(BigInt(top), k); }

// (x)_k = x(x-1)...(x-k+1)
BigInt falling_factorial(const BigInt& x, int k);

// Signless Stirling number of the first kind: permutations of [n] with
// exactly k cycles.
BigInt stirling1_unsigned(int n, int k);

}  // namespace hyperfaces
