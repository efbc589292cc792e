#pragma once

#include <utility>

#include "hyperfaces/polynomial.hpp"

namespace hyperfaces {

// Interval endpoint: a finite rational or +/- infinity.
struct Bound {
    enum class Kind { NegInf, Finite, PosInf };
    Kind kind = Kind::Finite;
    Rational value;

    static Bound neg_inf() { return {Kind::NegInf, Rational(0)}; }
    static Bound pos_inf() { return {Kind::PosInf, Rational(0)}; }
    static Bound at(Rational v) { return {Kind::Finite, std::move(v)}; }
};

// Number of distinct real roots of p in (lo, hi], decided by exact Sturm
// chain sign-variation counting on the squarefree part of p.
// Throws ZeroPolynomial when p is identically zero.
long sturm_real_root_count(const Poly& p, const Bound& lo, const Bound& hi);

}  // namespace hyperfaces
