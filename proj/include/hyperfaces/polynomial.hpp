#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hyperfaces/rational.hpp"

namespace hyperfaces {

// Univariate polynomial with exact rational coefficients, dense form,
// indexed by degree. The zero polynomial is canonicalized to an empty
// coefficient vector and reports degree() == -1; anything that consumes a
// degree must branch on that sentinel explicitly.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly constant(const Rational& c);
    static Poly monomial(int degree, const Rational& c = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int k) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational leading() const;

    Rational eval(const Rational& x) const;
    Poly derivative() const;
    Poly with_negated_argument() const;  // p(x) -> p(-x)

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rational& c);
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void trim();
    std::vector<Rational> coeffs_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rational& c, Poly p);
Poly operator*(Poly p, const Rational& c);

// Quotient and remainder over the rationals; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

// Monic gcd; gcd(p, 0) is the monic multiple of p, gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

// p with repeated roots collapsed: p / gcd(p, p').
Poly squarefree_part(const Poly& p);

// C(x + shift, k) = (x+shift)(x+shift-1)...(x+shift-k+1)/k! as a degree-k
// polynomial; k = 0 gives the constant 1.
Poly binom_poly(long shift, int k);

std::string to_plain_string(const Poly& p, const std::string& var = "x");
std::string to_latex_string(const Poly& p, const std::string& var = "x");

}  // namespace hyperfaces
