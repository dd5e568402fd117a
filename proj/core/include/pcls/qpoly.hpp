#pragma once

#include "pcls/numeric.hpp"

#include <string>
#include <vector>

namespace pcls {

// Polynomial in one variable q with exact rational coefficients, stored in
// the binomial basis { C(q,0), C(q,1), C(q,2), ... }.  The counting formulas
// produce binomial coefficients directly, and evaluation at negative integers
// via the falling-factorial definition of C(q,k) is then automatic.  A
// monomial (power-basis) view is computed on demand.
class QPoly {
public:
    QPoly() = default; // zero

    static QPoly constant(const Rational& c);
    // C(q, k)
    static QPoly binomial(int k);
    // C(q - shift, k)
    static QPoly shifted_binomial(const Int& shift, int k);
    // C(a*q, k)
    static QPoly scaled_binomial(const Int& a, int k);
    static QPoly from_binomial_coeffs(std::vector<Rational> coeffs);
    // coeffs[i] = coefficient of q^i
    static QPoly from_monomial(const std::vector<Rational>& coeffs);

    // Coefficients in the binomial basis, index k, no trailing zeros.
    const std::vector<Rational>& binomial_coeffs() const { return b_; }
    // Coefficients in the power basis, index = power of q, no trailing zeros.
    std::vector<Rational> monomial_coeffs() const;

    bool is_zero() const { return b_.empty(); }
    int degree() const { return static_cast<int>(b_.size()) - 1; } // -1 for zero

    Rational eval(const Rational& q) const;

    // Coefficient of q^1 in the power basis, computed directly from the
    // binomial basis: [q] C(q,k) = (-1)^{k-1} / k for k >= 1.
    Rational coeff_of_q() const;

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const Rational& c) const;
    QPoly operator-() const;
    bool operator==(const QPoly& o) const { return b_ == o.b_; }

    std::string str_binomial() const;
    std::string str_monomial() const;

private:
    void trim();
    std::vector<Rational> b_;
};

} // namespace pcls
