#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pcls {

using Int = boost::multiprecision::cpp_int;

// Exact rational, always in lowest terms with positive denominator
// (the backend canonicalizes on every operation).
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& r) { return numerator(r); }
inline Int rat_den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Throws if r is not an integer.
inline Int to_integer(const Rational& r) {
    if (!is_integer(r)) throw std::domain_error("expected an integer, got " + r.str());
    return numerator(r);
}

inline std::string rat_str(const Rational& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// C(n, k) for integer n of either sign, via the falling-factorial definition:
// C(n, k) = n (n-1) ... (n-k+1) / k!.  This is what evaluating the polynomial
// C(q, k) at q = n gives, so C(-n, k) = (-1)^k C(n+k-1, k) automatically.
inline Int binomial(const Int& n, int k) {
    if (k < 0) return 0;
    Int num = 1;
    for (int t = 0; t < k; ++t) num *= (n - t);
    Int den = factorial(k);
    Int q = num / den;
    if (q * den != num) throw std::logic_error("binomial: non-exact division");
    return q;
}

// Moebius function by trial factorization; inputs here are tiny (gcds of
// multidegree entries).
inline int moebius(int n) {
    if (n <= 0) throw std::domain_error("moebius: n must be positive");
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

} // namespace pcls
