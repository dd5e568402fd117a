#pragma once

#include "pcls/errors.hpp"
#include "pcls/exponent.hpp"
#include "pcls/numeric.hpp"

#include <map>
#include <optional>
#include <vector>

namespace pcls {

// Finite truncation region: per-vertex exponent caps, a total-degree cap, or
// both.  At least one bound must be present.  Regions are downward closed
// (m in region and m' <= m componentwise implies m' in region), which is what
// makes truncated multiplication exact on the region.
struct Truncation {
    int n = 0;
    std::optional<std::vector<int>> vertex_caps;
    std::optional<int> total_cap;

    static Truncation by_total(int n, int cap);
    static Truncation by_vertex(std::vector<int> caps);
    static Truncation of(int n, std::optional<std::vector<int>> caps, std::optional<int> total);

    bool contains(const ExponentVec& m) const;
    Truncation intersect(const Truncation& o) const;

    // Largest possible total degree inside the region.
    int max_total() const;

    // Every lattice point in the region (including zero), graded lex order.
    std::vector<ExponentVec> points() const;

    bool operator==(const Truncation& o) const = default;
};

// Multivariate formal power series with exact rational coefficients,
// truncated to a region.  A missing table entry means coefficient zero; every
// operation keeps the table exact on the (intersected) region.
class MSeries {
public:
    MSeries() = default;
    explicit MSeries(Truncation t) : trunc_(std::move(t)) {}

    static MSeries one(Truncation t);
    static MSeries monomial(Truncation t, const ExponentVec& m, const Rational& c);

    const Truncation& trunc() const { return trunc_; }
    const std::map<ExponentVec, Rational>& terms() const { return coeff_; }

    Rational coeff(const ExponentVec& m) const;
    void set_coeff(const ExponentVec& m, const Rational& c);
    void add_coeff(const ExponentVec& m, const Rational& c);

    bool is_zero() const { return coeff_.empty(); }

    MSeries operator+(const MSeries& o) const;
    MSeries operator-(const MSeries& o) const;
    MSeries operator*(const MSeries& o) const;
    MSeries operator*(const Rational& c) const;
    MSeries operator-() const;
    bool operator==(const MSeries& o) const {
        return trunc_ == o.trunc_ && coeff_ == o.coeff_;
    }

    // Multiplicative inverse on the region; requires a nonzero constant term.
    MSeries inverse() const;

    // this^q for an integer q of either sign, via sum_k C(q,k) (this - 1)^k;
    // requires constant term exactly 1.  For q >= 0 this agrees with repeated
    // multiplication, for q < 0 with powers of the inverse.
    MSeries int_pow(const Int& q) const;

private:
    Truncation trunc_;
    std::map<ExponentVec, Rational> coeff_;
};

MSeries series_mul(const MSeries& a, const MSeries& b);
MSeries series_inverse(const MSeries& a);
MSeries series_int_pow(const MSeries& a, const Int& q);

// (1 + sign*x^m)^e truncated to t, for integer e of either sign and
// sign = +1 or -1.  Exact: sum_k C(e,k) sign^k x^{k m}.
MSeries binom_factor(const Truncation& t, const ExponentVec& m, int sign, const Int& e);

// Exponents inside the intersection of the two regions where the
// coefficients differ, graded lex order.
std::vector<ExponentVec> series_mismatches(const MSeries& a, const MSeries& b);

} // namespace pcls
