#include "pcls/qpoly.hpp"

#include <stdexcept>

namespace pcls {

namespace {

// Monomial coefficients of (q - r0)(q - r1)...(q - r{k-1}).
std::vector<Rational> expand_roots(const std::vector<Rational>& roots) {
    std::vector<Rational> c{1};
    for (const Rational& r : roots) {
        std::vector<Rational> next(c.size() + 1, Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= c[i] * r;
        }
        c = std::move(next);
    }
    return c;
}

// Monomial coefficients of C(q - shift, k) with the variable scaled by a,
// i.e. of the polynomial C(a*q - shift, k) in q.
std::vector<Rational> binom_mono(const Int& a, const Int& shift, int k) {
    std::vector<Rational> c{1};
    for (int t = 0; t < k; ++t) {
        // multiply by (a*q - shift - t)
        std::vector<Rational> next(c.size() + 1, Rational(0));
        Rational off(shift + t);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i] * Rational(a);
            next[i] -= c[i] * off;
        }
        c = std::move(next);
    }
    Rational kf(factorial(k));
    for (auto& x : c) x /= kf;
    return c;
}

} // namespace

void QPoly::trim() {
    while (!b_.empty() && b_.back() == 0) b_.pop_back();
}

QPoly QPoly::constant(const Rational& c) {
    QPoly p;
    if (c != 0) p.b_ = {c};
    return p;
}

QPoly QPoly::binomial(int k) {
    if (k < 0) throw std::domain_error("QPoly::binomial: negative k");
    QPoly p;
    p.b_.assign(k + 1, Rational(0));
    p.b_[k] = 1;
    return p;
}

QPoly QPoly::from_binomial_coeffs(std::vector<Rational> coeffs) {
    QPoly p;
    p.b_ = std::move(coeffs);
    p.trim();
    return p;
}

QPoly QPoly::from_monomial(const std::vector<Rational>& coeffs) {
    // Peel from the top: the leading monomial coefficient c_d contributes
    // c_d * d! to the basis element C(q,d), whose expansion is then
    // subtracted off.
    std::vector<Rational> rem = coeffs;
    auto deg = [&]() {
        int d = static_cast<int>(rem.size()) - 1;
        while (d >= 0 && rem[d] == 0) --d;
        return d;
    };
    QPoly p;
    int d = deg();
    if (d < 0) return p;
    p.b_.assign(d + 1, Rational(0));
    while ((d = deg()) >= 0) {
        Rational a = rem[d] * Rational(factorial(d));
        p.b_[d] = a;
        std::vector<Rational> expand = binom_mono(1, 0, d);
        for (int i = 0; i <= d; ++i) rem[i] -= a * expand[i];
    }
    p.trim();
    return p;
}

QPoly QPoly::shifted_binomial(const Int& shift, int k) {
    return from_monomial(binom_mono(1, shift, k));
}

QPoly QPoly::scaled_binomial(const Int& a, int k) {
    return from_monomial(binom_mono(a, 0, k));
}

std::vector<Rational> QPoly::monomial_coeffs() const {
    std::vector<Rational> m;
    for (std::size_t k = 0; k < b_.size(); ++k) {
        if (b_[k] == 0) continue;
        std::vector<Rational> e = binom_mono(1, 0, static_cast<int>(k));
        if (m.size() < e.size()) m.resize(e.size(), Rational(0));
        for (std::size_t i = 0; i < e.size(); ++i) m[i] += b_[k] * e[i];
    }
    while (!m.empty() && m.back() == 0) m.pop_back();
    return m;
}

Rational QPoly::eval(const Rational& q) const {
    Rational s = 0;
    for (std::size_t k = 0; k < b_.size(); ++k) {
        if (b_[k] == 0) continue;
        Rational binom = 1;
        for (std::size_t t = 0; t < k; ++t) binom *= (q - Rational(Int(t)));
        binom /= Rational(factorial(static_cast<int>(k)));
        s += b_[k] * binom;
    }
    return s;
}

Rational QPoly::coeff_of_q() const {
    Rational s = 0;
    for (std::size_t k = 1; k < b_.size(); ++k) {
        Rational term = b_[k] / Rational(Int(k));
        s += (k % 2 == 1) ? term : -term;
    }
    return s;
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly r;
    r.b_.assign(std::max(b_.size(), o.b_.size()), Rational(0));
    for (std::size_t i = 0; i < b_.size(); ++i) r.b_[i] += b_[i];
    for (std::size_t i = 0; i < o.b_.size(); ++i) r.b_[i] += o.b_[i];
    r.trim();
    return r;
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.b_) c = -c;
    return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> a = monomial_coeffs(), b = o.monomial_coeffs();
    std::vector<Rational> c(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return from_monomial(c);
}

QPoly QPoly::operator*(const Rational& c) const {
    QPoly r = *this;
    for (auto& x : r.b_) x *= c;
    r.trim();
    return r;
}

namespace {

// Shared term formatting: sign-separated "coef*SYM/den" pieces where SYM is
// "q^k" or "C(q,k)".
std::string join_terms(const std::vector<std::pair<std::string, Rational>>& terms) {
    std::string out;
    for (const auto& [sym, c] : terms) {
        if (c == 0) continue;
        Rational a = c < 0 ? -c : c;
        std::string piece;
        Int num = rat_num(a), den = rat_den(a);
        if (sym.empty()) {
            piece = rat_str(a);
        } else {
            piece = (num == 1) ? sym : num.str() + "*" + sym;
            if (den != 1) piece += "/" + den.str();
        }
        if (out.empty()) {
            out = (c < 0 ? "-" : "") + piece;
        } else {
            out += (c < 0 ? " - " : " + ") + piece;
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace

std::string QPoly::str_binomial() const {
    std::vector<std::pair<std::string, Rational>> terms;
    for (std::size_t k = 0; k < b_.size(); ++k) {
        std::string sym = k == 0 ? "" : "C(q," + std::to_string(k) + ")";
        terms.push_back({sym, b_[k]});
    }
    return join_terms(terms);
}

std::string QPoly::str_monomial() const {
    std::vector<Rational> m = monomial_coeffs();
    std::vector<std::pair<std::string, Rational>> terms;
    for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i) {
        std::string sym = i == 0 ? "" : (i == 1 ? "q" : "q^" + std::to_string(i));
        terms.push_back({sym, m[i]});
    }
    return join_terms(terms);
}

} // namespace pcls
