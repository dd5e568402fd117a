#include "pcls/mseries.hpp"

#include <algorithm>

namespace pcls {

Truncation Truncation::by_total(int n, int cap) {
    return of(n, std::nullopt, cap);
}

Truncation Truncation::by_vertex(std::vector<int> caps) {
    int n = static_cast<int>(caps.size());
    return of(n, std::move(caps), std::nullopt);
}

Truncation Truncation::of(int n, std::optional<std::vector<int>> caps, std::optional<int> total) {
    if (!caps && !total) throw InvalidInput("truncation: no bound given");
    if (caps && static_cast<int>(caps->size()) != n)
        throw InvalidInput("truncation: cap vector size mismatch");
    if (caps)
        for (int c : *caps)
            if (c < 0) throw InvalidInput("truncation: negative cap");
    if (total && *total < 0) throw InvalidInput("truncation: negative total cap");
    Truncation t;
    t.n = n;
    t.vertex_caps = std::move(caps);
    t.total_cap = total;
    return t;
}

bool Truncation::contains(const ExponentVec& m) const {
    for (const auto& [v, e] : m.terms()) {
        if (v >= n) return false;
        if (vertex_caps && e > (*vertex_caps)[v]) return false;
    }
    if (total_cap && m.total() > *total_cap) return false;
    return true;
}

Truncation Truncation::intersect(const Truncation& o) const {
    if (n != o.n) throw InvalidInput("truncation: variable count mismatch");
    Truncation t;
    t.n = n;
    if (vertex_caps && o.vertex_caps) {
        std::vector<int> caps(n);
        for (int i = 0; i < n; ++i) caps[i] = std::min((*vertex_caps)[i], (*o.vertex_caps)[i]);
        t.vertex_caps = std::move(caps);
    } else if (vertex_caps) {
        t.vertex_caps = vertex_caps;
    } else {
        t.vertex_caps = o.vertex_caps;
    }
    if (total_cap && o.total_cap) t.total_cap = std::min(*total_cap, *o.total_cap);
    else if (total_cap) t.total_cap = total_cap;
    else t.total_cap = o.total_cap;
    return t;
}

int Truncation::max_total() const {
    int by_caps = 0;
    if (vertex_caps)
        for (int c : *vertex_caps) by_caps += c;
    if (total_cap && vertex_caps) return std::min(*total_cap, by_caps);
    if (total_cap) return *total_cap;
    return by_caps;
}

std::vector<ExponentVec> Truncation::points() const {
    std::vector<ExponentVec> out;
    std::vector<int> cur(n, 0);
    int budget = max_total();
    auto rec = [&](auto&& self, int v, int used) -> void {
        if (v == n) {
            out.push_back(ExponentVec::dense(cur));
            return;
        }
        int cap = budget - used;
        if (vertex_caps) cap = std::min(cap, (*vertex_caps)[v]);
        for (int e = 0; e <= cap; ++e) {
            cur[v] = e;
            self(self, v + 1, used + e);
        }
        cur[v] = 0;
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

MSeries MSeries::one(Truncation t) {
    MSeries s(std::move(t));
    s.set_coeff(ExponentVec{}, 1);
    return s;
}

MSeries MSeries::monomial(Truncation t, const ExponentVec& m, const Rational& c) {
    MSeries s(std::move(t));
    s.set_coeff(m, c);
    return s;
}

Rational MSeries::coeff(const ExponentVec& m) const {
    auto it = coeff_.find(m);
    return it == coeff_.end() ? Rational(0) : it->second;
}

void MSeries::set_coeff(const ExponentVec& m, const Rational& c) {
    if (!trunc_.contains(m)) return;
    if (c == 0) coeff_.erase(m);
    else coeff_[m] = c;
}

void MSeries::add_coeff(const ExponentVec& m, const Rational& c) {
    if (!trunc_.contains(m)) return;
    auto it = coeff_.find(m);
    if (it == coeff_.end()) {
        if (c != 0) coeff_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) coeff_.erase(it);
}

MSeries MSeries::operator+(const MSeries& o) const {
    MSeries r(trunc_.intersect(o.trunc_));
    for (const auto& [m, c] : coeff_) r.add_coeff(m, c);
    for (const auto& [m, c] : o.coeff_) r.add_coeff(m, c);
    return r;
}

MSeries MSeries::operator-(const MSeries& o) const { return *this + (-o); }

MSeries MSeries::operator-() const {
    MSeries r = *this;
    for (auto& [m, c] : r.coeff_) c = -c;
    return r;
}

MSeries MSeries::operator*(const MSeries& o) const {
    MSeries r(trunc_.intersect(o.trunc_));
    for (const auto& [ma, ca] : coeff_) {
        for (const auto& [mb, cb] : o.coeff_) {
            ExponentVec m = ma + mb;
            if (r.trunc().contains(m)) r.add_coeff(m, ca * cb);
        }
    }
    return r;
}

MSeries MSeries::operator*(const Rational& c) const {
    MSeries r(trunc_);
    if (c == 0) return r;
    for (const auto& [m, x] : coeff_) r.set_coeff(m, x * c);
    return r;
}

MSeries MSeries::inverse() const {
    Rational a0 = coeff(ExponentVec{});
    if (a0 == 0) throw InvalidInput("series inverse: zero constant term");
    MSeries b(trunc_);
    b.set_coeff(ExponentVec{}, 1 / a0);
    // Order-by-order: the recursion for b[m] only consults b at strictly
    // smaller exponents, which graded-lex iteration has already filled.
    for (const ExponentVec& m : trunc_.points()) {
        if (m.is_zero()) continue;
        Rational s = 0;
        for (const auto& [k, ak] : coeff_) {
            if (k.is_zero()) continue;
            auto rest = m.minus(k);
            if (!rest) continue;
            s += ak * b.coeff(*rest);
        }
        if (s != 0) b.set_coeff(m, -s / a0);
    }
    return b;
}

MSeries MSeries::int_pow(const Int& q) const {
    if (coeff(ExponentVec{}) != 1)
        throw InvalidInput("series int_pow: constant term must be 1");
    MSeries g = *this;
    g.add_coeff(ExponentVec{}, -1);
    MSeries acc = MSeries::one(trunc_);
    MSeries p = MSeries::one(trunc_);
    int kmax = trunc_.max_total();
    for (int k = 1; k <= kmax; ++k) {
        p = p * g;
        if (p.is_zero()) break;
        acc = acc + p * Rational(binomial(q, k));
    }
    return acc;
}

MSeries series_mul(const MSeries& a, const MSeries& b) { return a * b; }
MSeries series_inverse(const MSeries& a) { return a.inverse(); }
MSeries series_int_pow(const MSeries& a, const Int& q) { return a.int_pow(q); }

MSeries binom_factor(const Truncation& t, const ExponentVec& m, int sign, const Int& e) {
    if (m.is_zero()) throw InvalidInput("binom_factor: zero exponent");
    MSeries s(t);
    int kmax = t.max_total() / std::max(1, m.total());
    ExponentVec mk;
    for (int k = 0; k <= kmax; ++k) {
        Rational c(binomial(e, k));
        if (sign < 0 && k % 2 == 1) c = -c;
        s.add_coeff(mk, c);
        mk = mk + m;
    }
    return s;
}

std::vector<ExponentVec> series_mismatches(const MSeries& a, const MSeries& b) {
    Truncation t = a.trunc().intersect(b.trunc());
    std::vector<ExponentVec> bad;
    for (const ExponentVec& m : t.points())
        if (a.coeff(m) != b.coeff(m)) bad.push_back(m);
    return bad;
}

} // namespace pcls
