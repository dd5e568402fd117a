#include "pcls/root_theory.hpp"

#include "pcls/errors.hpp"

namespace pcls {

int epsilon(const MarkedGraph& g, const ExponentVec& m) {
    int s = 0;
    for (const auto& [v, e] : m.terms())
        if (g.is_odd(v)) s += e;
    return s % 2 == 0 ? 1 : -1;
}

Int multiplicity(const MarkedGraph& g, const ExponentVec& m) {
    require_valid_multidegree(g, m);
    int g0 = m.entry_gcd();
    Rational s = 0;
    for (int l = 1; l <= g0; ++l) {
        if (g0 % l != 0) continue;
        int mu = moebius(l);
        if (mu == 0) continue;
        ExponentVec ml = m.divided(l);
        Rational piq = marked_chromatic(g, ml).coeff_of_q();
        int sign = (ml.total() - 1) % 2 == 0 ? 1 : -1;
        s += Rational(mu, l) * Rational(epsilon(g, ml) * sign) * piq;
    }
    s *= epsilon(g, m);
    if (!is_integer(s))
        throw InternalCheckFailure("multiplicity: NonIntegerResult at m=" + m.str());
    Int r = to_integer(s);
    if (r < 0)
        throw InternalCheckFailure("multiplicity: NegativeResult at m=" + m.str());
    return r;
}

RootVerdict root_verdict(const MarkedGraph& g, const ExponentVec& m) {
    require_valid_multidegree(g, m);
    RootVerdict v;
    std::vector<int> supp = m.support();

    v.support_connected = is_connected(g, supp);
    v.neighbor_sum_ok = true;
    for (const auto& [i, mi] : m.terms()) {
        if (!g.is_isotropic(i) || mi < 2) continue;
        int nbr_mass = 0;
        for (int j : g.neighbors(i)) nbr_mass += m.get(j);
        if (nbr_mass < mi) { v.neighbor_sum_ok = false; break; }
    }

    if (supp.size() == 1) {
        int i = supp[0], k = m.get(i);
        if (k == 1) {
            v.is_root = true;
            v.classification = RootClass::SimpleRoot;
        } else if (k == 2 && g.is_odd(i) && !g.is_isotropic(i)) {
            v.is_root = true;
            v.classification = RootClass::DoubledOddRoot;
        }
        return v;
    }

    v.in_P = v.support_connected && v.neighbor_sum_ok;
    v.is_star_element = v.in_P && star_center(g, supp).has_value();

    if (v.is_star_element) {
        int c = m.terms().front().second;
        bool equal_entries = true;
        for (const auto& [i, e] : m.terms())
            if (e != c) equal_entries = false;
        bool nonadj_isotropic = true;
        for (std::size_t a = 0; a < supp.size(); ++a)
            for (std::size_t b = a + 1; b < supp.size(); ++b)
                if (!g.adjacent(supp[a], supp[b]) &&
                    !(g.is_isotropic(supp[a]) && g.is_isotropic(supp[b])))
                    nonadj_isotropic = false;
        bool touches_isotropic = false;
        int odd_count = 0;
        for (int i : supp) {
            if (g.is_isotropic(i)) touches_isotropic = true;
            if (g.is_odd(i)) ++odd_count;
        }
        if (equal_entries && nonadj_isotropic && touches_isotropic) {
            if (odd_count % 2 == 0 && c >= 2) v.in_K20 = true;
            if (odd_count % 2 == 1 && c >= 3) v.in_K31 = true;
        }
    }

    if (v.in_P && !v.in_K20 && !v.in_K31) {
        v.is_root = true;
        v.classification = RootClass::GenericRoot;
    }
    return v;
}

std::vector<ExponentVec> all_multidegrees(const MarkedGraph& g, int height_cap) {
    Truncation t = Truncation::by_total(g.n(), height_cap);
    std::vector<ExponentVec> out;
    for (const ExponentVec& m : t.points())
        if (!m.is_zero()) out.push_back(m);
    return out;
}

std::vector<SignedMult> enumerate_roots(const MarkedGraph& g, int height_cap) {
    std::vector<SignedMult> out;
    for (const ExponentVec& m : all_multidegrees(g, height_cap)) {
        Int mult = multiplicity(g, m);
        if (mult > 0) out.push_back({m, mult, epsilon(g, m) == -1});
    }
    return out;
}

QPoly chromatic_from_multiplicities(const MarkedGraph& g, const ExponentVec& m) {
    require_valid_multidegree(g, m);
    if (m.total() > 8)
        throw GuardExceeded("chromatic_from_multiplicities: |m| <= 8 required");
    std::vector<SignedMult> roots = enumerate_roots(g, m.total());

    QPoly acc;
    // DFS over exponent choices k >= 0 per root, pruning on residual mass.
    auto rec = [&](auto&& self, std::size_t idx, const ExponentVec& rest,
                   const QPoly& factor, int sign) -> void {
        if (rest.is_zero()) {
            acc = acc + factor * Rational(sign);
            return;
        }
        if (idx == roots.size()) return;
        self(self, idx + 1, rest, factor, sign);
        const SignedMult& r = roots[idx];
        int eps = r.odd_parity ? -1 : 1;
        ExponentVec left = rest;
        for (int k = 1;; ++k) {
            auto next = left.minus(r.m);
            if (!next) break;
            left = *next;
            int term_sign = sign * (k % 2 == 1 ? -1 : 1) *
                            (r.odd_parity && k % 2 == 1 ? -1 : 1);
            QPoly f = factor * QPoly::scaled_binomial(Int(eps) * r.mult, k);
            self(self, idx + 1, left, f, term_sign);
        }
    };
    rec(rec, 0, m, QPoly::constant(1), 1);

    int outer = m.total() % 2 == 0 ? 1 : -1;
    return acc * Rational(outer);
}

} // namespace pcls
