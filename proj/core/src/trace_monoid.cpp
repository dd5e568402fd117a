#include "pcls/trace_monoid.hpp"

#include "pcls/independence.hpp"

#include <algorithm>
#include <set>

namespace pcls {

namespace {

void validate_word(const MarkedGraph& g, const Word& w) {
    for (int x : w)
        if (x < 0 || x >= g.n())
            throw InvalidInput("UnknownVertex: letter " + std::to_string(x));
}

// Letters whose first occurrence is preceded only by non-adjacent letters,
// i.e. the possible first letters over the commutation class.
std::vector<int> movable_front(const MarkedGraph& g, const Word& w) {
    std::vector<bool> scanned(g.n(), false), out(g.n(), false);
    for (int x : w) {
        if (!scanned[x]) {
            bool free = true;
            for (int y = 0; y < g.n(); ++y)
                if (scanned[y] && g.adjacent(x, y)) { free = false; break; }
            if (free) out[x] = true;
            scanned[x] = true;
        } else {
            // a repeated letter blocks later letters adjacent to it, which
            // "scanned" already records
        }
    }
    std::vector<int> r;
    for (int x = 0; x < g.n(); ++x)
        if (out[x]) r.push_back(x);
    return r;
}

} // namespace

std::vector<int> initial_alphabet(const MarkedGraph& g, const Word& w) {
    validate_word(g, w);
    return movable_front(g, w);
}

std::vector<int> end_alphabet(const MarkedGraph& g, const Word& w) {
    validate_word(g, w);
    Word rev(w.rbegin(), w.rend());
    return movable_front(g, rev);
}

namespace {

Word greedy_extract(const MarkedGraph& g, const Word& w, bool take_max) {
    Word rest = w, out;
    out.reserve(w.size());
    while (!rest.empty()) {
        std::vector<int> front = movable_front(g, rest); // ascending ids
        int best = take_max ? front.back() : front.front();
        out.push_back(best);
        rest.erase(std::find(rest.begin(), rest.end(), best));
    }
    return out;
}

} // namespace

Word canonicalize(const MarkedGraph& g, const Word& w) {
    validate_word(g, w);
    return greedy_extract(g, w, true);
}

Word canonicalize_least(const MarkedGraph& g, const Word& w) {
    validate_word(g, w);
    return greedy_extract(g, w, false);
}

bool mprime_member(const MarkedGraph& g, const Word& w) {
    validate_word(g, w);
    for (int i : g.isotropic_vertices()) {
        int last_seen = -1;
        bool gap_filled = true;
        for (std::size_t t = 0; t < w.size(); ++t) {
            if (w[t] == i) {
                if (last_seen >= 0 && !gap_filled) return false;
                last_seen = static_cast<int>(t);
                gap_filled = false;
            } else if (g.adjacent(w[t], i)) {
                gap_filled = true;
            }
        }
    }
    return true;
}

namespace {

ExponentVec word_degree(const Word& w) {
    ExponentVec m;
    for (int x : w) m.set(x, m.get(x) + 1);
    return m;
}

bool ends_in(const MarkedGraph& g, const Word& w, const std::vector<int>& K) {
    for (int x : end_alphabet(g, w))
        if (!std::binary_search(K.begin(), K.end(), x)) return false;
    return true;
}

MSeries count_classes(const MarkedGraph& g, const Truncation& region,
                      const std::optional<std::vector<int>>& K, TraceEngine engine,
                      const TraceGuards& guards) {
    if (region.n != g.n()) throw InvalidInput("trace enumeration: region size mismatch");
    if (region.max_total() > guards.max_total_degree)
        throw GuardExceeded("trace enumeration: total degree cap " +
                            std::to_string(region.max_total()) + " exceeds guard " +
                            std::to_string(guards.max_total_degree));
    std::optional<std::vector<int>> Ksorted = K;
    if (Ksorted) {
        std::sort(Ksorted->begin(), Ksorted->end());
        for (int x : *Ksorted)
            if (x < 0 || x >= g.n()) throw InvalidInput("UnknownVertex in K");
    }

    std::set<Word> classes;
    auto guard_insert = [&](const Word& cw) {
        if (classes.size() >= guards.max_table)
            throw GuardExceeded("trace enumeration: dedup table limit");
        classes.insert(cw);
    };

    if (engine == TraceEngine::WordGeneration) {
        Word cur;
        ExponentVec deg;
        auto rec = [&](auto&& self) -> void {
            guard_insert(canonicalize(g, cur));
            for (int j = 0; j < g.n(); ++j) {
                deg.set(j, deg.get(j) + 1);
                if (region.contains(deg)) {
                    cur.push_back(j);
                    self(self);
                    cur.pop_back();
                }
                deg.set(j, deg.get(j) - 1);
            }
        };
        rec(rec);
        // Filter after the fact: membership tests are on canonical words.
        MSeries s(region);
        for (const Word& cw : classes) {
            if (!mprime_member(g, cw)) continue;
            if (Ksorted && !ends_in(g, cw, *Ksorted)) continue;
            s.add_coeff(word_degree(cw), 1);
        }
        return s;
    }

    // ClassBfs: the square-reduced canonical words form a language closed
    // under removing the last letter, so extending canonical words by one
    // letter reaches every class.
    std::vector<Word> frontier{{}};
    guard_insert({});
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
            ExponentVec deg = word_degree(w);
            for (int j = 0; j < g.n(); ++j) {
                deg.set(j, deg.get(j) + 1);
                if (region.contains(deg)) {
                    Word ext = w;
                    ext.push_back(j);
                    Word cw = canonicalize(g, ext);
                    if (!classes.count(cw) && mprime_member(g, cw)) {
                        guard_insert(cw);
                        next.push_back(cw);
                    }
                }
                deg.set(j, deg.get(j) - 1);
            }
        }
        frontier = std::move(next);
    }
    MSeries s(region);
    for (const Word& cw : classes) {
        if (Ksorted && !ends_in(g, cw, *Ksorted)) continue;
        s.add_coeff(word_degree(cw), 1);
    }
    return s;
}

} // namespace

MSeries enumerate_mprime(const MarkedGraph& g, const Truncation& region,
                         const std::optional<std::vector<int>>& K, TraceEngine engine,
                         const TraceGuards& guards) {
    return count_classes(g, region, K, engine, guards);
}

MSeries ug_hilbert(const MarkedGraph& g, const Truncation& region, TraceEngine engine,
                   const TraceGuards& guards) {
    return count_classes(g, region, std::nullopt, engine, guards);
}

SeriesCheck inversion_check(const MarkedGraph& g, const std::vector<int>& K,
                            const Truncation& region, TraceEngine engine,
                            const TraceGuards& guards) {
    MSeries lhs = enumerate_mprime(g, region, K, engine, guards) *
                  indep_series(g, region, -1);

    std::vector<int> Ksorted = K;
    std::sort(Ksorted.begin(), Ksorted.end());
    MSeries rhs(region);
    for (const ExponentVec& u : enumerate_indep(g, region)) {
        bool outside = true;
        for (int v : u.support())
            if (std::binary_search(Ksorted.begin(), Ksorted.end(), v)) outside = false;
        if (!outside) continue;
        rhs.add_coeff(u, u.total() % 2 == 0 ? 1 : -1);
    }

    SeriesCheck r;
    for (const ExponentVec& m : series_mismatches(lhs, rhs)) {
        r.ok = false;
        r.mismatches.emplace_back(m, lhs.coeff(m), rhs.coeff(m));
    }
    return r;
}

DenominatorReport denominator_check(const MarkedGraph& g, const Truncation& region,
                                    TraceEngine engine, const TraceGuards& guards) {
    DenominatorReport rep;
    rep.inverse_indep = indep_series(g, region, -1).inverse();
    rep.trace_counts = ug_hilbert(g, region, engine, guards);

    MSeries prod = MSeries::one(region);
    for (const SignedMult& r : enumerate_roots(g, region.max_total())) {
        int inner_sign = r.odd_parity ? +1 : -1;
        Int e = r.odd_parity ? r.mult : -r.mult;
        prod = prod * binom_factor(region, r.m, inner_sign, e);
    }
    rep.root_product = prod;

    rep.mismatch_inv_trace = series_mismatches(rep.inverse_indep, rep.trace_counts);
    rep.mismatch_inv_roots = series_mismatches(rep.inverse_indep, rep.root_product);
    rep.ok = rep.mismatch_inv_trace.empty() && rep.mismatch_inv_roots.empty();
    return rep;
}

std::vector<SignedMult> peel_multiplicities(const MarkedGraph& g, const Truncation& region,
                                            TraceEngine engine, const TraceGuards& guards) {
    MSeries R = ug_hilbert(g, region, engine, guards);
    std::vector<SignedMult> out;
    // In graded order, the residual coefficient at m is exactly the
    // multiplicity of m: same-degree factors cannot contribute to each other.
    for (const ExponentVec& m : region.points()) {
        if (m.is_zero()) continue;
        Rational c = R.coeff(m);
        if (c == 0) continue;
        if (!is_integer(c) || c < 0)
            throw InternalCheckFailure("peel_multiplicities: InconsistentSeries at " +
                                       m.str() + " residual " + rat_str(c));
        Int mult = to_integer(c);
        bool odd = epsilon(g, m) == -1;
        out.push_back({m, mult, odd});
        R = R * binom_factor(region, m, odd ? +1 : -1, odd ? -mult : mult);
    }
    MSeries residual_check = R - MSeries::one(region);
    if (!residual_check.is_zero())
        throw InternalCheckFailure("peel_multiplicities: nontrivial residual");
    return out;
}

} // namespace pcls
