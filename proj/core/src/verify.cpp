#include "pcls/verify.hpp"

#include "pcls/chromatic.hpp"
#include "pcls/independence.hpp"
#include "pcls/racg.hpp"
#include "pcls/root_theory.hpp"
#include "pcls/trace_monoid.hpp"

#include <algorithm>
#include <random>

namespace pcls {

namespace {

std::string show(const MarkedGraph& g, const ExponentVec& m) {
    const auto& names = g.names();
    return m.str(&names);
}

PropertyResult check_chromatic_engines(const MarkedGraph& g, const VerifyConfig& cfg) {
    PropertyResult r{"chromatic-engines"};
    int cap = std::min(cfg.height, 8);
    for (const ExponentVec& m : all_multidegrees(g, cap)) {
        QPoly ref = marked_chromatic(g, m);
        QPoly parts = marked_chromatic_via_partitions(g, m);
        if (!(ref == parts)) {
            r.pass = false;
            r.detail = "partition engine differs at m=" + show(g, m);
            return r;
        }
        if (auto order = find_peo(g, m.support())) {
            QPoly peo = marked_chromatic_peo(g, m, *order);
            if (!(ref == peo)) {
                r.pass = false;
                r.detail = "elimination-ordering engine differs at m=" + show(g, m);
                return r;
            }
        }
        for (int q = 0; q <= 4; ++q) {
            Int direct = count_colorings_bruteforce(g, m, q);
            if (Rational(direct) != ref.eval(Rational(q))) {
                r.pass = false;
                r.detail = "brute-force count differs at m=" + show(g, m) +
                           ", q=" + std::to_string(q);
                return r;
            }
        }
    }
    return r;
}

PropertyResult check_series_int_pow(const MarkedGraph& g, const VerifyConfig& cfg) {
    PropertyResult r{"series-int-pow"};
    int cap = std::min({cfg.height, cfg.total_cap, 5});
    Truncation region = Truncation::by_total(g.n(), cap);
    MSeries f = indep_series(g, region, +1);
    for (Int q : {Int(-2), Int(-1), Int(1), Int(2), Int(3)}) {
        MSeries fq = f.int_pow(q);
        for (const ExponentVec& m : region.points()) {
            Rational expect = m.is_zero() ? Rational(1)
                                          : marked_chromatic(g, m).eval(Rational(q));
            if (fq.coeff(m) != expect) {
                r.pass = false;
                r.detail = "power series coefficient differs at m=" + show(g, m) +
                           ", q=" + q.str();
                return r;
            }
        }
    }
    return r;
}

PropertyResult check_inversion(const MarkedGraph& g, const VerifyConfig& cfg) {
    PropertyResult r{"inversion-identity"};
    Truncation region = Truncation::by_total(g.n(), std::min(cfg.total_cap, 6));
    std::vector<std::vector<int>> Ks;
    if (cfg.K) {
        Ks.push_back(*cfg.K);
    } else if (g.n() <= 4) {
        for (int mask = 0; mask < (1 << g.n()); ++mask) {
            std::vector<int> K;
            for (int v = 0; v < g.n(); ++v)
                if (mask & (1 << v)) K.push_back(v);
            Ks.push_back(std::move(K));
        }
    } else {
        Ks.push_back({});
        for (int v = 0; v < g.n(); ++v) Ks.push_back({v});
        std::vector<int> all(g.n());
        for (int v = 0; v < g.n(); ++v) all[v] = v;
        Ks.push_back(std::move(all));
    }
    for (const auto& K : Ks) {
        SeriesCheck chk = inversion_check(g, K, region);
        if (!chk.ok) {
            const auto& [m, lhs, rhs] = chk.mismatches.front();
            std::string kstr;
            for (int v : K) kstr += (kstr.empty() ? "" : ",") + g.name(v);
            r.pass = false;
            r.detail = "K={" + kstr + "} differs at " + show(g, m) + ": " +
                       rat_str(lhs) + " vs " + rat_str(rhs);
            return r;
        }
    }
    return r;
}

PropertyResult check_denominator(const MarkedGraph& g, const VerifyConfig& cfg) {
    PropertyResult r{"denominator-identity"};
    Truncation region = Truncation::by_total(g.n(), std::min(cfg.total_cap, 8));
    DenominatorReport rep = denominator_check(g, region);
    if (!rep.ok) {
        r.pass = false;
        const ExponentVec& m = rep.mismatch_inv_trace.empty()
                                   ? rep.mismatch_inv_roots.front()
                                   : rep.mismatch_inv_trace.front();
        r.detail = "series disagree at " + show(g, m);
    }
    return r;
}

PropertyResult check_trace_engines(const MarkedGraph& g, const VerifyConfig& cfg) {
    PropertyResult r{"trace-engines"};
    Truncation region = Truncation::by_total(g.n(), std::min(cfg.total_cap, 6));
    MSeries a = ug_hilbert(g, region, TraceEngine::WordGeneration);
    MSeries b = ug_hilbert(g, region, TraceEngine::ClassBfs);
    std::vector<ExponentVec> bad = series_mismatches(a, b);
    if (!bad.empty()) {
        r.pass = false;
        r.detail = "enumeration engines differ at " + show(g, bad.front());
    }
    return r;
}

PropertyResult check_root_equivalence(const MarkedGraph& g, const VerifyConfig& cfg) {
    PropertyResult r{"root-equivalence"};
    for (const ExponentVec& m : all_multidegrees(g, cfg.height)) {
        Int mult = multiplicity(g, m);
        RootVerdict v = root_verdict(g, m);
        if ((mult > 0) != v.is_root) {
            r.pass = false;
            r.detail = "m=" + show(g, m) + ": multiplicity " + mult.str() +
                       " vs verdict " + (v.is_root ? "root" : "not a root");
            return r;
        }
    }
    for (int i = 0; i < g.n(); ++i) {
        Int m1 = multiplicity(g, ExponentVec::unit(i));
        Int m2 = multiplicity(g, ExponentVec::unit(i, 2));
        Int expect2 = (g.is_odd(i) && !g.is_isotropic(i)) ? 1 : 0;
        if (m1 != 1 || m2 != expect2) {
            r.pass = false;
            r.detail = "simple/doubled multiplicities wrong at vertex " + g.name(i);
            return r;
        }
    }
    return r;
}

PropertyResult check_connected_support(const MarkedGraph& g, const VerifyConfig& cfg) {
    PropertyResult r{"connected-support-roots"};
    for (const ExponentVec& m : all_multidegrees(g, cfg.height)) {
        // single-vertex supports follow the alpha / 2*alpha rules instead
        if (m.support().size() < 2) continue;
        if (!is_connected(g, m.support())) continue;
        bool small_iso = true;
        for (const auto& [v, e] : m.terms())
            if (g.is_isotropic(v) && e > 1) small_iso = false;
        if (!small_iso) continue;
        if (multiplicity(g, m) < 1) {
            r.pass = false;
            r.detail = "m=" + show(g, m) + " should be a root";
            return r;
        }
    }
    return r;
}

bool proportional(const ExponentVec& a, const ExponentVec& b) {
    return a.scaled(b.total()) == b.scaled(a.total());
}

PropertyResult check_root_sum_closure(const MarkedGraph& g, const VerifyConfig& cfg) {
    PropertyResult r{"root-sum-closure"};
    std::vector<SignedMult> roots = enumerate_roots(g, cfg.height);
    std::vector<std::pair<std::size_t, std::size_t>> eligible;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            const ExponentVec &a = roots[i].m, &b = roots[j].m;
            if (proportional(a, b)) continue;
            auto simple_iso = [&](const ExponentVec& m) {
                return m.total() == 1 && g.is_isotropic(m.support()[0]);
            };
            if (simple_iso(a) || simple_iso(b)) continue;
            if (!is_connected(g, (a + b).support())) continue;
            eligible.emplace_back(i, j);
        }
    }
    std::mt19937 rng(cfg.seed);
    std::shuffle(eligible.begin(), eligible.end(), rng);
    if (eligible.size() > 25) eligible.resize(25);
    for (auto [i, j] : eligible) {
        ExponentVec sum = roots[i].m + roots[j].m;
        if (multiplicity(g, sum) <= 0) {
            r.pass = false;
            r.detail = show(g, roots[i].m) + " + " + show(g, roots[j].m) +
                       " is not a root";
            return r;
        }
    }
    return r;
}

PropertyResult check_peel(const MarkedGraph& g, const VerifyConfig& cfg) {
    PropertyResult r{"peel-vs-moebius"};
    int cap = std::min(cfg.total_cap, 6);
    Truncation region = Truncation::by_total(g.n(), cap);
    std::vector<SignedMult> peeled = peel_multiplicities(g, region);
    std::vector<SignedMult> by_moebius = enumerate_roots(g, cap);
    if (peeled.size() != by_moebius.size()) {
        r.pass = false;
        r.detail = "different root counts: " + std::to_string(peeled.size()) + " peeled vs " +
                   std::to_string(by_moebius.size());
        return r;
    }
    for (std::size_t i = 0; i < peeled.size(); ++i) {
        if (!(peeled[i].m == by_moebius[i].m) || peeled[i].mult != by_moebius[i].mult ||
            peeled[i].odd_parity != by_moebius[i].odd_parity) {
            r.pass = false;
            r.detail = "entry " + std::to_string(i) + " differs at " + show(g, peeled[i].m);
            return r;
        }
    }
    return r;
}

PropertyResult check_chromatic_from_roots(const MarkedGraph& g, const VerifyConfig& cfg) {
    PropertyResult r{"chromatic-from-roots"};
    for (const ExponentVec& m : all_multidegrees(g, std::min(cfg.height, 5))) {
        if (!(chromatic_from_multiplicities(g, m) == marked_chromatic(g, m))) {
            r.pass = false;
            r.detail = "reconstruction differs at m=" + show(g, m);
            return r;
        }
    }
    return r;
}

PropertyResult check_racg_bfs(const MarkedGraph& g, const VerifyConfig& cfg) {
    PropertyResult r{"racg-bfs"};
    int cap = std::min(cfg.racg_length, 8);
    MSeries closed = racg_growth_closed(g, Truncation::by_total(g.n(), cap));
    MSeries bfs = racg_bfs(g, cap);
    std::vector<ExponentVec> bad = series_mismatches(closed, bfs);
    if (!bad.empty()) {
        r.pass = false;
        r.detail = "growth series differ at " + show(g, bad.front());
    }
    return r;
}

PropertyResult check_racg_poincare(const MarkedGraph& g, const VerifyConfig& cfg) {
    PropertyResult r{"racg-poincare"};
    // Both routes are compared inside poincare; a mismatch throws.
    poincare(g, std::min(cfg.racg_length, 8));
    return r;
}

PropertyResult check_racg_peo(const MarkedGraph& g, const VerifyConfig& cfg) {
    PropertyResult r{"racg-peo"};
    std::vector<int> all(g.n());
    for (int v = 0; v < g.n(); ++v) all[v] = v;
    auto order = find_peo(g, all);
    if (!order) {
        r.detail = "skipped: graph not chordal";
        return r;
    }
    int cap = std::min(cfg.racg_length, 8);
    Truncation region = Truncation::by_total(g.n(), cap);
    MSeries closed = racg_growth_closed(g, region);
    MSeries by_peo = racg_growth_peo(g, *order, region);
    std::vector<ExponentVec> bad = series_mismatches(closed, by_peo);
    if (!bad.empty()) {
        r.pass = false;
        r.detail = "elimination-ordering route differs at " + show(g, bad.front());
    }
    return r;
}

PropertyResult check_racg_hilbert(const MarkedGraph& g, const VerifyConfig& cfg) {
    PropertyResult r{"racg-hilbert"};
    // With every vertex isotropic, square-reduced class counts and Coxeter
    // growth are the same series.
    MarkedGraph iso = g.all_isotropic();
    Truncation region = Truncation::by_total(g.n(), std::min(cfg.total_cap, 6));
    MSeries traces = ug_hilbert(iso, region);
    MSeries growth = racg_growth_closed(g, region);
    std::vector<ExponentVec> bad = series_mismatches(traces, growth);
    if (!bad.empty()) {
        r.pass = false;
        r.detail = "trace counts differ from growth at " + show(g, bad.front());
    }
    return r;
}

PropertyResult check_equivariance(const MarkedGraph& g, const VerifyConfig& cfg) {
    PropertyResult r{"equivariance"};
    std::vector<int> perm(g.n());
    for (int v = 0; v < g.n(); ++v) perm[v] = v;
    std::mt19937 rng(cfg.seed + 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    MarkedGraph h = g.permuted(perm);
    for (const ExponentVec& m : all_multidegrees(g, std::min(cfg.height, 4))) {
        ExponentVec pm;
        for (const auto& [v, e] : m.terms()) pm.set(perm[v], e);
        if (!(marked_chromatic(g, m) == marked_chromatic(h, pm))) {
            r.pass = false;
            r.detail = "counting polynomial not relabeling-invariant at m=" + show(g, m);
            return r;
        }
        RootVerdict a = root_verdict(g, m), b = root_verdict(h, pm);
        if (a.is_root != b.is_root || a.classification != b.classification) {
            r.pass = false;
            r.detail = "verdict not relabeling-invariant at m=" + show(g, m);
            return r;
        }
    }
    return r;
}

} // namespace

std::vector<PropertyResult> verify_graph(const MarkedGraph& g, const VerifyConfig& cfg) {
    std::vector<PropertyResult> out;
    out.push_back(check_chromatic_engines(g, cfg));
    out.push_back(check_series_int_pow(g, cfg));
    out.push_back(check_inversion(g, cfg));
    out.push_back(check_denominator(g, cfg));
    out.push_back(check_trace_engines(g, cfg));
    out.push_back(check_root_equivalence(g, cfg));
    out.push_back(check_connected_support(g, cfg));
    out.push_back(check_root_sum_closure(g, cfg));
    out.push_back(check_peel(g, cfg));
    out.push_back(check_chromatic_from_roots(g, cfg));
    out.push_back(check_racg_bfs(g, cfg));
    out.push_back(check_racg_poincare(g, cfg));
    out.push_back(check_racg_peo(g, cfg));
    out.push_back(check_racg_hilbert(g, cfg));
    out.push_back(check_equivariance(g, cfg));
    return out;
}

} // namespace pcls
