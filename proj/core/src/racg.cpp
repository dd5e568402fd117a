#include "pcls/racg.hpp"

#include "pcls/chromatic.hpp"
#include "pcls/independence.hpp"

#include <algorithm>
#include <set>

namespace pcls {

MSeries racg_growth_closed(const MarkedGraph& g, const Truncation& region) {
    return indep_series(g.all_isotropic(), region, -1).inverse();
}

MSeries racg_bfs(const MarkedGraph& g, int length_cap, const TraceGuards& guards) {
    if (length_cap < 0 || length_cap > 12)
        throw GuardExceeded("racg_bfs: length cap must be within 0..12");
    MarkedGraph iso = g.all_isotropic();
    Truncation region = Truncation::by_total(g.n(), length_cap);

    std::set<Word> seen{{}};
    std::vector<Word> frontier{{}};
    for (int len = 0; len < length_cap; ++len) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
            std::vector<int> ends = end_alphabet(iso, w);
            for (int j = 0; j < g.n(); ++j) {
                // Multiplying by a generator in the end alphabet cancels it
                // (elements are involutions); the shorter element is already
                // enumerated, so only length-increasing products matter.
                if (std::binary_search(ends.begin(), ends.end(), j)) continue;
                Word ext = w;
                ext.push_back(j);
                Word cw = canonicalize_least(iso, ext);
                if (cw.size() != w.size() + 1 || !mprime_member(iso, cw))
                    throw InternalCheckFailure("racg_bfs: product left the normal-form language");
                if (seen.count(cw)) continue;
                if (seen.size() >= guards.max_table)
                    throw GuardExceeded("racg_bfs: dedup table limit");
                seen.insert(cw);
                next.push_back(cw);
            }
        }
        frontier = std::move(next);
    }

    MSeries s(region);
    for (const Word& w : seen) {
        ExponentVec m;
        for (int x : w) m.set(x, m.get(x) + 1);
        s.add_coeff(m, 1);
    }
    return s;
}

namespace {

// One-variable independence polynomial of the underlying simple graph,
// embedded as a univariate truncated series.
MSeries indep_poly_univariate(const MarkedGraph& g, const Truncation& t1) {
    MSeries p(t1);
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int v) -> void {
        p.add_coeff(ExponentVec::dense({static_cast<int>(chosen.size())}), 1);
        for (int u = v; u < g.n(); ++u) {
            bool ok = true;
            for (int c : chosen)
                if (g.adjacent(c, u)) { ok = false; break; }
            if (!ok) continue;
            chosen.push_back(u);
            self(self, u + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return p;
}

} // namespace

std::vector<Rational> poincare(const MarkedGraph& g, int cap) {
    if (cap < 0) throw InvalidInput("poincare: negative cap");

    // Route 1: collapse the multivariate growth series to total degree.
    MSeries grown = racg_growth_closed(g, Truncation::by_total(g.n(), cap));
    std::vector<Rational> by_specialization(cap + 1, Rational(0));
    for (const auto& [m, c] : grown.terms()) by_specialization[m.total()] += c;

    // Route 2: invert the independence polynomial evaluated at -t/(1+t).
    Truncation t1 = Truncation::by_total(1, cap);
    ExponentVec t = ExponentVec::unit(0);
    // -t/(1+t) = sum_{j>=1} (-1)^j t^j
    MSeries u(t1);
    for (int j = 1; j <= cap; ++j) u.add_coeff(t.scaled(j), j % 2 == 0 ? 1 : -1);
    MSeries ip = indep_poly_univariate(g, t1);
    MSeries composed(t1);
    MSeries upow = MSeries::one(t1);
    for (int k = 0;; ++k) {
        Rational ak = ip.coeff(t.scaled(k));
        if (ak != 0) composed = composed + upow * ak;
        if (k > g.n()) break;
        upow = upow * u;
    }
    MSeries inv = composed.inverse();
    std::vector<Rational> by_substitution(cap + 1, Rational(0));
    for (const auto& [m, c] : inv.terms()) by_substitution[m.total()] += c;

    if (by_specialization != by_substitution)
        throw InternalCheckFailure("poincare: specialization and substitution routes disagree");
    return by_specialization;
}

MSeries racg_growth_peo(const MarkedGraph& g, const PeoOrder& order, const Truncation& region) {
    std::vector<int> all(g.n());
    for (int v = 0; v < g.n(); ++v) all[v] = v;
    std::vector<int> sorted_order = order;
    std::sort(sorted_order.begin(), sorted_order.end());
    if (sorted_order != all)
        throw EngineInapplicable("NotAPeo: order must list every vertex");
    if (!is_peo(g, order))
        throw EngineInapplicable("NotAPeo: earlier neighbours do not form cliques");

    std::vector<int> pos(g.n());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);

    MarkedGraph iso = g.all_isotropic();
    MSeries s(region);
    for (const ExponentVec& m : region.points()) {
        if (m.is_zero()) {
            s.add_coeff(m, 1);
            continue;
        }
        std::vector<int> supp = m.support();
        Rational total = 0;
        for (const auto& lambda : partition_tuples(iso, m)) {
            Rational term = 1;
            int lensum = 0;
            for (int j : supp) {
                const std::vector<int>& part = lambda.at(j);
                int len = static_cast<int>(part.size());
                lensum += len;
                // Block size along the ordering: this vertex plus its
                // earlier neighbours.
                Int block = len;
                for (int i : supp)
                    if (i != j && pos[i] < pos[j] && g.adjacent(i, j))
                        block += static_cast<int>(lambda.at(i).size());
                term *= Rational(binomial(block, len)) * Rational(factorial(len)) *
                        part_repetition_factor(part);
            }
            int sign = (m.total() + lensum) % 2 == 0 ? 1 : -1;
            total += Rational(sign) * term;
        }
        s.add_coeff(m, total);
    }
    return s;
}

} // namespace pcls
