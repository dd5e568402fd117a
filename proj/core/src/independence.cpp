#include "pcls/independence.hpp"

#include <algorithm>
#include <map>

namespace pcls {

void require_valid_multidegree(const MarkedGraph& g, const ExponentVec& m) {
    if (m.is_zero()) throw InvalidInput("EmptySupport: multidegree is zero");
    for (const auto& [v, e] : m.terms())
        if (v >= g.n()) throw InvalidInput("UnknownVertex: id " + std::to_string(v));
}

std::vector<ExponentVec> enumerate_indep(const MarkedGraph& g, const Truncation& region) {
    if (region.n != g.n()) throw InvalidInput("enumerate_indep: region size mismatch");
    std::vector<ExponentVec> out;
    std::vector<int> chosen;
    ExponentVec cur;
    auto rec = [&](auto&& self, int v) -> void {
        if (v == g.n()) {
            out.push_back(cur);
            return;
        }
        self(self, v + 1);
        for (int u : chosen)
            if (g.adjacent(u, v)) return;
        int cap = region.total_cap ? *region.total_cap - cur.total()
                                   : std::numeric_limits<int>::max();
        if (region.vertex_caps) cap = std::min(cap, (*region.vertex_caps)[v]);
        if (!g.is_isotropic(v)) cap = std::min(cap, 1);
        chosen.push_back(v);
        for (int e = 1; e <= cap; ++e) {
            cur.set(v, e);
            self(self, v + 1);
        }
        cur.set(v, 0);
        chosen.pop_back();
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const ExponentVec& a, const ExponentVec& b) {
        auto sa = a.support(), sb = b.support();
        if (sa != sb) return sa < sb;
        return a.terms() < b.terms();
    });
    return out;
}

MSeries indep_series(const MarkedGraph& g, const Truncation& region, int sign) {
    if (sign != 1 && sign != -1) throw InvalidInput("indep_series: sign must be +1 or -1");
    MSeries s(region);
    for (const ExponentVec& u : enumerate_indep(g, region)) {
        Rational c = (sign < 0 && u.total() % 2 == 1) ? Rational(-1) : Rational(1);
        s.add_coeff(u, c);
    }
    return s;
}

namespace {

using CountsMemo = std::map<ExponentVec, std::vector<Int>>;

// counts[k] over residual multidegree r, recursing on "which nonempty
// independent multiset is the first tuple entry".
const std::vector<Int>& counts_rec(const ExponentVec& r,
                                   const std::vector<ExponentVec>& indeps,
                                   CountsMemo& memo) {
    auto it = memo.find(r);
    if (it != memo.end()) return it->second;
    std::vector<Int> c(r.total() + 1, Int(0));
    if (r.is_zero()) {
        c[0] = 1;
    } else {
        for (const ExponentVec& u : indeps) {
            auto rest = r.minus(u);
            if (!rest) continue;
            const std::vector<Int>& sub = counts_rec(*rest, indeps, memo);
            for (std::size_t k = 1; k < c.size(); ++k)
                if (k - 1 < sub.size()) c[k] += sub[k - 1];
        }
    }
    return memo.emplace(r, std::move(c)).first->second;
}

} // namespace

std::vector<Int> pk_counts(const MarkedGraph& g, const ExponentVec& m) {
    require_valid_multidegree(g, m);

    std::vector<int> caps(g.n(), 0);
    for (const auto& [v, e] : m.terms()) caps[v] = e;
    Truncation region = Truncation::by_vertex(caps);

    std::vector<ExponentVec> indeps = enumerate_indep(g, region);
    std::erase_if(indeps, [](const ExponentVec& u) { return u.is_zero(); });

    CountsMemo memo;
    std::vector<Int> by_recursion = counts_rec(m, indeps, memo);

    // Second route: [x^m] (I(G,x) - 1)^k.
    MSeries f = indep_series(g, region, +1);
    f.add_coeff(ExponentVec{}, -1);
    std::vector<Int> by_series(m.total() + 1, Int(0));
    MSeries p = MSeries::one(region);
    for (int k = 1; k <= m.total(); ++k) {
        p = p * f;
        by_series[k] = to_integer(p.coeff(m));
    }

    if (by_recursion != by_series)
        throw InternalCheckFailure("pk_counts: enumeration and series engines disagree");
    return by_recursion;
}

} // namespace pcls
