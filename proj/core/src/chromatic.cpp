#include "pcls/chromatic.hpp"

#include "pcls/errors.hpp"

#include <algorithm>
#include <numeric>

namespace pcls {

namespace {

std::vector<int> canonical_key(const SimpleGraph& g) {
    std::vector<int> deg(g.n, 0);
    for (auto [a, b] : g.edges) ++deg[a], ++deg[b];
    std::vector<int> verts(g.n);
    std::iota(verts.begin(), verts.end(), 0);
    std::sort(verts.begin(), verts.end(), [&](int a, int b) {
        return deg[a] != deg[b] ? deg[a] < deg[b] : a < b;
    });
    std::vector<int> relabel(g.n);
    for (int i = 0; i < g.n; ++i) relabel[verts[i]] = i;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges.size());
    for (auto [a, b] : g.edges) {
        int u = relabel[a], v = relabel[b];
        if (u > v) std::swap(u, v);
        edges.emplace_back(u, v);
    }
    std::sort(edges.begin(), edges.end());
    std::vector<int> key{g.n};
    for (auto [a, b] : edges) key.push_back(a), key.push_back(b);
    return key;
}

SimpleGraph delete_edge(const SimpleGraph& g, std::pair<int, int> e) {
    SimpleGraph r;
    r.n = g.n;
    for (auto edge : g.edges)
        if (edge != e) r.edges.push_back(edge);
    return r;
}

SimpleGraph contract_edge(const SimpleGraph& g, std::pair<int, int> e) {
    auto [a, b] = e; // a < b; b merges into a and disappears
    SimpleGraph r;
    r.n = g.n - 1;
    auto map_v = [&](int v) {
        if (v == b) v = a;
        return v > b ? v - 1 : v;
    };
    for (auto [u, v] : g.edges) {
        int x = map_v(u), y = map_v(v);
        if (x == y) continue;
        if (x > y) std::swap(x, y);
        r.edges.emplace_back(x, y);
    }
    std::sort(r.edges.begin(), r.edges.end());
    r.edges.erase(std::unique(r.edges.begin(), r.edges.end()), r.edges.end());
    return r;
}

QPoly chrom_rec(const SimpleGraph& g, ChromMemo& memo) {
    if (g.edges.empty()) {
        std::vector<Rational> mono(g.n + 1, Rational(0));
        mono[g.n] = 1;
        return QPoly::from_monomial(mono);
    }
    std::vector<int> key = canonical_key(g);
    auto it = memo.table.find(key);
    if (it != memo.table.end()) return it->second;
    std::pair<int, int> e = g.edges.front();
    QPoly p = chrom_rec(delete_edge(g, e), memo) - chrom_rec(contract_edge(g, e), memo);
    if (memo.table.size() < memo.cap) memo.table.emplace(std::move(key), p);
    return p;
}

// Counting polynomials take integer values at integers; a fractional value
// would mean a partition denominator failed to cancel.
void assert_integer_valued(const QPoly& p, int lo, int hi, const char* who) {
    for (int q = lo; q <= hi; ++q)
        if (!is_integer(p.eval(Rational(q))))
            throw InternalCheckFailure(std::string(who) + ": non-integer value at q=" +
                                       std::to_string(q));
}

} // namespace

QPoly ordinary_chromatic(const SimpleGraph& g, ChromMemo& memo) {
    return chrom_rec(g, memo);
}

QPoly ordinary_chromatic(const SimpleGraph& g) {
    ChromMemo memo;
    return chrom_rec(g, memo);
}

QPoly marked_chromatic(const MarkedGraph& g, const ExponentVec& m) {
    std::vector<Int> counts = pk_counts(g, m);
    std::vector<Rational> b(counts.size());
    for (std::size_t k = 1; k < counts.size(); ++k) b[k] = Rational(counts[k]);
    return QPoly::from_binomial_coeffs(std::move(b));
}

std::vector<std::vector<int>> integer_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<std::map<int, std::vector<int>>> partition_tuples(const MarkedGraph& g,
                                                              const ExponentVec& m) {
    require_valid_multidegree(g, m);
    std::vector<int> supp = m.support();
    std::vector<std::vector<std::vector<int>>> choices;
    for (int v : supp) {
        if (g.is_isotropic(v)) {
            choices.push_back(integer_partitions(m.get(v)));
        } else {
            choices.push_back({std::vector<int>(m.get(v), 1)});
        }
    }
    std::vector<std::map<int, std::vector<int>>> out;
    std::map<int, std::vector<int>> cur;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == supp.size()) {
            out.push_back(cur);
            return;
        }
        for (const auto& part : choices[i]) {
            cur[supp[i]] = part;
            self(self, i + 1);
        }
        cur.erase(supp[i]);
    };
    rec(rec, 0);
    return out;
}

Rational part_repetition_factor(const std::vector<int>& part) {
    Rational d = 1;
    int run = 1;
    for (std::size_t i = 1; i <= part.size(); ++i) {
        if (i < part.size() && part[i] == part[i - 1]) {
            ++run;
        } else {
            d *= Rational(factorial(run));
            run = 1;
        }
    }
    return 1 / d;
}

QPoly marked_chromatic_via_partitions(const MarkedGraph& g, const ExponentVec& m) {
    require_valid_multidegree(g, m);
    ChromMemo memo;
    QPoly acc;
    for (const auto& lambda : partition_tuples(g, m)) {
        ExponentVec lengths;
        Rational weight = 1;
        for (const auto& [v, part] : lambda) {
            lengths.set(v, static_cast<int>(part.size()));
            weight *= part_repetition_factor(part);
        }
        acc = acc + ordinary_chromatic(join_graph(g, lengths), memo) * weight;
    }
    assert_integer_valued(acc, 0, m.total(), "marked_chromatic_via_partitions");
    return acc;
}

QPoly marked_chromatic_peo(const MarkedGraph& g, const ExponentVec& m, const PeoOrder& order) {
    require_valid_multidegree(g, m);
    std::vector<int> supp = m.support();
    std::vector<int> sorted_order = order;
    std::sort(sorted_order.begin(), sorted_order.end());
    if (sorted_order != supp)
        throw EngineInapplicable("NotAPeo: order must list exactly the support of m");
    if (!is_peo(g, order))
        throw EngineInapplicable("NotAPeo: earlier neighbours do not form cliques");

    std::vector<int> pos(g.n(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);

    QPoly acc;
    for (const auto& lambda : partition_tuples(g, m)) {
        QPoly term = QPoly::constant(1);
        for (int j : supp) {
            const std::vector<int>& part = lambda.at(j);
            int len = static_cast<int>(part.size());
            // Colors already taken by earlier neighbours along the ordering.
            Int taken = 0;
            for (int i : supp)
                if (i != j && pos[i] < pos[j] && g.adjacent(i, j))
                    taken += static_cast<int>(lambda.at(i).size());
            Rational w = Rational(factorial(len)) * part_repetition_factor(part);
            term = term * (QPoly::shifted_binomial(taken, len) * w);
        }
        acc = acc + term;
    }
    assert_integer_valued(acc, 0, m.total(), "marked_chromatic_peo");
    return acc;
}

Int count_colorings_bruteforce(const MarkedGraph& g, const ExponentVec& m, int q) {
    require_valid_multidegree(g, m);
    if (q < 0) throw InvalidInput("count_colorings_bruteforce: negative q");
    if (q > 6 || m.total() > 8)
        throw GuardExceeded("count_colorings_bruteforce: q <= 6 and |m| <= 8 required");

    std::vector<int> supp = m.support();
    std::vector<unsigned> mask(supp.size(), 0);
    Int count = 0;
    // Assign each support vertex a multiset of colors (bitmask tracks the
    // distinct colors used); adjacent vertices must use disjoint colors.
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == supp.size()) {
            ++count;
            return;
        }
        int v = supp[i];
        int need = m.get(v);
        bool repeats = g.is_isotropic(v);
        unsigned forbidden = 0;
        for (std::size_t j = 0; j < i; ++j)
            if (g.adjacent(supp[j], v)) forbidden |= mask[j];
        auto pick = [&](auto&& pickself, int from, int left, unsigned used) -> void {
            if (left == 0) {
                mask[i] = used;
                self(self, i + 1);
                return;
            }
            for (int c = from; c < q; ++c) {
                if (forbidden & (1u << c)) continue;
                pickself(pickself, repeats ? c : c + 1, left - 1, used | (1u << c));
            }
        };
        pick(pick, 0, need, 0);
    };
    rec(rec, 0);
    return count;
}

} // namespace pcls
