#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include <pcls/corpus.hpp>
#include <pcls/errors.hpp>
#include <pcls/root_theory.hpp>
#include <pcls/trace_monoid.hpp>

using namespace pcls;

namespace {

// every word reachable by swapping adjacent commuting letters
std::set<Word> commutation_class(const MarkedGraph& g, const Word& w) {
    std::set<Word> seen{w};
    std::vector<Word> stack{w};
    while (!stack.empty()) {
        Word cur = stack.back();
        stack.pop_back();
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            int a = cur[i], b = cur[i + 1];
            if (a == b || g.adjacent(a, b)) continue;
            Word nxt = cur;
            std::swap(nxt[i], nxt[i + 1]);
            if (seen.insert(nxt).second) stack.push_back(nxt);
        }
    }
    return seen;
}

// suffix rule spelled out: some representative has two equal isotropic
// letters side by side
bool square_free_direct(const MarkedGraph& g, const Word& w) {
    for (const Word& rep : commutation_class(g, w))
        for (std::size_t i = 0; i + 1 < rep.size(); ++i)
            if (rep[i] == rep[i + 1] && g.is_isotropic(rep[i])) return false;
    return true;
}

template <typename F>
void for_all_words(int alphabet, int max_len, F&& f) {
    std::vector<Word> level{Word{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const Word& w : level)
            for (int a = 0; a < alphabet; ++a) {
                Word x = w;
                x.push_back(a);
                f(x);
                next.push_back(x);
            }
        level = std::move(next);
    }
}

ExponentVec degree_of(const Word& w) {
    ExponentVec m;
    for (int a : w) m.set(a, m.get(a) + 1);
    return m;
}

} // namespace

TEST_CASE("canonical form picks the largest representative") {
    const MarkedGraph& g = corpus_graph("path4");
    CHECK(canonicalize(g, {0, 2, 1}) == Word{2, 0, 1});
    CHECK(canonicalize(g, {0, 3}) == Word{3, 0});
    CHECK(canonicalize(g, {0, 1}) == Word{0, 1}); // adjacent letters stay put
    CHECK(canonicalize(g, {}) == Word{});
    CHECK(canonicalize_least(g, {0, 3}) == Word{0, 3});
    CHECK(canonicalize_least(g, {3, 0}) == Word{0, 3});
}

TEST_CASE("canonical form is a class invariant") {
    for (const char* key : {"k2-mixed", "iso-path3", "c4"}) {
        const MarkedGraph& g = corpus_graph(key);
        int len = g.n() <= 3 ? 5 : 4;
        for_all_words(g.n(), len, [&](const Word& w) {
            Word c = canonicalize(g, w);
            std::set<Word> cls = commutation_class(g, w);
            CHECK(cls.count(c) == 1);
            CHECK(canonicalize(g, c) == c);
            for (const Word& rep : cls) CHECK(canonicalize(g, rep) == c);
            // the canonical form really is the lex-largest member
            CHECK(*std::max_element(cls.begin(), cls.end()) == c);
            CHECK(*std::min_element(cls.begin(), cls.end()) == canonicalize_least(g, w));
        });
    }
}

TEST_CASE("initial and end alphabets match the class") {
    for (const char* key : {"iso-path3", "path4"}) {
        const MarkedGraph& g = corpus_graph(key);
        for_all_words(g.n(), 4, [&](const Word& w) {
            std::set<int> firsts, lasts;
            for (const Word& rep : commutation_class(g, w)) {
                firsts.insert(rep.front());
                lasts.insert(rep.back());
            }
            std::vector<int> ia = initial_alphabet(g, w);
            std::vector<int> ea = end_alphabet(g, w);
            CHECK(std::set<int>(ia.begin(), ia.end()) == firsts);
            CHECK(std::set<int>(ea.begin(), ea.end()) == lasts);
        });
    }
}

TEST_CASE("square reduction agrees with the factorization rule") {
    for (const char* key : {"k2-mixed", "iso-edge", "iso-path3"}) {
        const MarkedGraph& g = corpus_graph(key);
        int len = g.n() <= 2 ? 6 : 5;
        for_all_words(g.n(), len, [&](const Word& w) {
            CHECK(mprime_member(g, w) == square_free_direct(g, w));
        });
    }
    const MarkedGraph& c4 = corpus_graph("c4");
    for_all_words(c4.n(), 4, [&](const Word& w) {
        CHECK(mprime_member(c4, w) == square_free_direct(c4, w));
    });
}

TEST_CASE("class counting engines agree") {
    for (const CorpusEntry& e : corpus()) {
        Truncation t = Truncation::by_total(e.graph.n(), 4);
        CHECK(ug_hilbert(e.graph, t, TraceEngine::WordGeneration) ==
              ug_hilbert(e.graph, t, TraceEngine::ClassBfs));
        std::vector<int> K{0};
        CHECK(enumerate_mprime(e.graph, t, K, TraceEngine::WordGeneration) ==
              enumerate_mprime(e.graph, t, K, TraceEngine::ClassBfs));
    }
}

TEST_CASE("worked class counts") {
    Truncation t2 = Truncation::by_total(2, 3);
    // adjacent letters never commute: the free monoid
    CHECK(ug_hilbert(corpus_graph("even-edge"), t2).coeff(ExponentVec::dense({2, 1})) == 3);
    // isotropic square reduction kills all but the alternating word
    CHECK(ug_hilbert(corpus_graph("iso-edge"), t2).coeff(ExponentVec::dense({2, 1})) == 1);
    CHECK(ug_hilbert(corpus_graph("iso-edge"), t2).coeff(ExponentVec::dense({1, 1})) == 2);
    // commuting far ends of the path collapse to one class
    Truncation t4 = Truncation::by_total(4, 2);
    CHECK(ug_hilbert(corpus_graph("path4"), t4).coeff(ExponentVec::dense({1, 0, 0, 1})) == 1);
    // empty class is always there
    CHECK(ug_hilbert(corpus_graph("path4"), t4).coeff(ExponentVec{}) == 1);
}

TEST_CASE("restriction to end alphabets inside K") {
    const MarkedGraph& g = corpus_graph("even-edge");
    Truncation t = Truncation::by_total(2, 3);
    MSeries all = enumerate_mprime(g, t);
    MSeries none = enumerate_mprime(g, t, std::vector<int>{});
    MSeries only_a = enumerate_mprime(g, t, std::vector<int>{0});
    // with no allowed endings only the empty class survives
    CHECK(none.coeff(ExponentVec{}) == 1);
    CHECK(none.terms().size() == 1);
    // aba and baa end in a, aab does not
    CHECK(only_a.coeff(ExponentVec::dense({2, 1})) == 2);
    CHECK(all.coeff(ExponentVec::dense({2, 1})) == 3);
}

TEST_CASE("guards trip before work blows up") {
    const MarkedGraph& g = corpus_graph("even-edge");
    CHECK_THROWS_AS(ug_hilbert(g, Truncation::by_total(2, 11)), GuardExceeded);
    TraceGuards tiny;
    tiny.max_table = 2;
    CHECK_THROWS_AS(ug_hilbert(g, Truncation::by_total(2, 4), TraceEngine::WordGeneration, tiny),
                    GuardExceeded);
}

TEST_CASE("inversion identity holds for every K on a small graph") {
    const MarkedGraph& g = corpus_graph("k3-mixed");
    Truncation t = Truncation::by_total(3, 4);
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<int> K;
        for (int v = 0; v < 3; ++v)
            if (mask & (1 << v)) K.push_back(v);
        SeriesCheck chk = inversion_check(g, K, t);
        CHECK(chk.ok);
        CHECK(chk.mismatches.empty());
    }
}

TEST_CASE("denominator identity report") {
    DenominatorReport rep = denominator_check(corpus_graph("iso-path3"), Truncation::by_total(3, 5));
    CHECK(rep.ok);
    CHECK(rep.inverse_indep == rep.trace_counts);
    CHECK(rep.inverse_indep == rep.root_product);
}

TEST_CASE("multiplicities peel off the enumerated series") {
    const MarkedGraph& g = corpus_graph("iso-edge");
    auto peeled = peel_multiplicities(g, Truncation::by_total(2, 6));
    REQUIRE(peeled.size() == 3);
    for (const SignedMult& r : peeled) {
        CHECK(r.mult == 1);
        CHECK(r.mult == multiplicity(g, r.m));
    }

    const MarkedGraph& k3 = corpus_graph("k3-mixed");
    auto via_moebius = enumerate_roots(k3, 4);
    auto via_peel = peel_multiplicities(k3, Truncation::by_total(3, 4));
    REQUIRE(via_peel.size() == via_moebius.size());
    for (std::size_t i = 0; i < via_peel.size(); ++i) {
        CHECK(via_peel[i].m == via_moebius[i].m);
        CHECK(via_peel[i].mult == via_moebius[i].mult);
        CHECK(via_peel[i].odd_parity == via_moebius[i].odd_parity);
    }
}

TEST_CASE("degree bookkeeping sanity") {
    const MarkedGraph& g = corpus_graph("c4");
    for_all_words(g.n(), 3, [&](const Word& w) {
        CHECK(degree_of(canonicalize(g, w)) == degree_of(w));
    });
}
