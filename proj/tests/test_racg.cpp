#include <doctest.h>

#include <pcls/corpus.hpp>
#include <pcls/errors.hpp>
#include <pcls/marked_graph.hpp>
#include <pcls/racg.hpp>

using namespace pcls;

TEST_CASE("commuting generators give the Klein four-group") {
    MarkedGraph g = make_graph({"1", "2"}, {}, {}, {});
    Truncation t = Truncation::by_total(2, 4);
    MSeries s = racg_growth_closed(g, t);
    CHECK(s.coeff(ExponentVec{}) == 1);
    CHECK(s.coeff(ExponentVec::dense({1, 0})) == 1);
    CHECK(s.coeff(ExponentVec::dense({0, 1})) == 1);
    CHECK(s.coeff(ExponentVec::dense({1, 1})) == 1);
    CHECK(s.terms().size() == 4); // nothing else: the group has four elements
    CHECK(racg_bfs(g, 4) == s);
}

TEST_CASE("non-commuting generators give the infinite dihedral group") {
    const MarkedGraph& g = corpus_graph("even-edge");
    Truncation t = Truncation::by_total(2, 6);
    MSeries s = racg_growth_closed(g, t);
    CHECK(s.coeff(ExponentVec::dense({1, 1})) == 2);
    CHECK(s.coeff(ExponentVec::dense({2, 1})) == 1);
    CHECK(s.coeff(ExponentVec::dense({2, 2})) == 2);
    CHECK(s.coeff(ExponentVec::dense({3, 1})) == 0);
    CHECK(racg_bfs(g, 6) == s);
}

TEST_CASE("markings are ignored by the group construction") {
    Truncation t = Truncation::by_total(2, 5);
    CHECK(racg_growth_closed(corpus_graph("iso-edge"), t) ==
          racg_growth_closed(corpus_graph("even-edge"), t));
}

TEST_CASE("bfs agrees with the closed form on the corpus") {
    for (const CorpusEntry& e : corpus()) {
        Truncation t = Truncation::by_total(e.graph.n(), 6);
        CHECK(racg_bfs(e.graph, 6) == racg_growth_closed(e.graph, t));
    }
}

TEST_CASE("single-variable growth from both routes") {
    for (const char* key : {"even-edge", "iso-path3", "c4", "k4-mixed"}) {
        const MarkedGraph& g = corpus_graph(key);
        std::vector<Rational> p = poincare(g, 6);
        REQUIRE(p.size() == 7);
        CHECK(p[0] == 1);

        // lengths add up to the multivariate counts
        MSeries s = racg_growth_closed(g, Truncation::by_total(g.n(), 6));
        std::vector<Rational> by_len(7, Rational(0));
        for (const auto& [m, c] : s.terms()) by_len[m.total()] += c;
        for (int k = 0; k <= 6; ++k) CHECK(p[k] == by_len[k]);
    }
}

TEST_CASE("elimination-order formula matches on chordal graphs") {
    for (const char* key : {"path4", "tri-pendant", "k3-mixed", "iso-path3", "even-edge"}) {
        const MarkedGraph& g = corpus_graph(key);
        std::vector<int> all(g.n());
        for (int v = 0; v < g.n(); ++v) all[v] = v;
        auto order = find_peo(g, all);
        REQUIRE(order.has_value());
        Truncation t = Truncation::by_total(g.n(), 5);
        CHECK(racg_growth_peo(g, *order, t) == racg_growth_closed(g, t));
    }
}

TEST_CASE("elimination-order formula refuses non-chordal input") {
    const MarkedGraph& g = corpus_graph("c4");
    Truncation t = Truncation::by_total(4, 4);
    CHECK_THROWS_AS(racg_growth_peo(g, PeoOrder{0, 1, 2, 3}, t), EngineInapplicable);
}

TEST_CASE("bfs guard limits") {
    const MarkedGraph& g = corpus_graph("even-edge");
    CHECK_THROWS_AS(racg_bfs(g, 13), GuardExceeded);
    CHECK(racg_bfs(g, 0).terms().size() == 1);
}
