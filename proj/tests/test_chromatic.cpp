#include <doctest.h>

#include <pcls/chromatic.hpp>
#include <pcls/corpus.hpp>
#include <pcls/errors.hpp>
#include <pcls/marked_graph.hpp>

using namespace pcls;

TEST_CASE("ordinary chromatic polynomials of small graphs") {
    QPoly tri = ordinary_chromatic(corpus_graph("k3-mixed").simple());
    CHECK(tri.eval(2) == 0);
    CHECK(tri.eval(3) == 6);
    CHECK(tri.eval(4) == 24);

    QPoly p4 = ordinary_chromatic(corpus_graph("path4").simple());
    CHECK(p4.eval(2) == 2); // q(q-1)^3
    CHECK(p4.eval(3) == 24);

    QPoly c4 = ordinary_chromatic(corpus_graph("c4").simple());
    CHECK(c4.eval(2) == 2); // (q-1)^4 + (q-1)
    CHECK(c4.eval(3) == 18);

    QPoly k4 = ordinary_chromatic(corpus_graph("k4-mixed").simple());
    CHECK(k4.eval(3) == 0);
    CHECK(k4.eval(4) == 24);

    SimpleGraph empty;
    empty.n = 3;
    CHECK(ordinary_chromatic(empty).eval(2) == 8);
}

TEST_CASE("worked marked chromatic example") {
    QPoly p = marked_chromatic(corpus_graph("k2-mixed"), ExponentVec::dense({2, 1}));
    CHECK(p.str_binomial() == "2*C(q,2) + 3*C(q,3)");
    CHECK(p.eval(2) == 2);
    CHECK(p.coeff_of_q() == 0);
}

TEST_CASE("all engines agree on sample inputs") {
    struct Sample {
        const char* key;
        std::vector<int> m;
    };
    for (const Sample& s : {Sample{"path4", {2, 0, 1, 1}}, Sample{"tri-pendant", {1, 1, 2, 0}},
                            Sample{"iso-path3", {2, 2, 2}}, Sample{"k4-mixed", {1, 1, 2, 2}}}) {
        const MarkedGraph& g = corpus_graph(s.key);
        ExponentVec m = ExponentVec::dense(s.m);
        QPoly a = marked_chromatic(g, m);
        CHECK(a == marked_chromatic_via_partitions(g, m));
        auto order = find_peo(g, m.support());
        REQUIRE(order.has_value());
        CHECK(a == marked_chromatic_peo(g, m, *order));
        for (int q = 0; q <= 4; ++q)
            CHECK(a.eval(q) == count_colorings_bruteforce(g, m, q));
    }
}

TEST_CASE("peo engine rejects wrong orders") {
    const MarkedGraph& g = corpus_graph("c4");
    ExponentVec m = ExponentVec::dense({1, 1, 1, 1});
    CHECK_THROWS_AS(marked_chromatic_peo(g, m, PeoOrder{0, 1, 2, 3}), EngineInapplicable);
    CHECK_THROWS_AS(marked_chromatic_peo(g, m, PeoOrder{0, 1}), EngineInapplicable);
}

TEST_CASE("bruteforce guards") {
    const MarkedGraph& g = corpus_graph("even-edge");
    CHECK_THROWS_AS(count_colorings_bruteforce(g, ExponentVec::dense({1, 1}), 7), GuardExceeded);
    QPoly p = marked_chromatic(g, ExponentVec::dense({1, 1}));
    CHECK(p.eval(6) == count_colorings_bruteforce(g, ExponentVec::dense({1, 1}), 6));
}

TEST_CASE("partition helpers") {
    auto parts = integer_partitions(4);
    REQUIRE(parts.size() == 5);
    CHECK(parts.front() == std::vector<int>{4});
    CHECK(parts.back() == std::vector<int>{1, 1, 1, 1});

    CHECK(part_repetition_factor({2, 1, 1}) == Rational(1, 2));
    CHECK(part_repetition_factor({1, 1, 1}) == Rational(1, 6));
    CHECK(part_repetition_factor({3}) == 1);
    CHECK(part_repetition_factor({}) == 1);

    // isotropic entries range over partitions, others are pinned to all ones
    auto tuples = partition_tuples(corpus_graph("k2-mixed"), ExponentVec::dense({2, 1}));
    CHECK(tuples.size() == 2);
    auto pinned = partition_tuples(corpus_graph("even-edge"), ExponentVec::dense({1, 1}));
    CHECK(pinned.size() == 1);
}

TEST_CASE("chromatic values are nonnegative integers at natural q") {
    for (const CorpusEntry& e : corpus()) {
        for (const ExponentVec& m :
             {ExponentVec::unit(0), ExponentVec::unit(0, 2), ExponentVec::unit(0, 3)}) {
            QPoly p = marked_chromatic(e.graph, m);
            for (int q = 0; q <= 5; ++q) {
                Rational val = p.eval(q);
                CHECK(is_integer(val));
                CHECK(val >= 0);
            }
        }
    }
}
