#include "pcls/corpus.hpp"

#include "pcls/errors.hpp"

namespace pcls {

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = [] {
        std::vector<CorpusEntry> c;
        c.push_back({"path4", "path 1-2-3-4, vertex 4 odd isotropic",
                     make_graph({"1", "2", "3", "4"}, {{0, 1}, {1, 2}, {2, 3}}, {3}, {3})});
        c.push_back({"tri-pendant", "triangle 2-3-4 with pendant 1, vertices 3,4 odd isotropic",
                     make_graph({"1", "2", "3", "4"}, {{0, 1}, {1, 2}, {1, 3}, {2, 3}},
                                {2, 3}, {2, 3})});
        c.push_back({"iso-edge", "single edge, both ends odd isotropic",
                     make_graph({"a", "b"}, {{0, 1}}, {0, 1}, {0, 1})});
        c.push_back({"iso-path3", "path a-b-c, all vertices odd isotropic",
                     make_graph({"a", "b", "c"}, {{0, 1}, {1, 2}}, {0, 1, 2}, {0, 1, 2})});
        c.push_back({"even-edge", "single edge, no markings",
                     make_graph({"a", "b"}, {{0, 1}}, {}, {})});
        c.push_back({"k2-mixed", "edge with one odd isotropic end",
                     make_graph({"a", "b"}, {{0, 1}}, {0}, {0})});
        c.push_back({"k3-mixed", "triangle, two odd vertices, one of them isotropic",
                     make_graph({"a", "b", "c"}, {{0, 1}, {0, 2}, {1, 2}}, {1, 2}, {2})});
        c.push_back({"k4-mixed", "complete 4-graph, three odd vertices, two isotropic",
                     make_graph({"a", "b", "c", "d"},
                                {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
                                {1, 2, 3}, {2, 3})});
        c.push_back({"c4", "4-cycle (not chordal), mixed markings",
                     make_graph({"1", "2", "3", "4"}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}},
                                {1, 3}, {3})});
        return c;
    }();
    return entries;
}

const MarkedGraph& corpus_graph(const std::string& key) {
    for (const CorpusEntry& e : corpus())
        if (e.key == key) return e.graph;
    throw InvalidInput("unknown corpus graph: \"" + key + "\"");
}

} // namespace pcls
