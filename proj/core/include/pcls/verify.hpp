#pragma once

#include "pcls/marked_graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pcls {

struct VerifyConfig {
    int vertex_cap = 4;
    int total_cap = 8;
    int height = 6;
    int racg_length = 8;
    unsigned seed = 0;
    // Restrict the inversion-identity check to one K (vertex ids); otherwise
    // every subset is tried on graphs with at most 4 vertices.
    std::optional<std::vector<int>> K;
};

struct PropertyResult {
    std::string name;
    bool pass = true;
    std::string detail; // first counterexample, or empty
};

// Cross-verification battery for one graph: every quantity is recomputed
// along independent routes and compared exactly.
std::vector<PropertyResult> verify_graph(const MarkedGraph& g, const VerifyConfig& cfg);

} // namespace pcls
