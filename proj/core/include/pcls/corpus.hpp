#pragma once

#include "pcls/marked_graph.hpp"

#include <string>
#include <vector>

namespace pcls {

struct CorpusEntry {
    std::string key;
    std::string description;
    MarkedGraph graph;
};

// Small frozen family of marked graphs used by the verification suites and
// available to the CLI by key.
const std::vector<CorpusEntry>& corpus();

// Throws InvalidInput for an unknown key.
const MarkedGraph& corpus_graph(const std::string& key);

} // namespace pcls
