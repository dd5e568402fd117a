#pragma once

#include "pcls/independence.hpp"
#include "pcls/marked_graph.hpp"
#include "pcls/qpoly.hpp"

#include <map>
#include <vector>

namespace pcls {

// Memo for deletion-contraction, keyed by a relabeling-normalized edge list.
// Create one per top-level computation; never shared across threads.
struct ChromMemo {
    std::map<std::vector<int>, QPoly> table;
    std::size_t cap = std::size_t(1) << 20;
};

// Classical chromatic polynomial by deletion-contraction.
QPoly ordinary_chromatic(const SimpleGraph& g);
QPoly ordinary_chromatic(const SimpleGraph& g, ChromMemo& memo);

// Counting polynomial of colorings of the multidegree m: assignments of a
// size-m_i color multiset to each support vertex (a set unless the vertex is
// isotropic) with disjoint colors across edges.  Reference engine: assembled
// from ordered-tuple counts in the binomial basis,
//   sum_k (#ordered k-tuples of nonempty independent multisets summing to m) C(q,k).
QPoly marked_chromatic(const MarkedGraph& g, const ExponentVec& m);

// Same polynomial through per-vertex multiplicity partitions and classical
// chromatic polynomials of clique blow-ups.
QPoly marked_chromatic_via_partitions(const MarkedGraph& g, const ExponentVec& m);

// Same polynomial in closed product form along a perfect elimination
// ordering of the support.  Throws EngineInapplicable when `order` is not a
// PEO of the induced support subgraph.
QPoly marked_chromatic_peo(const MarkedGraph& g, const ExponentVec& m, const PeoOrder& order);

// Definitional count of colorings with q colors.  Guards: q <= 6, |m| <= 8.
Int count_colorings_bruteforce(const MarkedGraph& g, const ExponentVec& m, int q);

// Partitions of n, parts descending, enumerated in descending lex order
// ((n) first, all-ones last).
std::vector<std::vector<int>> integer_partitions(int n);

// 1 / prod_k (number of parts of size k)!, the repeated-part correction for
// a partition given with parts descending.
Rational part_repetition_factor(const std::vector<int>& part);

// Per-vertex partition tuples for m: every assignment of a partition of m_i
// to each support vertex i, isotropic vertices ranging over all partitions,
// others pinned to all-ones.  Each tuple maps vertex -> partition.
std::vector<std::map<int, std::vector<int>>> partition_tuples(const MarkedGraph& g,
                                                              const ExponentVec& m);

} // namespace pcls
