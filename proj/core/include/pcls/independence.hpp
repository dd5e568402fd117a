#pragma once

#include "pcls/marked_graph.hpp"
#include "pcls/mseries.hpp"

#include <vector>

namespace pcls {

// Independent multisets inside the region: the support spans no edge, and
// only isotropic vertices may appear with multiplicity above one.  Includes
// the empty multiset.  Deterministic order: lexicographic in (support,
// multiplicities).
std::vector<ExponentVec> enumerate_indep(const MarkedGraph& g, const Truncation& region);

// Multiset independence series, sign = +1, or its sign-alternating variant
// I(G, -x) for sign = -1: coefficient of x^U is sign^|U|.
MSeries indep_series(const MarkedGraph& g, const Truncation& region, int sign);

// counts[k] = number of ordered k-tuples of nonempty independent multisets
// whose componentwise sum is m, for k = 0..|m|.  Computed by two independent
// engines (memoized recursion over residual multidegrees, and coefficient
// extraction from powers of the independence series); they must agree.
std::vector<Int> pk_counts(const MarkedGraph& g, const ExponentVec& m);

// Shared validation: m nonzero, entries within the vertex set.
void require_valid_multidegree(const MarkedGraph& g, const ExponentVec& m);

} // namespace pcls
