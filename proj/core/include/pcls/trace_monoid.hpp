#pragma once

#include "pcls/mseries.hpp"
#include "pcls/root_theory.hpp"

#include <optional>
#include <vector>

namespace pcls {

// A word over the vertex alphabet; letters commute exactly when the vertices
// are NOT adjacent.  Equality of the induced traces is tested through the
// canonical (lexicographically maximal) representative.
using Word = std::vector<int>;

// Lexicographically maximal representative of the commutation class of w,
// by greedily extracting the largest currently movable-to-front letter.
Word canonicalize(const MarkedGraph& g, const Word& w);

// Lexicographically least representative (ShortLex normal form for the
// length-preserving commutation relation).
Word canonicalize_least(const MarkedGraph& g, const Word& w);

// Letters that can start (end) some representative of the class of w.
std::vector<int> initial_alphabet(const MarkedGraph& g, const Word& w);
std::vector<int> end_alphabet(const MarkedGraph& g, const Word& w);

// Square-reduced classes: no representative contains an isotropic letter
// twice in a row.  Equivalently, between consecutive occurrences of any
// isotropic letter some neighbour of it must appear.  Class-invariant, so
// any representative can be tested.
bool mprime_member(const MarkedGraph& g, const Word& w);

enum class TraceEngine {
    WordGeneration, // generate every word in the region, canonicalize, dedupe
    ClassBfs,       // breadth-first over canonical representatives
};

struct TraceGuards {
    std::size_t max_table = 10'000'000; // dedup table entries
    int max_total_degree = 10;
};

// Multidegree counts of square-reduced classes, optionally restricted to
// classes whose end alphabet lies inside K.  Constant term 1 (empty class).
MSeries enumerate_mprime(const MarkedGraph& g, const Truncation& region,
                         const std::optional<std::vector<int>>& K = std::nullopt,
                         TraceEngine engine = TraceEngine::WordGeneration,
                         const TraceGuards& guards = {});

// Multidegree generating series of all square-reduced classes: the Hilbert
// series of the enveloping algebra presented by the marked graph.
MSeries ug_hilbert(const MarkedGraph& g, const Truncation& region,
                   TraceEngine engine = TraceEngine::WordGeneration,
                   const TraceGuards& guards = {});

struct SeriesCheck {
    bool ok = true;
    // exponent, left value, right value
    std::vector<std::tuple<ExponentVec, Rational, Rational>> mismatches;
};

// (classes with end alphabet in K) * I(G,-x)  ==  sign-alternating
// independence series of the subgraph induced on the complement of K,
// coefficientwise on the region.
SeriesCheck inversion_check(const MarkedGraph& g, const std::vector<int>& K,
                            const Truncation& region,
                            TraceEngine engine = TraceEngine::WordGeneration,
                            const TraceGuards& guards = {});

struct DenominatorReport {
    bool ok = true;
    MSeries inverse_indep;  // 1 / I(G,-x)
    MSeries trace_counts;   // square-reduced class counts
    MSeries root_product;   // prod (1+x^b)^mult / prod (1-x^b)^mult
    std::vector<ExponentVec> mismatch_inv_trace, mismatch_inv_roots;
};

// Three independent computations of the same series, compared pairwise.
DenominatorReport denominator_check(const MarkedGraph& g, const Truncation& region,
                                    TraceEngine engine = TraceEngine::WordGeneration,
                                    const TraceGuards& guards = {});

// Reads root multiplicities directly off the class-count series by peeling
// binomial factors in graded order.  Independent of the Moebius route: uses
// only trace counts and series division.
std::vector<SignedMult> peel_multiplicities(const MarkedGraph& g, const Truncation& region,
                                            TraceEngine engine = TraceEngine::WordGeneration,
                                            const TraceGuards& guards = {});

} // namespace pcls
