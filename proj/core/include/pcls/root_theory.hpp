#pragma once

#include "pcls/chromatic.hpp"
#include "pcls/marked_graph.hpp"

#include <vector>

namespace pcls {

// Sign attached to a multidegree: +1 when the odd vertices carry even total
// multiplicity, -1 otherwise.
int epsilon(const MarkedGraph& g, const ExponentVec& m);

// Dimension of the degree-m homogeneous component, by Moebius inversion over
// proportional multidegrees of the q-coefficients of counting polynomials.
// Provably a nonnegative integer; anything else raises InternalCheckFailure.
Int multiplicity(const MarkedGraph& g, const ExponentVec& m);

enum class RootClass { SimpleRoot, DoubledOddRoot, GenericRoot, NotRoot };

struct RootVerdict {
    bool is_root = false;
    RootClass classification = RootClass::NotRoot;
    // Diagnostics behind the decision.
    bool support_connected = false;
    bool neighbor_sum_ok = false;     // isotropic i with m_i >= 2 have enough neighbor mass
    bool in_P = false;                // candidate set membership (|supp| >= 2)
    bool is_star_element = false;     // in_P with star support
    bool in_K20 = false;              // excluded family: even isotropic stars, entries >= 2
    bool in_K31 = false;              // excluded family: odd isotropic stars, entries >= 3
};

// Combinatorial description of the root set; agrees with multiplicity > 0
// (that equivalence is what the acceptance suite checks).
RootVerdict root_verdict(const MarkedGraph& g, const ExponentVec& m);

struct SignedMult {
    ExponentVec m;
    Int mult;
    bool odd_parity; // epsilon(m) == -1
};

// All multidegrees with positive multiplicity up to |m| <= height_cap,
// graded lex order.
std::vector<SignedMult> enumerate_roots(const MarkedGraph& g, int height_cap);

// Rebuild the counting polynomial of m from root data alone:
//   (-1)^{|m|} sum over {distinct roots b_i with exponents k_i >= 1,
//   sum k_i b_i = m} of (-1)^{sum k_i} prod eps(b_i)^{k_i} C(q eps(b_i) mult(b_i), k_i).
// Guard: |m| <= 8.
QPoly chromatic_from_multiplicities(const MarkedGraph& g, const ExponentVec& m);

// All nonzero multidegrees on g with |m| <= height_cap, graded lex order.
std::vector<ExponentVec> all_multidegrees(const MarkedGraph& g, int height_cap);

} // namespace pcls
