#pragma once

#include "pcls/mseries.hpp"
#include "pcls/marked_graph.hpp"
#include "pcls/trace_monoid.hpp"

#include <vector>

namespace pcls {

// Growth series of the right-angled Coxeter group presented by the graph
// (generators = vertices, involutions, commuting across NON-edges), counted
// by multidegree.  Closed form: 1 / I(G,-x).  Markings on g are ignored.
MSeries racg_growth_closed(const MarkedGraph& g, const Truncation& region);

// Same series by breadth-first enumeration of ShortLex normal forms of group
// elements.  Guard: length_cap <= 12.
MSeries racg_bfs(const MarkedGraph& g, int length_cap, const TraceGuards& guards = {});

// Word-length Poincare series, computed two ways (specializing the
// multivariate closed form, and substituting t -> -t/(1+t) into the
// one-variable independence polynomial and inverting); the routes must
// agree.  Returns coefficients of t^0..t^cap.
std::vector<Rational> poincare(const MarkedGraph& g, int cap);

// Growth series through a perfect elimination ordering of the whole vertex
// set, as an alternating sum over per-vertex partition tuples.  Throws
// EngineInapplicable when `order` is not a PEO of g.
MSeries racg_growth_peo(const MarkedGraph& g, const PeoOrder& order, const Truncation& region);

} // namespace pcls
