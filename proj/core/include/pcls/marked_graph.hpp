#pragma once

#include "pcls/errors.hpp"
#include "pcls/exponent.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace pcls {

// Unvalidated graph description as it arrives from a file or a test.
// Vertices are named; edges and marking sets refer to names.
struct GraphSpec {
    std::vector<std::string> vertices;
    std::vector<std::array<std::string, 2>> edges;
    std::vector<std::string> odd;
    std::vector<std::string> isotropic;
};

// Plain graph without markings (join graphs, chromatic computations).
struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // normalized u < v, sorted, distinct

    bool adjacent(int u, int v) const;
};

using PeoOrder = std::vector<int>;

// Finite simple graph with two nested vertex markings: isotropic subset of
// odd subset of vertices.  Vertex ids are 0-based indices into the name list.
// Instances are immutable once validated; all operations on them are pure.
class MarkedGraph {
public:
    // Checks every structural invariant and reports all violations at once
    // (loop edges, duplicate edges/vertices, unknown names, isotropic
    // vertices that are not odd).  Throws InvalidInput on any violation.
    static MarkedGraph validate(const GraphSpec& spec);

    int n() const { return static_cast<int>(names_.size()); }
    const std::string& name(int v) const { return names_[v]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<int> id_of(const std::string& name) const;

    bool adjacent(int u, int v) const { return adj_[u][v]; }
    const std::vector<int>& neighbors(int v) const { return nbrs_[v]; }
    std::vector<std::pair<int, int>> edge_list() const;

    bool is_odd(int v) const { return odd_[v]; }
    bool is_isotropic(int v) const { return iso_[v]; }
    std::vector<int> odd_vertices() const;
    std::vector<int> isotropic_vertices() const;

    // Induced subgraph on `verts` (sorted ids); markings carry over.
    MarkedGraph induced(const std::vector<int>& verts) const;

    // Same underlying graph with every vertex marked odd isotropic.
    MarkedGraph all_isotropic() const;

    // Relabel: vertex v becomes perm[v].
    MarkedGraph permuted(const std::vector<int>& perm) const;

    SimpleGraph simple() const;

private:
    MarkedGraph() = default;
    std::vector<std::string> names_;
    std::vector<std::vector<bool>> adj_;
    std::vector<std::vector<int>> nbrs_;
    std::vector<bool> odd_, iso_;
};

// Convenience builder for tests and the corpus: vertices named here,
// edges/markings given by ids.  Runs full validation.
MarkedGraph make_graph(const std::vector<std::string>& names,
                       const std::vector<std::pair<int, int>>& edges,
                       const std::vector<int>& odd,
                       const std::vector<int>& isotropic);

// Connectivity of the induced subgraph on s.  Singleton: connected.
// Empty set: not connected.
bool is_connected(const MarkedGraph& g, const std::vector<int>& s);

// Center of the star induced on s (|s| >= 2 required).  For |s| = 2 with an
// edge, the convention is: the non-isotropic endpoint when exactly one
// endpoint is isotropic, otherwise the first vertex in vertex order.
// nullopt when the induced subgraph is not a star.
std::optional<int> star_center(const MarkedGraph& g, const std::vector<int>& s);

// Does `order` list a vertex subset so that each vertex's earlier neighbours
// (within the subset) form a clique together with it?
bool is_peo(const MarkedGraph& g, const PeoOrder& order);

// Perfect elimination ordering of the induced subgraph on s, found by
// maximum-cardinality search (ties broken by lowest vertex id) and then
// verified exhaustively; nullopt when none exists (subgraph not chordal).
std::optional<PeoOrder> find_peo(const MarkedGraph& g, const std::vector<int>& s);

// Blow-up along s: each vertex i in supp(s) becomes a clique of s_i clones,
// cliques of adjacent vertices fully joined.  Clone blocks are laid out in
// ascending vertex order.
SimpleGraph join_graph(const MarkedGraph& g, const ExponentVec& s);

} // namespace pcls
