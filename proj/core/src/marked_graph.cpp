#include "pcls/marked_graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pcls {

bool SimpleGraph::adjacent(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::optional<int> MarkedGraph::id_of(const std::string& name) const {
    for (int v = 0; v < n(); ++v)
        if (names_[v] == name) return v;
    return std::nullopt;
}

MarkedGraph MarkedGraph::validate(const GraphSpec& spec) {
    std::vector<std::string> problems;
    std::map<std::string, int> index;
    for (int v = 0; v < static_cast<int>(spec.vertices.size()); ++v) {
        if (!index.emplace(spec.vertices[v], v).second)
            problems.push_back("DuplicateVertex: \"" + spec.vertices[v] + "\"");
    }
    auto lookup = [&](const std::string& name, const char* where) -> int {
        auto it = index.find(name);
        if (it != index.end()) return it->second;
        problems.push_back(std::string("UnknownVertex: \"") + name + "\" in " + where);
        return -1;
    };

    int n = static_cast<int>(spec.vertices.size());
    std::set<std::pair<int, int>> edge_set;
    for (const auto& e : spec.edges) {
        int a = lookup(e[0], "edges");
        int b = lookup(e[1], "edges");
        if (a < 0 || b < 0) continue;
        if (a == b) {
            problems.push_back("LoopEdge: \"" + e[0] + "\"");
            continue;
        }
        if (a > b) std::swap(a, b);
        if (!edge_set.emplace(a, b).second)
            problems.push_back("DuplicateEdge: \"" + e[0] + "\"-\"" + e[1] + "\"");
    }

    std::vector<bool> odd(n, false), iso(n, false);
    for (const auto& name : spec.odd) {
        int v = lookup(name, "odd");
        if (v >= 0) odd[v] = true;
    }
    for (const auto& name : spec.isotropic) {
        int v = lookup(name, "isotropic");
        if (v >= 0) iso[v] = true;
    }
    for (int v = 0; v < n; ++v)
        if (iso[v] && !odd[v])
            problems.push_back("IsotropicNotOdd: \"" + spec.vertices[v] + "\"");

    if (!problems.empty()) {
        std::string msg = "invalid graph:";
        for (const auto& p : problems) msg += "\n  " + p;
        throw InvalidInput(msg);
    }

    MarkedGraph g;
    g.names_ = spec.vertices;
    g.adj_.assign(n, std::vector<bool>(n, false));
    g.nbrs_.assign(n, {});
    for (const auto& [a, b] : edge_set) {
        g.adj_[a][b] = g.adj_[b][a] = true;
        g.nbrs_[a].push_back(b);
        g.nbrs_[b].push_back(a);
    }
    for (auto& nb : g.nbrs_) std::sort(nb.begin(), nb.end());
    g.odd_ = std::move(odd);
    g.iso_ = std::move(iso);
    return g;
}

MarkedGraph make_graph(const std::vector<std::string>& names,
                       const std::vector<std::pair<int, int>>& edges,
                       const std::vector<int>& odd,
                       const std::vector<int>& isotropic) {
    GraphSpec spec;
    spec.vertices = names;
    for (auto [a, b] : edges) spec.edges.push_back({names.at(a), names.at(b)});
    for (int v : odd) spec.odd.push_back(names.at(v));
    for (int v : isotropic) spec.isotropic.push_back(names.at(v));
    return MarkedGraph::validate(spec);
}

std::vector<std::pair<int, int>> MarkedGraph::edge_list() const {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n(); ++u)
        for (int v = u + 1; v < n(); ++v)
            if (adj_[u][v]) e.emplace_back(u, v);
    return e;
}

std::vector<int> MarkedGraph::odd_vertices() const {
    std::vector<int> r;
    for (int v = 0; v < n(); ++v)
        if (odd_[v]) r.push_back(v);
    return r;
}

std::vector<int> MarkedGraph::isotropic_vertices() const {
    std::vector<int> r;
    for (int v = 0; v < n(); ++v)
        if (iso_[v]) r.push_back(v);
    return r;
}

MarkedGraph MarkedGraph::induced(const std::vector<int>& verts) const {
    GraphSpec spec;
    std::vector<int> vs = verts;
    std::sort(vs.begin(), vs.end());
    for (int v : vs) spec.vertices.push_back(names_[v]);
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (adj_[vs[i]][vs[j]]) spec.edges.push_back({names_[vs[i]], names_[vs[j]]});
    for (int v : vs) {
        if (odd_[v]) spec.odd.push_back(names_[v]);
        if (iso_[v]) spec.isotropic.push_back(names_[v]);
    }
    return validate(spec);
}

MarkedGraph MarkedGraph::all_isotropic() const {
    GraphSpec spec;
    spec.vertices = names_;
    for (const auto& [a, b] : edge_list()) spec.edges.push_back({names_[a], names_[b]});
    spec.odd = names_;
    spec.isotropic = names_;
    return validate(spec);
}

MarkedGraph MarkedGraph::permuted(const std::vector<int>& perm) const {
    GraphSpec spec;
    spec.vertices.resize(n());
    for (int v = 0; v < n(); ++v) spec.vertices[perm[v]] = names_[v];
    for (const auto& [a, b] : edge_list()) spec.edges.push_back({names_[a], names_[b]});
    for (int v = 0; v < n(); ++v) {
        if (odd_[v]) spec.odd.push_back(names_[v]);
        if (iso_[v]) spec.isotropic.push_back(names_[v]);
    }
    return validate(spec);
}

SimpleGraph MarkedGraph::simple() const {
    SimpleGraph s;
    s.n = n();
    s.edges = edge_list();
    return s;
}

bool is_connected(const MarkedGraph& g, const std::vector<int>& s) {
    if (s.empty()) return false;
    std::set<int> todo(s.begin(), s.end());
    std::vector<int> stack{*todo.begin()};
    todo.erase(todo.begin());
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto it = todo.begin(); it != todo.end();) {
            if (g.adjacent(v, *it)) {
                stack.push_back(*it);
                it = todo.erase(it);
            } else {
                ++it;
            }
        }
    }
    return todo.empty();
}

std::optional<int> star_center(const MarkedGraph& g, const std::vector<int>& s) {
    if (s.size() < 2) throw InvalidInput("star_center: need at least two vertices");
    std::vector<int> vs = s;
    std::sort(vs.begin(), vs.end());
    if (vs.size() == 2) {
        int a = vs[0], b = vs[1];
        if (!g.adjacent(a, b)) return std::nullopt;
        if (g.is_isotropic(a) != g.is_isotropic(b))
            return g.is_isotropic(a) ? b : a;
        return a;
    }
    for (int c : vs) {
        bool center = true;
        for (int u : vs) {
            if (u == c) continue;
            if (!g.adjacent(c, u)) { center = false; break; }
        }
        if (!center) continue;
        bool leaves_ok = true;
        for (std::size_t i = 0; i < vs.size() && leaves_ok; ++i)
            for (std::size_t j = i + 1; j < vs.size() && leaves_ok; ++j) {
                if (vs[i] == c || vs[j] == c) continue;
                if (g.adjacent(vs[i], vs[j])) leaves_ok = false;
            }
        if (leaves_ok) return c;
    }
    return std::nullopt;
}

bool is_peo(const MarkedGraph& g, const PeoOrder& order) {
    for (std::size_t k = 0; k < order.size(); ++k) {
        std::vector<int> earlier_nbrs;
        for (std::size_t r = 0; r < k; ++r)
            if (g.adjacent(order[r], order[k])) earlier_nbrs.push_back(order[r]);
        for (std::size_t i = 0; i < earlier_nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < earlier_nbrs.size(); ++j)
                if (!g.adjacent(earlier_nbrs[i], earlier_nbrs[j])) return false;
    }
    return true;
}

std::optional<PeoOrder> find_peo(const MarkedGraph& g, const std::vector<int>& s) {
    std::vector<int> vs = s;
    std::sort(vs.begin(), vs.end());
    std::vector<int> order;
    std::vector<int> weight(g.n(), 0);
    std::vector<bool> taken(g.n(), false);
    // Maximum-cardinality search visits a chordal graph in reverse
    // elimination order, so the visit order itself has the "earlier
    // neighbours form a clique" property.
    for (std::size_t step = 0; step < vs.size(); ++step) {
        int best = -1;
        for (int v : vs) {
            if (taken[v]) continue;
            if (best < 0 || weight[v] > weight[best]) best = v;
        }
        taken[best] = true;
        order.push_back(best);
        for (int u : g.neighbors(best))
            if (!taken[u] && std::binary_search(vs.begin(), vs.end(), u)) ++weight[u];
    }
    if (!is_peo(g, order)) return std::nullopt;
    return order;
}

SimpleGraph join_graph(const MarkedGraph& g, const ExponentVec& s) {
    std::vector<int> base(g.n(), -1);
    int total = 0;
    for (const auto& [v, e] : s.terms()) {
        base[v] = total;
        total += e;
    }
    SimpleGraph out;
    out.n = total;
    for (const auto& [v, ev] : s.terms()) {
        for (int a = 0; a < ev; ++a)
            for (int b = a + 1; b < ev; ++b)
                out.edges.emplace_back(base[v] + a, base[v] + b);
        for (const auto& [u, eu] : s.terms()) {
            if (u <= v || !g.adjacent(u, v)) continue;
            for (int a = 0; a < ev; ++a)
                for (int b = 0; b < eu; ++b)
                    out.edges.emplace_back(base[v] + a, base[u] + b);
        }
    }
    for (auto& [a, b] : out.edges)
        if (a > b) std::swap(a, b);
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

} // namespace pcls
