#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "label.hpp"

namespace matchtop {

struct GraphError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<Label, Label>;

/// Immutable simple undirected graph with structured vertex labels.
///
/// Vertices keep the order they were given in; every modifying operation
/// returns a new graph and keeps the relative order of surviving vertices.
class Graph {
public:
    Graph() = default;

    Graph(std::vector<Label> vertices, const std::vector<Edge>& edges) : verts_(std::move(vertices)) {
        for (std::size_t i = 0; i < verts_.size(); ++i) {
            if (!index_.emplace(verts_[i], static_cast<int>(i)).second)
                throw GraphError("duplicate vertex label " + verts_[i].str());
        }
        adj_.assign(verts_.size(), {});
        for (const auto& [a, b] : edges) {
            int i = index_of(a), j = index_of(b);
            if (i == j) throw GraphError("self-loop at " + a.str());
            adj_[i].push_back(j);
            adj_[j].push_back(i);
        }
        for (auto& row : adj_) {
            std::sort(row.begin(), row.end());
            if (std::adjacent_find(row.begin(), row.end()) != row.end())
                throw GraphError("duplicate edge");
        }
    }

    std::size_t order() const { return verts_.size(); }
    std::size_t size() const {
        std::size_t s = 0;
        for (const auto& r : adj_) s += r.size();
        return s / 2;
    }
    bool empty() const { return verts_.empty(); }

    const std::vector<Label>& vertices() const { return verts_; }
    const Label& label(int i) const { return verts_.at(static_cast<std::size_t>(i)); }
    bool has_vertex(const Label& v) const { return index_.count(v) != 0; }
    int index_of(const Label& v) const {
        auto it = index_.find(v);
        if (it == index_.end()) throw GraphError("unknown vertex " + v.str());
        return it->second;
    }

    /// Sorted neighbour indices of vertex i.
    const std::vector<int>& adj(int i) const { return adj_.at(static_cast<std::size_t>(i)); }
    bool adjacent(int i, int j) const {
        const auto& r = adj_[static_cast<std::size_t>(i)];
        return std::binary_search(r.begin(), r.end(), j);
    }
    bool has_edge(const Label& a, const Label& b) const { return adjacent(index_of(a), index_of(b)); }
    std::size_t degree(const Label& v) const { return adj(index_of(v)).size(); }

    /// Edges as (smaller label, larger label), sorted lexicographically.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (std::size_t i = 0; i < adj_.size(); ++i)
            for (int j : adj_[i])
                if (static_cast<std::size_t>(j) > i) {
                    const Label& a = verts_[i];
                    const Label& b = verts_[static_cast<std::size_t>(j)];
                    out.push_back(a < b ? Edge{a, b} : Edge{b, a});
                }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// N(v), or N[v] when closed; listed in graph vertex order.
    std::vector<Label> neighborhood(const Label& v, bool closed = false) const {
        int i = index_of(v);
        std::vector<int> idx = adj(i);
        if (closed) idx.insert(std::upper_bound(idx.begin(), idx.end(), i), i);
        std::vector<Label> out;
        out.reserve(idx.size());
        for (int j : idx) out.push_back(verts_[static_cast<std::size_t>(j)]);
        return out;
    }

    Graph delete_vertices(const std::vector<Label>& s) const {
        std::vector<char> gone(order(), 0);
        for (const auto& v : s) gone[static_cast<std::size_t>(index_of(v))] = 1;
        std::vector<int> keep;
        for (std::size_t i = 0; i < order(); ++i)
            if (!gone[i]) keep.push_back(static_cast<int>(i));
        return induced_by_index(keep);
    }

    Graph delete_vertex(const Label& v) const { return delete_vertices({v}); }

    /// Induced subgraph; vertex order follows this graph, not the argument.
    Graph induced(const std::vector<Label>& s) const {
        std::vector<int> keep;
        for (const auto& v : s) keep.push_back(index_of(v));
        std::sort(keep.begin(), keep.end());
        keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
        return induced_by_index(keep);
    }

    Graph induced_by_index(const std::vector<int>& keep) const {
        std::vector<int> remap(order(), -1);
        Graph g;
        g.verts_.reserve(keep.size());
        for (std::size_t k = 0; k < keep.size(); ++k) {
            remap[static_cast<std::size_t>(keep[k])] = static_cast<int>(k);
            g.verts_.push_back(verts_[static_cast<std::size_t>(keep[k])]);
            g.index_.emplace(g.verts_.back(), static_cast<int>(k));
        }
        g.adj_.assign(keep.size(), {});
        for (std::size_t k = 0; k < keep.size(); ++k)
            for (int j : adj_[static_cast<std::size_t>(keep[k])])
                if (remap[static_cast<std::size_t>(j)] >= 0) g.adj_[k].push_back(remap[static_cast<std::size_t>(j)]);
        return g;
    }

    Graph add_edges(const std::vector<Edge>& pairs) const {
        Graph g = *this;
        for (const auto& [a, b] : pairs) {
            int i = index_of(a), j = index_of(b);
            if (i == j) throw GraphError("self-loop at " + a.str());
            if (g.adjacent(i, j)) throw GraphError("edge already present: " + a.str() + " " + b.str());
            g.insert_sorted(i, j);
            g.insert_sorted(j, i);
        }
        return g;
    }

    Graph remove_edges(const std::vector<Edge>& pairs) const {
        Graph g = *this;
        for (const auto& [a, b] : pairs) {
            int i = index_of(a), j = index_of(b);
            if (!g.adjacent(i, j)) throw GraphError("edge not present: " + a.str() + " " + b.str());
            g.erase_sorted(i, j);
            g.erase_sorted(j, i);
        }
        return g;
    }

    Graph add_edge(const Label& a, const Label& b) const { return add_edges({{a, b}}); }
    Graph remove_edge(const Label& a, const Label& b) const { return remove_edges({{a, b}}); }

    /// Same vertex set and edge set, regardless of vertex order.
    friend bool operator==(const Graph& a, const Graph& b) {
        if (a.order() != b.order()) return false;
        std::vector<Label> va = a.verts_, vb = b.verts_;
        std::sort(va.begin(), va.end());
        std::sort(vb.begin(), vb.end());
        return va == vb && a.edges() == b.edges();
    }

    nlohmann::json to_json() const {
        nlohmann::json vs = nlohmann::json::array();
        for (const auto& v : verts_) vs.push_back(v.to_json());
        nlohmann::json es = nlohmann::json::array();
        for (const auto& [a, b] : edges()) es.push_back(nlohmann::json::array({a.to_json(), b.to_json()}));
        return nlohmann::json{{"vertices", vs}, {"edges", es}};
    }

    static Graph from_json(const nlohmann::json& j) {
        if (!j.is_object() || !j.contains("vertices"))
            throw GraphError("graph JSON needs a \"vertices\" array");
        std::vector<Label> vs;
        for (const auto& x : j.at("vertices")) vs.push_back(Label::from_json(x));
        std::vector<Edge> es;
        if (j.contains("edges")) {
            for (const auto& e : j.at("edges")) {
                if (!e.is_array() || e.size() != 2) throw GraphError("edge must be a pair: " + e.dump());
                es.emplace_back(Label::from_json(e[0]), Label::from_json(e[1]));
            }
        }
        return Graph(std::move(vs), es);
    }

    std::string str() const {
        std::string s = "V={";
        for (std::size_t i = 0; i < verts_.size(); ++i) s += (i ? "," : "") + verts_[i].str();
        s += "} E={";
        bool first = true;
        for (const auto& [a, b] : edges()) {
            s += (first ? "" : ",") + a.str() + "-" + b.str();
            first = false;
        }
        return s + "}";
    }

private:
    void insert_sorted(int i, int j) {
        auto& r = adj_[static_cast<std::size_t>(i)];
        r.insert(std::lower_bound(r.begin(), r.end(), j), j);
    }
    void erase_sorted(int i, int j) {
        auto& r = adj_[static_cast<std::size_t>(i)];
        r.erase(std::lower_bound(r.begin(), r.end(), j));
    }

    std::vector<Label> verts_;
    std::map<Label, int> index_;
    std::vector<std::vector<int>> adj_;
};

inline Graph path(int n) {
    if (n < 1) throw GraphError("path needs n >= 1");
    std::vector<Label> vs;
    std::vector<Edge> es;
    for (int i = 1; i <= n; ++i) vs.emplace_back(i);
    for (int i = 1; i < n; ++i) es.emplace_back(i, i + 1);
    return Graph(vs, es);
}

inline Graph cycle(int n) {
    if (n < 3) throw GraphError("cycle needs n >= 3");
    std::vector<Label> vs;
    std::vector<Edge> es;
    for (int i = 1; i <= n; ++i) vs.emplace_back(i);
    for (int i = 1; i < n; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(n, 1);
    return Graph(vs, es);
}

inline Graph complete(int n) {
    if (n < 0) throw GraphError("complete graph needs n >= 0");
    std::vector<Label> vs;
    std::vector<Edge> es;
    for (int i = 1; i <= n; ++i) vs.emplace_back(i);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) es.emplace_back(i, j);
    return Graph(vs, es);
}

inline Graph edgeless(int n) {
    std::vector<Label> vs;
    for (int i = 1; i <= n; ++i) vs.emplace_back(i);
    return Graph(vs, {});
}

namespace detail {
template <class Adjacent>
Graph product(const Graph& g, const Graph& h, Adjacent adjacent) {
    if (g.empty() || h.empty()) throw GraphError("product of an empty graph");
    std::vector<Label> vs;
    for (const auto& u : g.vertices())
        for (const auto& v : h.vertices()) vs.push_back(Label::pair(u, v));
    std::vector<Edge> es;
    const int n = static_cast<int>(g.order()), m = static_cast<int>(h.order());
    for (int a = 0; a < n * m; ++a)
        for (int b = a + 1; b < n * m; ++b)
            if (adjacent(a / m, a % m, b / m, b % m))
                es.emplace_back(vs[static_cast<std::size_t>(a)], vs[static_cast<std::size_t>(b)]);
    return Graph(std::move(vs), es);
}
} // namespace detail

/// G x H: (u,v)~(u',v') iff uu' in E(G) and vv' in E(H).
inline Graph categorical_product(const Graph& g, const Graph& h) {
    return detail::product(g, h, [&](int u, int v, int u2, int v2) { return g.adjacent(u, u2) && h.adjacent(v, v2); });
}

/// G box H: one coordinate equal, the other adjacent.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
    return detail::product(g, h, [&](int u, int v, int u2, int v2) {
        return (u == u2 && h.adjacent(v, v2)) || (v == v2 && g.adjacent(u, u2));
    });
}

/// Vertices are the edges of g (labelled by their sorted endpoint pair).
inline Graph line_graph(const Graph& g) {
    auto es = g.edges();
    std::vector<Label> vs;
    vs.reserve(es.size());
    std::map<Label, std::vector<int>> incident;
    for (std::size_t k = 0; k < es.size(); ++k) {
        vs.push_back(Label::pair(es[k].first, es[k].second));
        incident[es[k].first].push_back(static_cast<int>(k));
        incident[es[k].second].push_back(static_cast<int>(k));
    }
    std::set<std::pair<int, int>> pairs;
    for (const auto& [v, inc] : incident)
        for (std::size_t a = 0; a < inc.size(); ++a)
            for (std::size_t b = a + 1; b < inc.size(); ++b)
                pairs.emplace(std::min(inc[a], inc[b]), std::max(inc[a], inc[b]));
    std::vector<Edge> le;
    le.reserve(pairs.size());
    for (auto [a, b] : pairs) le.emplace_back(vs[static_cast<std::size_t>(a)], vs[static_cast<std::size_t>(b)]);
    return Graph(std::move(vs), le);
}

/// Labels must be distinct across the two graphs.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<Label> vs = g.vertices();
    vs.insert(vs.end(), h.vertices().begin(), h.vertices().end());
    auto es = g.edges();
    auto eh = h.edges();
    es.insert(es.end(), eh.begin(), eh.end());
    return Graph(std::move(vs), es);
}

/// Components ordered by their least vertex label.
inline std::vector<Graph> connected_components(const Graph& g) {
    const int n = static_cast<int>(g.order());
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> members;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        int c = static_cast<int>(members.size());
        members.emplace_back();
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s)] = c;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            members[static_cast<std::size_t>(c)].push_back(u);
            for (int w : g.adj(u))
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = c;
                    stack.push_back(w);
                }
        }
    }
    std::vector<std::pair<Label, Graph>> keyed;
    for (auto& m : members) {
        std::sort(m.begin(), m.end());
        Label least = g.label(m[0]);
        for (int i : m) least = std::min(least, g.label(i));
        keyed.emplace_back(least, g.induced_by_index(m));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    for (auto& [k, c] : keyed) out.push_back(std::move(c));
    return out;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

} // namespace matchtop
