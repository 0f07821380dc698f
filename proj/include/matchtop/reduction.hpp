#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "families.hpp"
#include "graph.hpp"
#include "homology.hpp"
#include "isomorphism.hpp"

namespace matchtop {

/// A rule was applied where its hypothesis does not hold.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {
inline nlohmann::json labels_json(const std::vector<Label>& ls) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& l : ls) a.push_back(l.to_json());
    return a;
}

inline bool sorted_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> u;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
    return u;
}
} // namespace detail

// ---------------------------------------------------------------- folding

struct FoldPair {
    Label v, w;   // N(v) ⊆ N(w): w may be deleted
    friend bool operator==(const FoldPair&, const FoldPair&) = default;
};

inline bool is_fold_pair(const Graph& g, const Label& v, const Label& w) {
    const int i = g.index_of(v), j = g.index_of(w);
    return i != j && detail::sorted_subset(g.adj(i), g.adj(j));
}

/// All ordered pairs with N(v) ⊆ N(w), sorted by (w, v).
inline std::vector<FoldPair> find_folds(const Graph& g) {
    std::vector<FoldPair> out;
    const int n = static_cast<int>(g.order());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && detail::sorted_subset(g.adj(i), g.adj(j))) out.push_back({g.label(i), g.label(j)});
    std::sort(out.begin(), out.end(), [](const FoldPair& a, const FoldPair& b) {
        if (auto c = a.w <=> b.w; c != 0) return c < 0;
        return a.v < b.v;
    });
    return out;
}

inline Graph apply_fold(const Graph& g, const Label& v, const Label& w) {
    if (!is_fold_pair(g, v, w))
        throw PreconditionError("fold: N(" + v.str() + ") is not contained in N(" + w.str() + ")");
    return g.delete_vertex(w);
}

// ---------------------------------------------------------------- edge toggling

struct Triplet {
    Label u, v, x;
    bool edge_present = false;
    friend bool operator==(const Triplet&, const Triplet&) = default;
};

/// [u,v;x]: x outside N[u] ∪ N[v] and N(x) ⊆ N(u) ∪ N(v).
inline bool is_edge_invariant_triplet(const Graph& g, const Label& u, const Label& v, const Label& x) {
    const int a = g.index_of(u), b = g.index_of(v), c = g.index_of(x);
    if (a == b || c == a || c == b) return false;
    if (g.adjacent(a, c) || g.adjacent(b, c)) return false;
    return detail::sorted_subset(g.adj(c), detail::sorted_union(g.adj(a), g.adj(b)));
}

/// Every triplet with u < v in label order, for both present and absent uv.
inline std::vector<Triplet> find_edge_invariant_triplets(const Graph& g) {
    std::vector<int> order(g.order());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return g.label(a) < g.label(b); });
    std::vector<Triplet> out;
    for (std::size_t p = 0; p < order.size(); ++p)
        for (std::size_t q = p + 1; q < order.size(); ++q) {
            const int a = order[p], b = order[q];
            const auto nu = detail::sorted_union(g.adj(a), g.adj(b));
            for (int c : order) {
                if (c == a || c == b || g.adjacent(a, c) || g.adjacent(b, c)) continue;
                if (detail::sorted_subset(g.adj(c), nu)) out.push_back({g.label(a), g.label(b), g.label(c), g.adjacent(a, b)});
            }
        }
    return out;
}

/// Adds uv if absent, removes it if present.
inline Graph toggle_edge(const Graph& g, const Label& u, const Label& v, const Label& x) {
    if (!is_edge_invariant_triplet(g, u, v, x))
        throw PreconditionError("toggle: [" + u.str() + "," + v.str() + ";" + x.str() + "] is not an edge-invariant triplet");
    return g.has_edge(u, v) ? g.remove_edge(u, v) : g.add_edge(u, v);
}

// ---------------------------------------------------------------- simplicial vertices

/// Non-isolated vertices whose neighbourhood is a clique.
inline std::vector<Label> simplicial_vertices(const Graph& g) {
    std::vector<Label> out;
    for (int i = 0; i < static_cast<int>(g.order()); ++i) {
        const auto& nb = g.adj(i);
        if (nb.empty()) continue;
        bool clique = true;
        for (std::size_t a = 0; a < nb.size() && clique; ++a)
            for (std::size_t b = a + 1; b < nb.size() && clique; ++b) clique = g.adjacent(nb[a], nb[b]);
        if (clique) out.push_back(g.label(i));
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct SimplicialSplit {
    std::vector<Label> neighbours;   // w_1..w_k in adjacency order
    std::vector<Graph> branches;     // g \ N[w_i]
};

inline SimplicialSplit simplicial_split(const Graph& g, const Label& v) {
    const int i = g.index_of(v);
    const auto& nb = g.adj(i);
    if (nb.empty()) throw PreconditionError("simplicial split: " + v.str() + " is isolated");
    for (std::size_t a = 0; a < nb.size(); ++a)
        for (std::size_t b = a + 1; b < nb.size(); ++b)
            if (!g.adjacent(nb[a], nb[b]))
                throw PreconditionError("simplicial split: neighbours " + g.label(nb[a]).str() + " and " + g.label(nb[b]).str() + " of " +
                                        v.str() + " are not adjacent");
    SimplicialSplit s;
    for (int w : nb) {
        s.neighbours.push_back(g.label(w));
        s.branches.push_back(g.delete_vertices(g.neighborhood(g.label(w), true)));
    }
    return s;
}

// ---------------------------------------------------------------- link and deletion

/// u certifies that Ind(g \ N[v]) -> Ind(g \ v) is null-homotopic:
/// u != v and u has no neighbour in g \ N[v]. Either u ∈ N(v) and cones off the link,
/// or u is isolated in g \ N[v] and the link is itself a cone.
inline bool is_cone_witness(const Graph& g, const Label& v, const Label& u) {
    const int a = g.index_of(v), b = g.index_of(u);
    if (a == b) return false;
    for (int w : g.adj(b))
        if (w != a && !g.adjacent(a, w)) return false;
    return true;
}

struct LinkDeletion {
    Graph deletion;   // g \ v
    Graph link;       // g \ N[v]
};

inline LinkDeletion link_deletion_split(const Graph& g, const Label& v, const Label& u) {
    if (!is_cone_witness(g, v, u))
        throw PreconditionError("link/deletion: " + u.str() + " does not cone off Ind(G \\ N[" + v.str() + "])");
    return {g.delete_vertex(v), g.delete_vertices(g.neighborhood(v, true))};
}

inline std::optional<Label> isolated_vertex(const Graph& g) {
    for (int i = 0; i < static_cast<int>(g.order()); ++i)
        if (g.adj(i).empty()) return g.label(i);
    return std::nullopt;
}

// ---------------------------------------------------------------- expressions

/// Homotopy-type expression whose leaves are graphs (by leaf id).
struct Expr {
    enum class Kind { Leaf, Point, Wedge, Suspension, Join };
    Kind kind = Kind::Leaf;
    int leaf = -1;    // Leaf
    int shift = 0;    // Suspension
    std::vector<Expr> children;

    static Expr make_leaf(int id) { return {Kind::Leaf, id, 0, {}}; }
    static Expr point() { return {Kind::Point, -1, 0, {}}; }
    static Expr suspension(int k, Expr e) {
        if (k == 0) return e;
        if (e.kind == Kind::Suspension) {
            e.shift += k;
            return e;
        }
        return {Kind::Suspension, -1, k, {std::move(e)}};
    }
    static Expr wedge(std::vector<Expr> es) {
        if (es.size() == 1) return std::move(es.front());
        return {Kind::Wedge, -1, 0, std::move(es)};
    }
    static Expr join(std::vector<Expr> es) {
        if (es.size() == 1) return std::move(es.front());
        return {Kind::Join, -1, 0, std::move(es)};
    }

    friend bool operator==(const Expr&, const Expr&) = default;

    /// Replaces leaf `id` by `e`; returns whether it was found.
    bool substitute(int id, const Expr& e) {
        if (kind == Kind::Leaf && leaf == id) {
            *this = e;
            return true;
        }
        for (auto& c : children)
            if (c.substitute(id, e)) return true;
        return false;
    }

    void leaves(std::vector<int>& out) const {
        if (kind == Kind::Leaf) out.push_back(leaf);
        for (const auto& c : children) c.leaves(out);
    }

    std::string str() const {
        switch (kind) {
        case Kind::Leaf: return "L" + std::to_string(leaf);
        case Kind::Point: return "pt";
        case Kind::Suspension: {
            std::string s = shift == 1 ? "S" : "S^" + std::to_string(shift);
            return s + "(" + children[0].str() + ")";
        }
        case Kind::Wedge:
        case Kind::Join: {
            std::string s;
            for (const auto& c : children) s += (s.empty() ? "" : (kind == Kind::Wedge ? " v " : " * ")) + c.str();
            return "(" + s + ")";
        }
        }
        return {};
    }

    nlohmann::json to_json() const {
        switch (kind) {
        case Kind::Leaf: return {{"leaf", leaf}};
        case Kind::Point: return {{"point", true}};
        case Kind::Suspension: return {{"suspension", shift}, {"of", children[0].to_json()}};
        case Kind::Wedge:
        case Kind::Join: {
            nlohmann::json a = nlohmann::json::array();
            for (const auto& c : children) a.push_back(c.to_json());
            return {{kind == Kind::Wedge ? "wedge" : "join", a}};
        }
        }
        return {};
    }

    /// Homology implied by the expression, given the homology of each leaf.
    HomologyProfile evaluate(const std::function<HomologyProfile(int)>& leaf_homology) const {
        switch (kind) {
        case Kind::Leaf: return leaf_homology(leaf);
        case Kind::Point: return HomologyProfile{};
        case Kind::Suspension: return matchtop::suspend(children[0].evaluate(leaf_homology), shift);
        case Kind::Wedge: {
            std::vector<HomologyProfile> ps;
            for (const auto& c : children) ps.push_back(c.evaluate(leaf_homology));
            return matchtop::wedge(ps);
        }
        case Kind::Join: {
            // Ind of the empty graph, {∅}, is the unit for join
            HomologyProfile p;
            p.set(-1, 1);
            for (const auto& c : children) p = matchtop::join(p, c.evaluate(leaf_homology));
            return p;
        }
        }
        throw std::logic_error("bad expression");
    }
};

// ---------------------------------------------------------------- traces

enum class Rule { Fold, SimplicialSplit, EdgeToggle, LinkDeletionSplit, ComponentJoin, Contractible, Expect };

inline std::string rule_name(Rule r) {
    switch (r) {
    case Rule::Fold: return "fold";
    case Rule::SimplicialSplit: return "simplicial_split";
    case Rule::EdgeToggle: return "toggle";
    case Rule::LinkDeletionSplit: return "link_deletion";
    case Rule::ComponentJoin: return "components";
    case Rule::Contractible: return "contractible";
    case Rule::Expect: return "expect";
    }
    return {};
}

struct ReductionStep {
    Rule rule;
    int at = 0;                  // leaf the rule was applied to
    nlohmann::json vertices;     // rule arguments
    nlohmann::json witness;      // the hypothesis as checked, e.g. both neighbourhoods of a fold
    std::vector<int> produced;   // new leaf ids (same id for in-place rewrites)
    std::string effect;

    nlohmann::json to_json() const {
        nlohmann::json j{{"rule", rule_name(rule)}, {"at", at}, {"args", vertices}, {"witness", witness}, {"effect", effect}};
        j["produced"] = produced;
        return j;
    }
};

/// Initial graph, the steps applied, and the current expression over live leaf graphs.
class ReductionTrace {
public:
    explicit ReductionTrace(Graph initial) : initial_(std::move(initial)) {
        leaves_.emplace(0, initial_);
        next_id_ = 1;
    }

    const Graph& initial() const { return initial_; }
    const std::vector<ReductionStep>& steps() const { return steps_; }
    const Expr& expression() const { return expr_; }
    const std::map<int, Graph>& leaves() const { return leaves_; }
    const Graph& leaf(int id) const {
        auto it = leaves_.find(id);
        if (it == leaves_.end()) throw PreconditionError("no live leaf " + std::to_string(id));
        return it->second;
    }
    /// Lowest live leaf id; the default target of a step.
    std::optional<int> first_leaf() const {
        if (leaves_.empty()) return std::nullopt;
        return leaves_.begin()->first;
    }

    void fold(int at, const Label& v, const Label& w) {
        const Graph& g = leaf(at);
        Graph h = apply_fold(g, v, w);
        ReductionStep s{Rule::Fold, at, {{"v", v.to_json()}, {"w", w.to_json()}},
                        {{"N(v)", detail::labels_json(g.neighborhood(v))}, {"N(w)", detail::labels_json(g.neighborhood(w))}},
                        {at}, "delete " + w.str()};
        leaves_[at] = std::move(h);
        steps_.push_back(std::move(s));
    }

    void toggle(int at, const Label& u, const Label& v, const Label& x) {
        const Graph& g = leaf(at);
        const bool present = g.has_edge(u, v);
        Graph h = toggle_edge(g, u, v, x);
        ReductionStep s{Rule::EdgeToggle, at, {{"u", u.to_json()}, {"v", v.to_json()}, {"x", x.to_json()}},
                        {{"N(u)", detail::labels_json(g.neighborhood(u))},
                         {"N(v)", detail::labels_json(g.neighborhood(v))},
                         {"N(x)", detail::labels_json(g.neighborhood(x))},
                         {"edge_present", present}},
                        {at}, (present ? "remove " : "add ") + u.str() + v.str()};
        leaves_[at] = std::move(h);
        steps_.push_back(std::move(s));
    }

    void split(int at, const Label& v) {
        const Graph& g = leaf(at);
        auto sp = simplicial_split(g, v);
        ReductionStep s{Rule::SimplicialSplit, at, {{"v", v.to_json()}}, {{"N(v)", detail::labels_json(sp.neighbours)}}, {},
                        "wedge of " + std::to_string(sp.branches.size()) + " suspended branches"};
        std::vector<Expr> parts;
        for (auto& b : sp.branches) {
            const int id = next_id_++;
            s.produced.push_back(id);
            leaves_.emplace(id, std::move(b));
            parts.push_back(Expr::suspension(1, Expr::make_leaf(id)));
        }
        replace(at, Expr::wedge(std::move(parts)));
        steps_.push_back(std::move(s));
    }

    void link_deletion(int at, const Label& v, const Label& u) {
        const Graph& g = leaf(at);
        auto ld = link_deletion_split(g, v, u);
        const int del = next_id_++, lk = next_id_++;
        ReductionStep s{Rule::LinkDeletionSplit, at, {{"v", v.to_json()}, {"u", u.to_json()}},
                        {{"N[v]", detail::labels_json(g.neighborhood(v, true))}, {"N(u)", detail::labels_json(g.neighborhood(u))}},
                        {del, lk}, "deletion v suspended link"};
        leaves_.emplace(del, std::move(ld.deletion));
        leaves_.emplace(lk, std::move(ld.link));
        replace(at, Expr::wedge({Expr::make_leaf(del), Expr::suspension(1, Expr::make_leaf(lk))}));
        steps_.push_back(std::move(s));
    }

    /// Splits a leaf into its connected components. K_2 components become suspensions;
    /// a single-vertex component makes the leaf contractible.
    void components(int at) {
        const Graph& g = leaf(at);
        auto cs = connected_components(g);
        ReductionStep s{Rule::ComponentJoin, at, nlohmann::json::object(), nlohmann::json::object(), {}, {}};
        nlohmann::json sizes = nlohmann::json::array();
        for (const auto& c : cs) sizes.push_back(c.order());
        s.witness = {{"component_orders", sizes}};
        if (auto iso = isolated_vertex(g)) {
            s.witness["isolated"] = iso->to_json();
            s.effect = "contractible";
            replace(at, Expr::point());
            steps_.push_back(std::move(s));
            return;
        }
        int k2 = 0;
        std::vector<Expr> rest;
        for (auto& c : cs) {
            if (c.order() == 2) {
                ++k2;
                continue;
            }
            const int id = next_id_++;
            s.produced.push_back(id);
            leaves_.emplace(id, std::move(c));
            rest.push_back(Expr::make_leaf(id));
        }
        if (rest.empty()) {
            const int id = next_id_++;
            s.produced.push_back(id);
            leaves_.emplace(id, Graph{});
            rest.push_back(Expr::make_leaf(id));
        }
        s.effect = "join of " + std::to_string(cs.size()) + " components";
        if (k2) s.effect += ", " + std::to_string(k2) + " edge(s) as suspension";
        replace(at, Expr::suspension(k2, Expr::join(std::move(rest))));
        steps_.push_back(std::move(s));
    }

    /// Ind of a graph with an isolated vertex is a cone.
    void contractible(int at) {
        const Graph& g = leaf(at);
        auto iso = isolated_vertex(g);
        if (!iso) throw PreconditionError("contractible: leaf " + std::to_string(at) + " has no isolated vertex");
        ReductionStep s{Rule::Contractible, at, nlohmann::json::object(), {{"isolated", iso->to_json()}}, {}, "contractible"};
        replace(at, Expr::point());
        steps_.push_back(std::move(s));
    }

    /// Checks that a leaf is isomorphic to `target`; `what` names it in the trace.
    void expect(int at, const Graph& target, const std::string& what) {
        const Graph& g = leaf(at);
        if (!is_isomorphic(g, target))
            throw PreconditionError("expect: leaf " + std::to_string(at) + " is not isomorphic to " + what);
        steps_.push_back({Rule::Expect, at, {{"isomorphic_to", what}}, {{"order", g.order()}, {"size", g.size()}}, {at}, "isomorphic to " + what});
    }

    nlohmann::json to_json() const {
        nlohmann::json st = nlohmann::json::array();
        for (const auto& s : steps_) st.push_back(s.to_json());
        nlohmann::json lv = nlohmann::json::object();
        for (const auto& [id, g] : leaves_) lv[std::to_string(id)] = g.to_json();
        return {{"initial", initial_.to_json()}, {"steps", st}, {"expression", expr_.to_json()}, {"expression_text", expr_.str()}, {"leaves", lv}};
    }

private:
    void replace(int at, const Expr& e) {
        expr_.substitute(at, e);
        leaves_.erase(at);
    }

    Graph initial_;
    std::vector<ReductionStep> steps_;
    Expr expr_ = Expr::make_leaf(0);
    std::map<int, Graph> leaves_;
    int next_id_ = 1;
};

enum class Strategy { FoldOnly };

/// Folds leaf 0 to a fixed point, taking the first pair in (w, v) order each time;
/// stops early at an isolated vertex.
inline ReductionTrace auto_reduce(const Graph& g, Strategy = Strategy::FoldOnly) {
    ReductionTrace t(g);
    while (true) {
        const Graph& cur = t.leaf(0);
        if (cur.order() > 0 && isolated_vertex(cur)) {
            t.contractible(0);
            break;
        }
        auto folds = find_folds(cur);
        if (folds.empty()) break;
        t.fold(0, folds.front().v, folds.front().w);
    }
    return t;
}

// ---------------------------------------------------------------- scripts

struct ScriptError : std::runtime_error {
    int step;
    ScriptError(int i, const std::string& msg) : std::runtime_error("step " + std::to_string(i) + ": " + msg), step(i) {}
};

namespace detail {
inline Label script_label(const nlohmann::json& j) {
    if (j.is_string()) return Label::parse(j.get<std::string>());
    return Label::from_json(j);
}

/// "K4", "P7", "C5", "E3" (edgeless), or a family spec whose index may be written
/// relative to the replayed member, e.g. "A:5:n-2".
inline std::pair<Graph, std::string> expect_target(const std::string& spec, std::optional<FamilyId> initial) {
    if (spec.size() >= 2 && std::isdigit(static_cast<unsigned char>(spec[1])) && spec.find(':') == std::string::npos) {
        const int k = std::stoi(spec.substr(1));
        switch (spec[0]) {
        case 'K': return {complete(k), spec};
        case 'P': return {path(k), spec};
        case 'C': return {cycle(k), spec};
        case 'E': return {edgeless(k), spec};
        default: break;
        }
    }
    auto c2 = spec.rfind(':');
    if (c2 == std::string::npos) throw std::invalid_argument("bad expect target " + spec);
    std::string idx = spec.substr(c2 + 1);
    if (!idx.empty() && idx[0] == 'n') {
        if (!initial) throw std::invalid_argument("relative index in " + spec + " needs a family as initial graph");
        const int off = idx.size() > 1 ? std::stoi(idx.substr(1)) : 0;
        idx = std::to_string(initial->n + off);
    }
    auto id = FamilyId::parse(spec.substr(0, c2 + 1) + idx);
    return {build(id), id.str()};
}

inline int step_target(const nlohmann::json& st, const ReductionTrace& t) {
    if (st.contains("at")) return st.at("at").get<int>();
    auto f = t.first_leaf();
    if (!f) throw PreconditionError("no live leaf left");
    return *f;
}
} // namespace detail

inline const nlohmann::json& script_steps(const nlohmann::json& script) {
    if (script.is_array()) return script;
    if (script.is_object() && script.contains("steps") && script.at("steps").is_array()) return script.at("steps");
    throw std::invalid_argument("script must be a list of steps or an object with \"steps\"");
}

/// Replays a step list on `g`. `family` resolves relative indices in expect steps.
inline ReductionTrace replay(const nlohmann::json& script, const Graph& g, std::optional<FamilyId> family = std::nullopt) {
    ReductionTrace t(g);
    const auto& steps = script_steps(script);
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& st = steps[i];
        try {
            const std::string rule = st.at("rule").get<std::string>();
            const int at = detail::step_target(st, t);
            auto L = [&](const char* k) { return detail::script_label(st.at(k)); };
            if (rule == "fold")
                t.fold(at, L("v"), L("w"));
            else if (rule == "toggle")
                t.toggle(at, L("u"), L("v"), L("x"));
            else if (rule == "simplicial_split" || rule == "split")
                t.split(at, L("v"));
            else if (rule == "link_deletion")
                t.link_deletion(at, L("v"), L("u"));
            else if (rule == "components")
                t.components(at);
            else if (rule == "contractible")
                t.contractible(at);
            else if (rule == "expect") {
                auto [target, what] = detail::expect_target(st.at("isomorphic_to").get<std::string>(), family);
                t.expect(at, target, what);
            } else
                throw std::invalid_argument("unknown rule \"" + rule + "\"");
        } catch (const ScriptError&) {
            throw;
        } catch (const std::exception& e) {
            throw ScriptError(static_cast<int>(i), e.what());
        }
    }
    return t;
}

struct ReplayCheck {
    HomologyProfile initial;    // of Ind(initial graph)
    HomologyProfile composed;   // expression evaluated on leaf homologies
    bool consistent() const { return initial == composed; }
};

/// Compares Ind(initial) with the homology the trace's expression implies.
inline ReplayCheck check_trace(const ReductionTrace& t, const Budget& budget = Budget{}) {
    auto h = [&](const Graph& g) {
        HomologyOptions o;
        o.budget = budget;
        return reduced_homology(independence_complex(g, std::nullopt, budget), o);
    };
    ReplayCheck c;
    c.initial = h(t.initial());
    c.composed = t.expression().evaluate([&](int id) { return h(t.leaf(id)); });
    return c;
}

} // namespace matchtop
