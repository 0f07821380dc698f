#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "isomorphism.hpp"

namespace matchtop {

enum class Family {
    Gamma, Lambda, GammaTilde, LambdaTilde,
    A, B, C, D, E, F,
    ATilde, BTilde, CTilde, DTilde, ETilde, FTilde,
};

inline constexpr std::array<Family, 16> all_families{
    Family::Gamma, Family::Lambda, Family::GammaTilde, Family::LambdaTilde,
    Family::A, Family::B, Family::C, Family::D, Family::E, Family::F,
    Family::ATilde, Family::BTilde, Family::CTilde, Family::DTilde, Family::ETilde, Family::FTilde,
};

inline std::string family_name(Family f) {
    switch (f) {
    case Family::Gamma: return "Gamma";
    case Family::Lambda: return "Lambda";
    case Family::GammaTilde: return "GammaTilde";
    case Family::LambdaTilde: return "LambdaTilde";
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::ATilde: return "ATilde";
    case Family::BTilde: return "BTilde";
    case Family::CTilde: return "CTilde";
    case Family::DTilde: return "DTilde";
    case Family::ETilde: return "ETilde";
    case Family::FTilde: return "FTilde";
    }
    return "?";
}

inline std::optional<Family> parse_family_name(const std::string& s) {
    for (Family f : all_families)
        if (family_name(f) == s) return f;
    return std::nullopt;
}

inline bool is_tilde(Family f) {
    switch (f) {
    case Family::GammaTilde: case Family::LambdaTilde: case Family::ATilde: case Family::BTilde:
    case Family::CTilde: case Family::DTilde: case Family::ETilde: case Family::FTilde:
        return true;
    default:
        return false;
    }
}

/// The plain family a tilde family is built on (identity for plain families).
inline Family untilde(Family f) {
    switch (f) {
    case Family::GammaTilde: return Family::Gamma;
    case Family::LambdaTilde: return Family::Lambda;
    case Family::ATilde: return Family::A;
    case Family::BTilde: return Family::B;
    case Family::CTilde: return Family::C;
    case Family::DTilde: return Family::D;
    case Family::ETilde: return Family::E;
    case Family::FTilde: return Family::F;
    default: return f;
    }
}

struct FamilyError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A member of one of the named graph families: family name, strip height m, index n.
struct FamilyId {
    Family family = Family::Gamma;
    int m = 5;
    int n = 0;

    std::string str() const { return family_name(family) + ":" + std::to_string(m) + ":" + std::to_string(n); }

    /// Parses "Name:m:n", e.g. "Gamma:5:3" or "BTilde:5:-1".
    static FamilyId parse(const std::string& s) {
        auto a = s.find(':');
        auto b = a == std::string::npos ? a : s.find(':', a + 1);
        if (b == std::string::npos) throw FamilyError("family spec must be Name:m:n, got \"" + s + "\"");
        auto f = parse_family_name(s.substr(0, a));
        if (!f) throw FamilyError("unknown family name \"" + s.substr(0, a) + "\"");
        FamilyId id;
        id.family = *f;
        try {
            std::size_t used = 0;
            id.m = std::stoi(s.substr(a + 1, b - a - 1), &used);
            if (used != b - a - 1) throw std::invalid_argument("m");
            const std::string ns = s.substr(b + 1);
            id.n = std::stoi(ns, &used);
            if (used != ns.size()) throw std::invalid_argument("n");
        } catch (const std::logic_error&) {
            throw FamilyError("bad integer in family spec \"" + s + "\"");
        }
        return id;
    }

    friend auto operator<=>(const FamilyId&, const FamilyId&) = default;
};

/// Only the combinations the constructions define.
inline bool is_constructible(const FamilyId& id) {
    const Family f = id.family;
    bool name_ok = false;
    switch (id.m) {
    case 5: name_ok = true; break;
    case 4:
        name_ok = f == Family::Gamma || f == Family::Lambda || f == Family::A || f == Family::B || f == Family::C ||
                  f == Family::D;
        break;
    case 3:
        name_ok = f == Family::Gamma || f == Family::Lambda || f == Family::A || f == Family::LambdaTilde;
        break;
    default: return false;
    }
    if (!name_ok) return false;
    if (id.n >= 0) return true;
    return id.n == -1 && id.m == 5 && (f == Family::B || f == Family::BTilde);
}

namespace detail {

struct Builder {
    std::vector<Label> vs;
    std::vector<Edge> es;

    void vertex(Label v) { vs.push_back(std::move(v)); }
    void edge(Label a, Label b) { es.emplace_back(std::move(a), std::move(b)); }
    Graph graph() const { return Graph(vs, es); }
};

inline Label g(int i, int j) { return named("g", i, j); }

/// m-1 rows and 2n+1 columns; X-shaped diagonals in cells with i+j odd.
inline void grid(Builder& b, int n, int m) {
    const int rows = m - 1, cols = 2 * n + 1;
    for (int j = 1; j <= cols; ++j)
        for (int i = 1; i <= rows; ++i) b.vertex(g(i, j));
    for (int j = 1; j <= cols; ++j)
        for (int i = 1; i < rows; ++i) b.edge(g(i, j), g(i + 1, j));
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j < cols; ++j) b.edge(g(i, j), g(i, j + 1));
    for (int i = 1; i < rows; ++i)
        for (int j = 1; j < cols; ++j)
            if ((i + j) % 2 == 1) {
                b.edge(g(i, j), g(i + 1, j + 1));
                b.edge(g(i, j + 1), g(i + 1, j));
            }
}

/// Extra right-hand column 2n+2 of the tilde graphs.
inline void tilde_column(Builder& b, int n, int m) {
    const int c = 2 * n + 1, t = 2 * n + 2, rows = m - 1;
    for (int i = 1; i <= rows; ++i) b.vertex(g(i, t));
    for (int i = 1; i <= rows; ++i) b.edge(g(i, c), g(i, t));
    for (int i = 1; i < rows; ++i) b.edge(g(i, t), g(i + 1, t));
    if (m == 5) {
        b.edge(g(2, c), g(3, t));
        b.edge(g(3, c), g(2, t));
    }
}

inline void gadget5(Builder& b, Family f) {
    auto L = [](const char* s, int k) { return named(s, k); };
    switch (f) {
    case Family::Gamma: break;
    case Family::Lambda:
        for (int k = 1; k <= 4; ++k) b.vertex(L("l", k));
        b.edge(L("l", 1), L("l", 2));
        b.edge(L("l", 2), L("l", 3));
        b.edge(L("l", 3), L("l", 4));
        for (int k : {1, 2}) {
            b.edge(g(1, 1), L("l", k));
            b.edge(g(2, 1), L("l", k));
        }
        for (int k : {3, 4}) {
            b.edge(g(3, 1), L("l", k));
            b.edge(g(4, 1), L("l", k));
        }
        break;
    case Family::A:
        b.vertex(L("a", 1));
        b.vertex(L("a", 2));
        b.edge(L("a", 1), g(1, 1));
        b.edge(L("a", 1), g(2, 1));
        b.edge(L("a", 2), g(3, 1));
        b.edge(L("a", 2), g(4, 1));
        break;
    case Family::B:
        for (int k = 1; k <= 6; ++k) b.vertex(L("b", k));
        for (auto [x, y] : {std::pair{1, 2}, {1, 4}, {1, 5}, {2, 6}, {3, 4}, {4, 5}, {5, 6}}) b.edge(L("b", x), L("b", y));
        for (int k : {3, 4}) {
            b.edge(L("b", k), g(1, 1));
            b.edge(L("b", k), g(2, 1));
        }
        for (int k : {5, 6}) {
            b.edge(L("b", k), g(3, 1));
            b.edge(L("b", k), g(4, 1));
        }
        break;
    case Family::C:
        b.vertex(L("c", 1));
        b.edge(L("c", 1), g(3, 1));
        b.edge(L("c", 1), g(4, 1));
        break;
    case Family::D:
        b.vertex(L("d", 1));
        b.vertex(L("d", 2));
        b.edge(L("d", 1), L("d", 2));
        b.edge(L("d", 1), g(1, 1));
        b.edge(L("d", 1), g(2, 1));
        b.edge(L("d", 2), g(3, 1));
        b.edge(L("d", 2), g(4, 1));
        break;
    case Family::E:
        b.vertex(L("e", 1));
        for (int i = 1; i <= 4; ++i) b.edge(L("e", 1), g(i, 1));
        break;
    case Family::F:
        for (int k = 1; k <= 3; ++k) b.vertex(L("f", k));
        b.edge(L("f", 1), L("f", 2));
        b.edge(L("f", 2), L("f", 3));
        b.edge(L("f", 1), g(1, 1));
        b.edge(L("f", 1), g(2, 1));
        b.edge(L("f", 2), g(3, 1));
        b.edge(L("f", 2), g(4, 1));
        b.edge(L("f", 3), g(3, 1));
        b.edge(L("f", 3), g(4, 1));
        break;
    default: throw FamilyError("not a plain family");
    }
}

inline void gadget4(Builder& b, Family f) {
    auto L = [](const char* s, int k) { return named(s, k); };
    auto P = [](int k) { return named("g'", k); };
    switch (f) {
    case Family::Gamma: break;
    case Family::Lambda:
        for (int k = 1; k <= 3; ++k) b.vertex(P(k));
        b.edge(P(1), P(2));
        b.edge(P(1), g(1, 1));
        b.edge(P(1), g(2, 1));
        b.edge(P(2), P(3));
        b.edge(P(2), g(2, 1));
        b.edge(P(2), g(1, 1));
        b.edge(P(3), g(3, 1));
        break;
    case Family::A:
        b.vertex(L("a", 1));
        b.edge(L("a", 1), g(1, 1));
        b.edge(L("a", 1), g(2, 1));
        break;
    case Family::B:
        for (int k = 1; k <= 4; ++k) b.vertex(L("b", k));
        for (auto [x, y] : {std::pair{1, 3}, {1, 4}, {2, 3}, {3, 4}}) b.edge(L("b", x), L("b", y));
        for (int k : {2, 3}) {
            b.edge(L("b", k), g(1, 1));
            b.edge(L("b", k), g(2, 1));
        }
        b.edge(L("b", 4), g(3, 1));
        break;
    case Family::C:
        b.vertex(L("c", 1));
        for (int i = 1; i <= 3; ++i) b.edge(L("c", 1), g(i, 1));
        break;
    case Family::D:
        for (int k = 1; k <= 4; ++k) b.vertex(L("d", k));
        for (auto [x, y] : {std::pair{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}}) b.edge(L("d", x), L("d", y));
        for (int k : {2, 3}) {
            b.edge(L("d", k), g(1, 1));
            b.edge(L("d", k), g(2, 1));
        }
        b.edge(L("d", 4), g(3, 1));
        break;
    default: throw FamilyError("family not defined for m = 4");
    }
}

inline void gadget3(Builder& b, Family f, int n) {
    auto P = [](int k) { return named("g'", k); };
    switch (f) {
    case Family::Gamma: break;
    case Family::A:
        b.vertex(named("a", 1));
        b.edge(named("a", 1), g(1, 1));
        b.edge(named("a", 1), g(2, 1));
        break;
    case Family::Lambda:
        b.vertex(P(1));
        b.vertex(P(2));
        b.edge(P(1), g(1, 1));
        b.edge(P(2), g(2, 1));
        b.edge(P(1), P(2));
        b.edge(P(1), g(2, 1));
        b.edge(P(2), g(1, 1));
        break;
    case Family::LambdaTilde: tilde_column(b, n, 3); break;
    default: throw FamilyError("family not defined for m = 3");
    }
}

} // namespace detail

/// Constructs the family member with its coordinate vertex labels g(i,j), l(k), a(k), ...
inline Graph build(const FamilyId& id) {
    if (!is_constructible(id)) throw FamilyError("undefined family member " + id.str());
    detail::Builder b;
    const Family base = untilde(id.family);
    if (id.n == -1) {
        auto B = [](int k) { return named("b", k); };
        if (id.family == Family::B) {
            b.vertex(B(1));
            b.vertex(B(2));
            b.edge(B(1), B(2));
        } else {
            for (int k = 1; k <= 6; ++k) b.vertex(B(k));
            for (auto [x, y] : {std::pair{3, 4}, {4, 5}, {5, 6}, {1, 5}, {1, 4}, {1, 2}, {2, 6}}) b.edge(B(x), B(y));
        }
        return b.graph();
    }
    detail::grid(b, id.n, id.m);
    switch (id.m) {
    case 5:
        detail::gadget5(b, base);
        if (is_tilde(id.family)) detail::tilde_column(b, id.n, 5);
        break;
    case 4: detail::gadget4(b, id.family); break;
    case 3: detail::gadget3(b, id.family, id.n); break;
    }
    return b.graph();
}

inline Graph build(Family f, int m, int n) { return build(FamilyId{f, m, n}); }

/// Every constructible member with n in [n_lo, n_hi].
inline std::vector<FamilyId> family_members(int m, int n_lo, int n_hi) {
    std::vector<FamilyId> out;
    for (Family f : all_families)
        for (int n = n_lo; n <= n_hi; ++n)
            if (is_constructible({f, m, n})) out.push_back({f, m, n});
    return out;
}

/// The two family members claimed to make up L(P_n x P_m).
inline std::pair<FamilyId, FamilyId> product_component_families(int n, int m) {
    if (n < 2) throw FamilyError("product components need n >= 2");
    if (m < 3 || m > 5) throw FamilyError("product components need m in {3,4,5}");
    if (n % 2 == 0) {
        const int k = (n - 2) / 2;
        return {{Family::Gamma, m, k}, {Family::Gamma, m, k}};
    }
    const int k = (n - 3) / 2;
    switch (m) {
    case 5: return {{Family::Lambda, 5, k}, {Family::GammaTilde, 5, k}};
    case 4: return {{Family::Lambda, 4, k}, {Family::Lambda, 4, k}};
    default: return {{Family::Lambda, 3, k}, {Family::LambdaTilde, 3, k}};
    }
}

struct ProductComponent {
    Graph graph;
    FamilyId family;
    std::map<Label, Label> isomorphism;  // component vertex -> family vertex
};

/// Components of L(P_n x P_m), each matched to its family member by an explicit isomorphism.
inline std::vector<ProductComponent> components_of_product(int n, int m) {
    auto [f1, f2] = product_component_families(n, m);
    auto comps = connected_components(line_graph(categorical_product(path(n), path(m))));
    if (comps.size() != 2)
        throw FamilyError("L(P_" + std::to_string(n) + " x P_" + std::to_string(m) + ") has " +
                          std::to_string(comps.size()) + " components, expected 2");
    const Graph g1 = build(f1), g2 = build(f2);
    for (int order = 0; order < 2; ++order) {
        const Graph& a = comps[static_cast<std::size_t>(order)];
        const Graph& b = comps[static_cast<std::size_t>(1 - order)];
        auto i1 = find_isomorphism(a, g1);
        if (!i1) continue;
        auto i2 = find_isomorphism(b, g2);
        if (!i2) continue;
        std::vector<ProductComponent> out{{a, f1, *i1}, {b, f2, *i2}};
        if (order == 1) std::swap(out[0], out[1]);
        return out;
    }
    throw FamilyError("components of L(P_" + std::to_string(n) + " x P_" + std::to_string(m) + ") do not match " +
                      f1.str() + " and " + f2.str());
}

} // namespace matchtop
