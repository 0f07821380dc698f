#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "complex.hpp"
#include "morse.hpp"
#include "smith.hpp"

namespace matchtop {

/// Boundary map C_d -> C_{d-1}; for d = 0 the augmentation to the empty simplex.
struct BoundaryMatrix {
    int d = 0;
    SparseMatrix matrix;
};

inline std::size_t boundary_entries(const SimplicialComplex& c, int d) {
    return c.count(d) * static_cast<std::size_t>(d + 1);
}

inline BoundaryMatrix boundary_matrix(const SimplicialComplex& c, int d) {
    if (c.is_void()) throw std::invalid_argument("boundary of the void complex");
    if (d < 0) throw std::invalid_argument("boundary dimension must be >= 0");
    BoundaryMatrix b;
    b.d = d;
    b.matrix = SparseMatrix(c.count(d - 1), c.count(d));
    std::vector<SimplicialComplex::Vertex> face(static_cast<std::size_t>(d));
    for (std::size_t j = 0; j < c.count(d); ++j) {
        auto s = c.simplex(d, j);
        auto& col = b.matrix.columns[j];
        col.reserve(static_cast<std::size_t>(d + 1));
        for (int i = 0; i <= d; ++i) {
            std::size_t k = 0;
            for (int t = 0; t <= d; ++t)
                if (t != i) face[k++] = s[static_cast<std::size_t>(t)];
            long row = c.find(face);
            if (row < 0) throw std::logic_error("complex is not downward closed");
            col.emplace_back(static_cast<std::uint32_t>(row), (i % 2 == 0) ? 1 : -1);
        }
        std::sort(col.begin(), col.end());
    }
    return b;
}

/// Reduced integral homology: free rank and invariant factors per dimension.
struct HomologyProfile {
    bool is_void = false;
    std::map<int, std::uint64_t> betti;           // nonzero entries only
    std::map<int, std::vector<BigInt>> torsion;   // nonempty entries only

    std::uint64_t b(int d) const {
        auto it = betti.find(d);
        return it == betti.end() ? 0 : it->second;
    }
    std::vector<BigInt> t(int d) const {
        auto it = torsion.find(d);
        return it == torsion.end() ? std::vector<BigInt>{} : it->second;
    }
    bool torsion_free() const { return torsion.empty(); }
    bool trivial() const { return !is_void && betti.empty() && torsion.empty(); }

    void set(int d, std::uint64_t rank, std::vector<BigInt> tor = {}) {
        if (rank) betti[d] = rank; else betti.erase(d);
        tor = normalize_torsion(std::move(tor));
        if (!tor.empty()) torsion[d] = std::move(tor); else torsion.erase(d);
    }

    friend bool operator==(const HomologyProfile& a, const HomologyProfile& b) {
        return a.is_void == b.is_void && a.betti == b.betti && a.torsion == b.torsion;
    }

    nlohmann::json to_json() const {
        nlohmann::json be = nlohmann::json::object(), to = nlohmann::json::object();
        for (auto [d, n] : betti) be[std::to_string(d)] = n;
        for (const auto& [d, ts] : torsion) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& x : ts) arr.push_back(x.str());
            to[std::to_string(d)] = arr;
        }
        nlohmann::json j{{"betti", be}};
        if (!to.empty()) j["torsion"] = to;
        if (is_void) j["void"] = true;
        return j;
    }

    static HomologyProfile from_json(const nlohmann::json& j) {
        HomologyProfile p;
        p.is_void = j.value("void", false);
        if (j.contains("betti"))
            for (const auto& [k, v] : j.at("betti").items()) p.set(std::stoi(k), v.get<std::uint64_t>(), p.t(std::stoi(k)));
        if (j.contains("torsion"))
            for (const auto& [k, v] : j.at("torsion").items()) {
                std::vector<BigInt> ts;
                for (const auto& x : v) ts.emplace_back(x.is_string() ? x.get<std::string>() : std::to_string(x.get<std::int64_t>()));
                p.set(std::stoi(k), p.b(std::stoi(k)), ts);
            }
        return p;
    }

    std::string str() const {
        if (is_void) return "void";
        if (trivial()) return "trivial";
        std::string s;
        std::map<int, int> dims;
        for (auto [d, n] : betti) dims[d] = 1;
        for (const auto& [d, ts] : torsion) dims[d] = 1;
        for (auto [d, unused] : dims) {
            if (!s.empty()) s += " + ";
            s += "H" + std::to_string(d) + "=";
            std::string g;
            if (b(d)) g = "Z^" + std::to_string(b(d));
            for (const auto& x : t(d)) g += (g.empty() ? "" : "+") + std::string("Z/") + x.str();
            s += g;
        }
        return s;
    }
};

struct HomologyOptions {
    /// Morse: SNF of the Morse complex of an element matching. Direct: SNF of the full boundary matrices.
    enum class Method { Morse, Direct };
    std::optional<int> lo, hi;   // dimension range; default [-1, dim]
    Budget budget{};
    unsigned jobs = 1;
    Method method = Method::Morse;
};

namespace detail {
inline SmithForm boundary_snf(const SimplicialComplex& c, int d, const Budget& budget) {
    if (boundary_entries(c, d) > budget.max_matrix_entries)
        throw BudgetExceeded("boundary matrix entry", boundary_entries(c, d));
    return smith_normal_form(boundary_matrix(c, d).matrix);
}

template <class F>
std::map<int, SmithForm> run_per_dim(const std::vector<int>& dims, unsigned jobs, F&& f) {
    std::map<int, SmithForm> out;
    if (jobs > 1 && dims.size() > 1) {
        std::map<int, std::future<SmithForm>> fut;
        for (int d : dims) fut.emplace(d, std::async(std::launch::async, [&f, d] { return f(d); }));
        for (auto& [d, x] : fut) out.emplace(d, x.get());
    } else {
        for (int d : dims) out.emplace(d, f(d));
    }
    return out;
}
} // namespace detail

/// beta_d = f_d - rank d_d - rank d_{d+1}; torsion in degree d from d_{d+1}.
/// Dimensions at or above a complex's max_dim cap are not reported.
inline HomologyProfile reduced_homology(const SimplicialComplex& c, const HomologyOptions& opt = {}) {
    HomologyProfile p;
    if (c.is_void()) {
        p.is_void = true;
        return p;
    }
    int lo = opt.lo.value_or(-1);
    int hi = opt.hi.value_or(c.dim());
    lo = std::max(lo, -1);
    hi = std::min(hi, c.dim());
    if (c.max_dim()) hi = std::min(hi, *c.max_dim() - 1);
    if (hi < lo) return p;

    std::vector<int> need;
    for (int d = std::max(lo, 0); d <= hi + 1; ++d)
        if (d <= c.dim()) need.push_back(d);
    const int top = std::min(hi + 1, c.dim());

    std::map<int, SmithForm> snf;
    std::function<std::size_t(int)> cells;
    bool done = false;
    if (opt.method == HomologyOptions::Method::Morse) {
        try {
            detail::ElementMatching m(c, top);
            snf = detail::run_per_dim(need, opt.jobs, [&](int d) {
                return smith_normal_form(m.boundary(d, opt.budget.max_matrix_entries));
            });
            std::vector<std::size_t> crit;
            for (int d = -1; d <= hi; ++d) crit.push_back(m.n_critical(d));
            cells = [crit](int d) { return crit[static_cast<std::size_t>(d + 1)]; };
            done = true;
        } catch (const detail::Overflow&) {
            snf.clear();
        }
    }
    if (!done) {
        snf = detail::run_per_dim(need, opt.jobs, [&](int d) { return detail::boundary_snf(c, d, opt.budget); });
        cells = [&c](int d) { return c.count(d); };
    }
    auto rank = [&](int d) -> std::size_t {
        auto it = snf.find(d);
        return it == snf.end() ? 0 : it->second.rank;
    };
    for (int d = lo; d <= hi; ++d) {
        const std::size_t f = cells(d);
        const std::size_t r = (d >= 0 ? rank(d) : 0) + rank(d + 1);
        std::vector<BigInt> tor;
        if (auto it = snf.find(d + 1); it != snf.end()) tor = it->second.nonunits;
        p.set(d, static_cast<std::uint64_t>(f - r), tor);
    }
    return p;
}

inline HomologyProfile reduced_homology(const SimplicialComplex& c, std::optional<int> lo, std::optional<int> hi) {
    HomologyOptions o;
    o.lo = lo;
    o.hi = hi;
    return reduced_homology(c, o);
}

// ---- profile algebra, used to evaluate rewrite expressions ----

/// Sigma^k: every degree shifted up by k.
inline HomologyProfile suspend(const HomologyProfile& p, int k) {
    if (p.is_void) throw std::invalid_argument("suspension of the void complex");
    HomologyProfile q;
    for (auto [d, n] : p.betti) q.betti[d + k] = n;
    for (const auto& [d, t] : p.torsion) q.torsion[d + k] = t;
    return q;
}

/// Wedge: reduced homology adds degreewise.
inline HomologyProfile wedge(const std::vector<HomologyProfile>& ps) {
    HomologyProfile q;
    for (const auto& p : ps) {
        if (p.is_void) throw std::invalid_argument("wedge with the void complex");
        for (auto [d, n] : p.betti) q.betti[d] += n;
        for (const auto& [d, t] : p.torsion) {
            auto& dst = q.torsion[d];
            dst.insert(dst.end(), t.begin(), t.end());
        }
    }
    for (auto& [d, t] : q.torsion) t = normalize_torsion(std::move(t));
    std::erase_if(q.torsion, [](const auto& e) { return e.second.empty(); });
    return q;
}

namespace detail {
inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Betti number overflow");
    return r;
}
} // namespace detail

/// Join via the Kunneth formula for joins:
/// H_{n+1}(X*Y) = sum_{i+j=n} H_i(X) (x) H_j(Y)  +  sum_{i+j=n-1} Tor(H_i(X), H_j(Y)).
inline HomologyProfile join(const HomologyProfile& x, const HomologyProfile& y) {
    HomologyProfile q;
    if (x.is_void || y.is_void) {
        q.is_void = true;
        return q;
    }
    std::map<int, int> dx, dy;
    for (auto [d, n] : x.betti) dx[d] = 1;
    for (const auto& [d, t] : x.torsion) dx[d] = 1;
    for (auto [d, n] : y.betti) dy[d] = 1;
    for (const auto& [d, t] : y.torsion) dy[d] = 1;
    std::map<int, std::vector<BigInt>> tor;
    for (auto [i, u1] : dx)
        for (auto [j, u2] : dy) {
            const std::uint64_t a = x.b(i), b = y.b(j);
            const auto s = x.t(i), t = y.t(j);
            const int deg = i + j + 1;
            if (a && b) q.betti[deg] += detail::checked_mul(a, b);
            auto& td = tor[deg];
            for (const auto& v : s)
                for (std::uint64_t k = 0; k < b; ++k) td.push_back(v);
            for (const auto& v : t)
                for (std::uint64_t k = 0; k < a; ++k) td.push_back(v);
            for (const auto& v : s)
                for (const auto& w : t) {
                    BigInt g = boost::multiprecision::gcd(v, w);
                    td.push_back(g);
                    tor[deg + 1].push_back(g);
                }
        }
    for (auto& [d, t] : tor) {
        auto n = normalize_torsion(std::move(t));
        if (!n.empty()) q.torsion[d] = std::move(n);
    }
    return q;
}

} // namespace matchtop
