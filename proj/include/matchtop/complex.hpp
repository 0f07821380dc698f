#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "graph.hpp"

namespace matchtop {

/// Size limits for complex enumeration and boundary matrices.
struct Budget {
    std::size_t max_simplices = 5'000'000;
    std::size_t max_matrix_entries = 100'000'000;

    /// MATCHTOP_BUDGET="S" or "S,M" overrides the defaults.
    static Budget from_env() {
        Budget b;
        if (const char* e = std::getenv("MATCHTOP_BUDGET")) {
            std::string s(e);
            auto comma = s.find(',');
            try {
                b.max_simplices = std::stoull(s.substr(0, comma));
                if (comma != std::string::npos) b.max_matrix_entries = std::stoull(s.substr(comma + 1));
            } catch (const std::exception&) {
                throw std::invalid_argument("MATCHTOP_BUDGET must be \"S\" or \"S,M\": " + s);
            }
        }
        return b;
    }
};

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded(const std::string& what, std::size_t reached_)
        : std::runtime_error(what + " budget exceeded after " + std::to_string(reached_)), reached(reached_) {}
    std::size_t reached;
};

/// Finite abstract simplicial complex on vertices 0..n-1, stored per dimension.
///
/// A non-void complex always contains the empty simplex as its unique
/// (-1)-simplex. The void complex has no simplices at all.
class SimplicialComplex {
public:
    using Vertex = std::uint32_t;

    static SimplicialComplex void_complex(std::size_t n_vertices = 0) {
        SimplicialComplex c;
        c.n_ = n_vertices;
        c.void_ = true;
        c.counts_.clear();
        c.flat_.clear();
        return c;
    }

    /// The complex {∅}.
    static SimplicialComplex empty_complex() { return SimplicialComplex(); }

    /// Downward closure of the given faces. Intended for small hand-built complexes.
    static SimplicialComplex from_facets(std::size_t n_vertices, std::vector<std::vector<Vertex>> facets) {
        std::vector<std::vector<std::vector<Vertex>>> by_dim;
        for (auto& f : facets) {
            std::sort(f.begin(), f.end());
            f.erase(std::unique(f.begin(), f.end()), f.end());
            for (Vertex v : f)
                if (v >= n_vertices) throw std::invalid_argument("facet vertex out of range");
            const std::size_t k = f.size();
            if (k > 30) throw std::invalid_argument("facet too large for closure");
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
                std::vector<Vertex> s;
                for (std::size_t i = 0; i < k; ++i)
                    if (mask >> i & 1) s.push_back(f[i]);
                if (by_dim.size() < s.size()) by_dim.resize(s.size());
                by_dim[s.size() - 1].push_back(std::move(s));
            }
        }
        SimplicialComplex c;
        c.n_ = n_vertices;
        for (std::size_t d = 0; d < by_dim.size(); ++d) {
            auto& list = by_dim[d];
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
            for (const auto& s : list) c.push(s);
        }
        return c;
    }

    bool is_void() const { return void_; }
    bool has_empty_simplex() const { return !void_; }
    std::size_t n_vertices() const { return n_; }

    /// Largest d with a d-simplex; -1 for {∅}; -2 for the void complex.
    int dim() const { return void_ ? -2 : static_cast<int>(counts_.size()) - 2; }

    /// Number of d-simplices, d >= -1.
    std::size_t count(int d) const {
        if (d < -1 || static_cast<std::size_t>(d + 1) >= counts_.size()) return 0;
        return counts_[static_cast<std::size_t>(d + 1)];
    }

    std::size_t total() const {
        std::size_t t = 0;
        for (auto c : counts_) t += c;
        return t;
    }

    /// f-vector starting at dimension -1.
    const std::vector<std::size_t>& f_vector() const { return counts_; }

    std::span<const Vertex> simplex(int d, std::size_t i) const {
        const auto k = static_cast<std::size_t>(d + 1);
        return std::span<const Vertex>(flat_[k].data() + i * k, k);
    }

    /// Index of a sorted simplex within its dimension, or -1.
    long find(std::span<const Vertex> s) const {
        const int d = static_cast<int>(s.size()) - 1;
        const std::size_t nd = count(d);
        if (nd == 0) return -1;
        if (d == -1) return 0;
        std::size_t lo = 0, hi = nd;
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            auto t = simplex(d, mid);
            if (std::lexicographical_compare(t.begin(), t.end(), s.begin(), s.end()))
                lo = mid + 1;
            else
                hi = mid;
        }
        if (lo < nd) {
            auto t = simplex(d, lo);
            if (std::equal(t.begin(), t.end(), s.begin(), s.end())) return static_cast<long>(lo);
        }
        return -1;
    }

    bool contains(std::vector<Vertex> s) const {
        std::sort(s.begin(), s.end());
        return find(s) >= 0;
    }

    /// Dimension cap the complex was built with, if any.
    std::optional<int> max_dim() const { return max_dim_; }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.void_ == b.void_ && a.n_ == b.n_ && a.counts_ == b.counts_ && a.flat_ == b.flat_;
    }

    nlohmann::json to_json() const {
        nlohmann::json simp = nlohmann::json::object();
        for (int d = -1; d <= dim(); ++d) {
            nlohmann::json arr = nlohmann::json::array();
            for (std::size_t i = 0; i < count(d); ++i) {
                auto s = simplex(d, i);
                arr.push_back(std::vector<Vertex>(s.begin(), s.end()));
            }
            simp[std::to_string(d)] = arr;
        }
        return nlohmann::json{{"n_vertices", n_}, {"void", void_}, {"simplices", simp}};
    }

    // Appends a simplex; callers keep each dimension in lexicographic order.
    void push(std::span<const Vertex> s) {
        const std::size_t k = s.size();
        if (counts_.size() <= k) {
            counts_.resize(k + 1, 0);
            flat_.resize(k + 1);
        }
        flat_[k].insert(flat_[k].end(), s.begin(), s.end());
        ++counts_[k];
    }

    void set_max_dim(std::optional<int> d) { max_dim_ = d; }
    void set_n_vertices(std::size_t n) { n_ = n; }

private:
    SimplicialComplex() : counts_{1}, flat_(1) {}

    std::size_t n_ = 0;
    bool void_ = false;
    std::vector<std::size_t> counts_;
    std::vector<std::vector<Vertex>> flat_;
    std::optional<int> max_dim_;
};

namespace detail {

class IndependentSetEnumerator {
public:
    IndependentSetEnumerator(const Graph& g, std::optional<int> max_dim, const Budget& budget)
        : n_(g.order()), words_((n_ + 63) / 64), budget_(budget) {
        max_size_ = max_dim ? static_cast<std::size_t>(std::max(*max_dim + 1, 0)) : n_;
        nbr_.assign(n_ * words_, 0);
        for (std::size_t v = 0; v < n_; ++v)
            for (int w : g.adj(static_cast<int>(v))) nbr_[v * words_ + static_cast<std::size_t>(w) / 64] |= std::uint64_t{1} << (w % 64);
    }

    SimplicialComplex run(std::optional<int> max_dim) {
        SimplicialComplex c = SimplicialComplex::empty_complex();
        c.set_n_vertices(n_);
        c.set_max_dim(max_dim);
        // enumerate into per-size buckets first so each dimension stays lexicographic
        buckets_.assign(max_size_ + 1, {});
        sizes_.assign(max_size_ + 1, 0);
        emitted_ = 1;
        if (max_size_ > 0 && n_ > 0) {
            std::vector<std::uint64_t> cand(words_, 0);
            for (std::size_t v = 0; v < n_; ++v) cand[v / 64] |= std::uint64_t{1} << (v % 64);
            std::vector<SimplicialComplex::Vertex> cur;
            rec(cur, cand);
        }
        for (std::size_t k = 1; k <= max_size_; ++k) {
            const auto& b = buckets_[k];
            for (std::size_t i = 0; i < sizes_[k]; ++i)
                c.push(std::span<const SimplicialComplex::Vertex>(b.data() + i * k, k));
            buckets_[k].clear();
            buckets_[k].shrink_to_fit();
        }
        return c;
    }

private:
    void rec(std::vector<SimplicialComplex::Vertex>& cur, const std::vector<std::uint64_t>& cand) {
        std::vector<std::uint64_t> next(words_);
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t bits = cand[w];
            while (bits) {
                const std::size_t v = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
                bits &= bits - 1;
                cur.push_back(static_cast<SimplicialComplex::Vertex>(v));
                emit(cur);
                if (cur.size() < max_size_) {
                    bool any = false;
                    for (std::size_t x = 0; x < words_; ++x) {
                        std::uint64_t m = cand[x] & ~nbr_[v * words_ + x];
                        if (x < w) m = 0;
                        if (x == w) m &= (v % 64 == 63) ? 0 : (~std::uint64_t{0} << (v % 64 + 1));
                        next[x] = m;
                        any = any || m;
                    }
                    if (any) rec(cur, next);
                }
                cur.pop_back();
            }
        }
    }

    void emit(const std::vector<SimplicialComplex::Vertex>& s) {
        if (++emitted_ > budget_.max_simplices) throw BudgetExceeded("simplex", emitted_);
        auto& b = buckets_[s.size()];
        b.insert(b.end(), s.begin(), s.end());
        ++sizes_[s.size()];
    }

    std::size_t n_, words_;
    Budget budget_;
    std::size_t max_size_ = 0;
    std::vector<std::uint64_t> nbr_;
    std::vector<std::vector<SimplicialComplex::Vertex>> buckets_;
    std::vector<std::size_t> sizes_;
    std::size_t emitted_ = 0;
};

} // namespace detail

/// Ind(g): simplices are the independent sets of g, vertex i = g.label(i).
/// max_dim caps the simplex dimension.
inline SimplicialComplex independence_complex(const Graph& g, std::optional<int> max_dim = std::nullopt,
                                              const Budget& budget = Budget{}) {
    detail::IndependentSetEnumerator e(g, max_dim, budget);
    return e.run(max_dim);
}

/// M(g) = Ind(L(g)); an edgeless g gives the void complex.
inline SimplicialComplex matching_complex(const Graph& g, std::optional<int> max_dim = std::nullopt,
                                          const Budget& budget = Budget{}) {
    if (g.size() == 0) return SimplicialComplex::void_complex();
    return independence_complex(line_graph(g), max_dim, budget);
}

/// Join; b's vertices are shifted past a's. A void factor makes the join void.
inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b, const Budget& budget = Budget{}) {
    if (a.is_void() || b.is_void()) return SimplicialComplex::void_complex(a.n_vertices() + b.n_vertices());
    std::size_t total = 0;
    for (int i = -1; i <= a.dim(); ++i)
        for (int j = -1; j <= b.dim(); ++j) total += a.count(i) * b.count(j);
    if (total > budget.max_simplices) throw BudgetExceeded("simplex", total);

    using V = SimplicialComplex::Vertex;
    const V shift = static_cast<V>(a.n_vertices());
    SimplicialComplex c = SimplicialComplex::empty_complex();
    c.set_n_vertices(a.n_vertices() + b.n_vertices());
    const int top = a.dim() + b.dim() + 1;
    for (int d = 0; d <= top; ++d) {
        std::vector<std::vector<V>> list;
        for (int i = -1; i <= std::min(d, a.dim()); ++i) {
            const int j = d - 1 - i;
            if (j < -1 || j > b.dim()) continue;
            for (std::size_t x = 0; x < a.count(i); ++x)
                for (std::size_t y = 0; y < b.count(j); ++y) {
                    auto s = a.simplex(i, x);
                    auto t = b.simplex(j, y);
                    std::vector<V> u(s.begin(), s.end());
                    for (V v : t) u.push_back(v + shift);
                    list.push_back(std::move(u));
                }
        }
        std::sort(list.begin(), list.end());
        for (const auto& s : list) c.push(s);
    }
    return c;
}

} // namespace matchtop
