#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace matchtop {

using BigInt = boost::multiprecision::cpp_int;

/// Integer matrix stored by columns; each column sorted by row index.
struct SparseMatrix {
    using Entry = std::pair<std::uint32_t, std::int64_t>;

    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<Entry>> columns;

    SparseMatrix() = default;
    SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

    static SparseMatrix from_dense(const std::vector<std::vector<std::int64_t>>& a) {
        SparseMatrix m(a.size(), a.empty() ? 0 : a[0].size());
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (a[i].size() != m.cols) throw std::invalid_argument("ragged matrix");
            for (std::size_t j = 0; j < m.cols; ++j)
                if (a[i][j] != 0) m.columns[j].emplace_back(static_cast<std::uint32_t>(i), a[i][j]);
        }
        return m;
    }

    std::vector<std::vector<std::int64_t>> dense() const {
        std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols, 0));
        for (std::size_t j = 0; j < cols; ++j)
            for (auto [i, v] : columns[j]) a[i][j] = v;
        return a;
    }

    std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& c : columns) n += c.size();
        return n;
    }
};

/// Product a*b as a dense matrix (small matrices only).
inline std::vector<std::vector<std::int64_t>> multiply(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("dimension mismatch");
    std::vector<std::vector<std::int64_t>> out(a.rows, std::vector<std::int64_t>(b.cols, 0));
    for (std::size_t j = 0; j < b.cols; ++j)
        for (auto [k, v] : b.columns[j])
            for (auto [i, w] : a.columns[k]) out[i][j] += w * v;
    return out;
}

/// Smith normal form summary: rank and the invariant factors d_1 | d_2 | ... | d_r.
struct SmithForm {
    std::size_t rank = 0;
    std::size_t units = 0;          // number of factors equal to 1
    std::vector<BigInt> nonunits;   // factors > 1, ascending divisibility chain
    bool promoted = false;          // arbitrary precision was needed

    std::vector<BigInt> invariant_factors() const {
        std::vector<BigInt> out(units, BigInt(1));
        out.insert(out.end(), nonunits.begin(), nonunits.end());
        return out;
    }
};

/// Replaces a list of cyclic orders by invariant factors; drops 1s.
inline std::vector<BigInt> normalize_torsion(std::vector<BigInt> t) {
    for (auto& x : t) x = abs(x);
    t.erase(std::remove_if(t.begin(), t.end(), [](const BigInt& x) { return x <= 1; }), t.end());
    std::sort(t.begin(), t.end());
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            BigInt g = boost::multiprecision::gcd(t[i], t[j]);
            BigInt l = t[i] / g * t[j];
            t[i] = g;
            t[j] = l;
        }
    t.erase(std::remove_if(t.begin(), t.end(), [](const BigInt& x) { return x <= 1; }), t.end());
    return t;
}

namespace detail {

struct Overflow {};

inline std::int64_t checked_mulsub(std::int64_t a, std::int64_t f, std::int64_t b) {
    std::int64_t p, r;
    if (__builtin_mul_overflow(f, b, &p) || __builtin_sub_overflow(a, p, &r)) throw Overflow{};
    return r;
}
inline BigInt checked_mulsub(const BigInt& a, const BigInt& f, const BigInt& b) { return a - f * b; }

inline std::int64_t checked_abs(std::int64_t a) {
    if (a == INT64_MIN) throw Overflow{};
    return a < 0 ? -a : a;
}
inline BigInt checked_abs(const BigInt& a) { return abs(a); }

inline bool is_unit(std::int64_t a) { return a == 1 || a == -1; }
inline bool is_unit(const BigInt& a) { return a == 1 || a == -1; }

template <class Int>
class Eliminator {
public:
    using Row = std::vector<std::pair<std::uint32_t, Int>>;

    explicit Eliminator(const SparseMatrix& m) : nrows_(m.rows), ncols_(m.cols) {
        std::vector<std::size_t> len(nrows_, 0);
        for (const auto& c : m.columns)
            for (auto [i, v] : c) ++len[i];
        rows_.resize(nrows_);
        for (std::size_t i = 0; i < nrows_; ++i) rows_[i].reserve(len[i]);
        col_rows_.resize(ncols_);
        for (std::size_t j = 0; j < ncols_; ++j) {
            col_rows_[j].reserve(m.columns[j].size());
            for (auto [i, v] : m.columns[j]) {
                if (v == 0) continue;
                rows_[i].emplace_back(static_cast<std::uint32_t>(j), Int(v));
                col_rows_[j].push_back(i);
            }
        }
        row_alive_.assign(nrows_, 1);
        col_alive_.assign(ncols_, 1);
    }

    SmithForm run() {
        std::vector<Int> diag;
        std::size_t units = 0;
        std::vector<std::uint32_t> stuck;
        using Key = std::pair<std::size_t, std::uint32_t>;
        std::priority_queue<Key, std::vector<Key>, std::greater<Key>> heap;
        for (std::size_t j = 0; j < ncols_; ++j) heap.emplace(col_rows_[j].size(), static_cast<std::uint32_t>(j));

        while (true) {
            // unit pivots, sparsest column first
            while (!heap.empty()) {
                auto [k, c] = heap.top();
                heap.pop();
                if (!col_alive_[c]) continue;
                clean_column(c);
                const std::size_t real = col_rows_[c].size();
                if (real == 0) {
                    col_alive_[c] = 0;
                    continue;
                }
                if (real != k) {
                    heap.emplace(real, c);
                    continue;
                }
                std::uint32_t p = UINT32_MAX;
                std::size_t best = SIZE_MAX;
                for (std::uint32_t r : col_rows_[c]) {
                    if (!is_unit(entry(r, c))) continue;
                    if (rows_[r].size() < best || (rows_[r].size() == best && r < p)) {
                        best = rows_[r].size();
                        p = r;
                    }
                }
                if (p == UINT32_MAX) {
                    stuck.push_back(c);
                    continue;
                }
                clear_column_with_unit(p, c);
                for (const auto& [j, v] : rows_[p])
                    if (col_alive_[j] && j != c) heap.emplace(col_rows_[j].size(), j);
                kill(p, c);
                ++units;
            }
            // columns without a unit may have gained one
            bool requeued = false;
            for (std::uint32_t c : stuck) {
                if (!col_alive_[c]) continue;
                clean_column(c);
                if (col_rows_[c].empty()) {
                    col_alive_[c] = 0;
                    continue;
                }
                for (std::uint32_t r : col_rows_[c])
                    if (is_unit(entry(r, c))) {
                        heap.emplace(col_rows_[c].size(), c);
                        requeued = true;
                        break;
                    }
            }
            if (requeued) {
                std::vector<std::uint32_t> keep;
                for (std::uint32_t c : stuck)
                    if (col_alive_[c]) keep.push_back(c);
                stuck.swap(keep);
                continue;
            }
            // general Euclid step on the smallest entry
            std::uint32_t p = UINT32_MAX, q = 0;
            Int best{};
            for (std::size_t r = 0; r < nrows_; ++r) {
                if (!row_alive_[r]) continue;
                for (const auto& [j, v] : rows_[r]) {
                    if (!col_alive_[j] || v == 0) continue;
                    Int a = checked_abs(v);
                    if (p == UINT32_MAX || a < best) {
                        best = a;
                        p = static_cast<std::uint32_t>(r);
                        q = j;
                    }
                }
            }
            if (p == UINT32_MAX) break;
            auto [pr, pc, d] = euclid_pivot(p, q);
            // touched columns may now hold units
            for (const auto& [j, v] : rows_[pr])
                if (col_alive_[j] && j != pc) heap.emplace(col_rows_[j].size(), j);
            kill(pr, pc);
            if (is_unit(d))
                ++units;
            else
                diag.push_back(checked_abs(d));
            for (std::uint32_t c : stuck)
                if (col_alive_[c]) heap.emplace(col_rows_[c].size(), c);
            stuck.clear();
        }

        SmithForm out;
        out.units = units;
        std::vector<BigInt> big;
        for (const auto& d : diag) big.emplace_back(d);
        out.rank = units + big.size();
        // diagonal to invariant-factor chain; gcd/lcm passes may create new 1s
        std::size_t n_before = big.size();
        auto chain = normalize_torsion(big);
        out.units += n_before - chain.size();
        out.nonunits = std::move(chain);
        return out;
    }

private:
    Int entry(std::uint32_t r, std::uint32_t c) const {
        const auto& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::uint32_t x) { return e.first < x; });
        if (it == row.end() || it->first != c) return Int(0);
        return it->second;
    }

    void clean_column(std::uint32_t c) {
        auto& cr = col_rows_[c];
        std::sort(cr.begin(), cr.end());
        cr.erase(std::unique(cr.begin(), cr.end()), cr.end());
        cr.erase(std::remove_if(cr.begin(), cr.end(), [&](std::uint32_t r) { return !row_alive_[r] || entry(r, c) == 0; }),
                 cr.end());
    }

    // row_r -= f * row_p
    void row_axpy(std::uint32_t r, const Int& f, std::uint32_t p) {
        const Row& a = rows_[r];
        const Row& b = rows_[p];
        Row out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                if (col_alive_[b[j].first]) {
                    Int v = checked_mulsub(Int(0), f, b[j].second);
                    if (v != 0) {
                        out.emplace_back(b[j].first, std::move(v));
                        col_rows_[b[j].first].push_back(r);
                    }
                }
                ++j;
            } else {
                Int v = checked_mulsub(a[i].second, f, b[j].second);
                if (v != 0) out.emplace_back(a[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        rows_[r] = std::move(out);
    }

    void clear_column_with_unit(std::uint32_t p, std::uint32_t c) {
        const Int u = entry(p, c);  // ±1, its own inverse
        std::vector<std::uint32_t> targets = col_rows_[c];
        for (std::uint32_t r : targets) {
            if (r == p) continue;
            Int f = checked_mulsub(Int(0), entry(r, c), Int(-u));
            row_axpy(r, f, p);
        }
        col_rows_[c] = {p};
    }

    struct PivotResult {
        std::uint32_t row, col;
        Int value;
    };

    // Reduces until the pivot divides its row and column; returns the final pivot.
    PivotResult euclid_pivot(std::uint32_t p, std::uint32_t q) {
        while (true) {
            clean_column(q);
            Int a = entry(p, q);
            std::uint32_t swap_to = UINT32_MAX;
            Int swap_abs{};
            std::vector<std::uint32_t> targets = col_rows_[q];
            for (std::uint32_t r : targets) {
                if (r == p) continue;
                Int t = entry(r, q) / a;
                if (t != 0) row_axpy(r, t, p);
                Int rem = entry(r, q);
                if (rem != 0) {
                    Int ra = checked_abs(rem);
                    if (swap_to == UINT32_MAX || ra < swap_abs) {
                        swap_abs = ra;
                        swap_to = r;
                    }
                }
            }
            if (swap_to != UINT32_MAX) {
                p = swap_to;
                continue;
            }
            // column q is now zero outside p; column ops only touch row p
            Row& row = rows_[p];
            Row reduced;
            std::uint32_t next_q = UINT32_MAX;
            Int next_abs{};
            for (auto& [j, v] : row) {
                if (j == q) {
                    reduced.emplace_back(j, v);
                    continue;
                }
                if (!col_alive_[j]) continue;
                Int rem = v % a;
                if (rem != 0) {
                    Int ra = checked_abs(rem);
                    if (next_q == UINT32_MAX || ra < next_abs) {
                        next_abs = ra;
                        next_q = j;
                    }
                    reduced.emplace_back(j, rem);
                }
            }
            if (next_q == UINT32_MAX) return {p, q, a};
            row = std::move(reduced);
            q = next_q;
        }
    }

    void kill(std::uint32_t p, std::uint32_t c) {
        row_alive_[p] = 0;
        col_alive_[c] = 0;
        rows_[p].clear();
        rows_[p].shrink_to_fit();
        col_rows_[c].clear();
    }

    std::size_t nrows_, ncols_;
    std::vector<Row> rows_;
    std::vector<std::vector<std::uint32_t>> col_rows_;
    std::vector<char> row_alive_, col_alive_;
};

} // namespace detail

/// Exact Smith normal form. Runs in 64-bit arithmetic with overflow checks and
/// restarts in arbitrary precision if any intermediate value overflows.
inline SmithForm smith_normal_form(const SparseMatrix& m) {
    try {
        return detail::Eliminator<std::int64_t>(m).run();
    } catch (const detail::Overflow&) {
        SmithForm s = detail::Eliminator<BigInt>(m).run();
        s.promoted = true;
        return s;
    }
}

inline SmithForm smith_normal_form(const std::vector<std::vector<std::int64_t>>& dense) {
    return smith_normal_form(SparseMatrix::from_dense(dense));
}

} // namespace matchtop
