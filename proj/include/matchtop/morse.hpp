#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "smith.hpp"

namespace matchtop::detail {

/// Acyclic matching on the cells of a complex (the empty simplex included),
/// built as a sequence of element matchings: for each vertex v in turn, every
/// still unmatched cell s without v is paired with s + v when s + v is a cell
/// that is also still unmatched. Cells never paired are critical.
class ElementMatching {
public:
    enum : std::uint8_t { Open = 0, Up = 1, Down = 2 };   // Up: paired with a coface

    ElementMatching(const SimplicialComplex& c, int top) : c_(c), top_(top) {
        const std::size_t layers = static_cast<std::size_t>(top + 2);
        state_.resize(layers);
        partner_.resize(layers);
        for (int d = -1; d <= top; ++d) {
            state_[L(d)].assign(c.count(d), Open);
            partner_[L(d)].assign(c.count(d), 0);
        }
        std::vector<std::vector<std::uint32_t>> open(layers);
        for (int d = -1; d < top; ++d) {
            open[L(d)].resize(c.count(d));
            for (std::size_t i = 0; i < c.count(d); ++i) open[L(d)][i] = static_cast<std::uint32_t>(i);
        }
        std::vector<SimplicialComplex::Vertex> up;
        for (std::size_t v = 0; v < c.n_vertices(); ++v) {
            const auto x = static_cast<SimplicialComplex::Vertex>(v);
            for (int d = -1; d < top; ++d) {
                auto& list = open[L(d)];
                std::size_t keep = 0;
                for (std::uint32_t i : list) {
                    if (state_[L(d)][i] != Open) continue;
                    auto s = c.simplex(d, i);
                    auto pos = std::lower_bound(s.begin(), s.end(), x);
                    if (pos == s.end() || *pos != x) {
                        up.assign(s.begin(), pos);
                        up.push_back(x);
                        up.insert(up.end(), pos, s.end());
                        long j = c.find(up);
                        if (j >= 0 && state_[L(d + 1)][static_cast<std::size_t>(j)] == Open) {
                            state_[L(d)][i] = Up;
                            partner_[L(d)][i] = static_cast<std::uint32_t>(j);
                            state_[L(d + 1)][static_cast<std::size_t>(j)] = Down;
                            partner_[L(d + 1)][static_cast<std::size_t>(j)] = i;
                            continue;
                        }
                    }
                    list[keep++] = i;
                }
                list.resize(keep);
            }
        }
        critical_.resize(layers);
        crit_index_.resize(layers);
        for (int d = -1; d <= top; ++d) {
            crit_index_[L(d)].assign(c.count(d), -1);
            for (std::size_t i = 0; i < c.count(d); ++i)
                if (state_[L(d)][i] == Open) {
                    crit_index_[L(d)][i] = static_cast<std::int32_t>(critical_[L(d)].size());
                    critical_[L(d)].push_back(static_cast<std::uint32_t>(i));
                }
        }
    }

    std::size_t n_critical(int d) const { return d < -1 || d > top_ ? 0 : critical_[L(d)].size(); }

    /// Morse boundary crit_d -> crit_{d-1}, 0 <= d <= top.
    SparseMatrix boundary(int d, std::size_t max_entries) const {
        SparseMatrix m(n_critical(d - 1), n_critical(d));
        Flow flow(*this, d - 1, max_entries);
        std::vector<SimplicialComplex::Vertex> face(static_cast<std::size_t>(d));
        for (std::size_t k = 0; k < critical_[L(d)].size(); ++k) {
            auto s = c_.simplex(d, critical_[L(d)][k]);
            Accum acc;
            for (int i = 0; i <= d; ++i) {
                drop(s, i, face);
                const auto f = static_cast<std::uint32_t>(c_.find(face));
                acc.add(flow.get(f), (i % 2 == 0) ? 1 : -1);
            }
            m.columns[k] = acc.take();
        }
        return m;
    }

private:
    using Vec = std::vector<std::pair<std::uint32_t, std::int64_t>>;

    static std::size_t L(int d) { return static_cast<std::size_t>(d + 1); }

    static void drop(std::span<const SimplicialComplex::Vertex> s, int i, std::vector<SimplicialComplex::Vertex>& out) {
        out.clear();
        for (int t = 0; t < static_cast<int>(s.size()); ++t)
            if (t != i) out.push_back(s[static_cast<std::size_t>(t)]);
    }

    struct Accum {
        Vec v;
        void add(const Vec& x, std::int64_t s) {
            for (auto [i, a] : x) {
                std::int64_t p;
                if (__builtin_mul_overflow(a, s, &p)) throw Overflow{};
                v.emplace_back(i, p);
            }
        }
        Vec take() {
            std::sort(v.begin(), v.end());
            Vec out;
            for (auto [i, a] : v) {
                if (!out.empty() && out.back().first == i) {
                    if (__builtin_add_overflow(out.back().second, a, &out.back().second)) throw Overflow{};
                } else {
                    out.emplace_back(i, a);
                }
            }
            std::erase_if(out, [](const auto& e) { return e.second == 0; });
            return out;
        }
    };

    /// Memoized gradient flow of (d)-cells onto critical d-cells.
    class Flow {
    public:
        Flow(const ElementMatching& m, int d, std::size_t max_entries) : m_(m), d_(d), max_entries_(max_entries) {}

        const Vec& get(std::uint32_t r) {
            if (auto it = memo_.find(r); it != memo_.end()) return it->second;
            // iterative post-order over the gradient paths leaving r
            std::vector<std::uint32_t> stack{r};
            std::vector<SimplicialComplex::Vertex> face;
            while (!stack.empty()) {
                const std::uint32_t x = stack.back();
                if (memo_.count(x)) {
                    stack.pop_back();
                    continue;
                }
                const auto st = m_.state_[L(d_)][x];
                if (st != Up) {
                    Vec v;
                    if (st == Open) v.emplace_back(static_cast<std::uint32_t>(m_.crit_index_[L(d_)][x]), 1);
                    store(x, std::move(v));
                    stack.pop_back();
                    continue;
                }
                const std::uint32_t up = m_.partner_[L(d_)][x];
                auto s = m_.c_.simplex(d_ + 1, up);
                bool ready = true;
                int self = -1;
                std::vector<std::pair<std::uint32_t, int>> faces;
                for (int i = 0; i <= d_ + 1; ++i) {
                    drop(s, i, face);
                    const auto f = static_cast<std::uint32_t>(m_.c_.find(face));
                    if (f == x) {
                        self = i;
                        continue;
                    }
                    faces.emplace_back(f, i);
                    if (!memo_.count(f)) {
                        if (on_stack_.count(f)) throw std::logic_error("matching is not acyclic");
                        ready = false;
                        stack.push_back(f);
                    }
                }
                if (!ready) {
                    on_stack_.insert({x, true});
                    continue;
                }
                // F(x) = -[up:x] * sum_{faces f != x} [up:f] F(f), with [up:f] = (-1)^i
                const std::int64_t self_sign = (self % 2 == 0) ? 1 : -1;
                Accum acc;
                for (auto [f, i] : faces) acc.add(memo_.at(f), -self_sign * ((i % 2 == 0) ? 1 : -1));
                on_stack_.erase(x);
                store(x, acc.take());
                stack.pop_back();
            }
            return memo_.at(r);
        }

    private:
        void store(std::uint32_t x, Vec v) {
            entries_ += v.size() + 1;
            if (entries_ > max_entries_) throw BudgetExceeded("Morse flow entry", entries_);
            memo_.emplace(x, std::move(v));
        }

        const ElementMatching& m_;
        int d_;
        std::size_t max_entries_;
        std::size_t entries_ = 0;
        std::unordered_map<std::uint32_t, Vec> memo_;
        std::unordered_map<std::uint32_t, bool> on_stack_;
    };

    const SimplicialComplex& c_;
    int top_;
    std::vector<std::vector<std::uint8_t>> state_;
    std::vector<std::vector<std::uint32_t>> partner_;
    std::vector<std::vector<std::uint32_t>> critical_;
    std::vector<std::vector<std::int32_t>> crit_index_;
};

} // namespace matchtop::detail
