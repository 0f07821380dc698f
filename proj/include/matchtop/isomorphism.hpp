#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace matchtop {

namespace detail {

class IsoSearch {
public:
    IsoSearch(const Graph& g, const Graph& h) : g_(g), h_(h), n_(static_cast<int>(g.order())) {}

    std::optional<std::vector<int>> run() {
        std::vector<int> cg(static_cast<std::size_t>(n_), 0), ch(static_cast<std::size_t>(n_), 0);
        return search(cg, ch);
    }

private:
    // Joint colour refinement; colour ids are shared by both graphs so classes stay comparable.
    bool refine(std::vector<int>& cg, std::vector<int>& ch) const {
        std::size_t classes = count_classes(cg);
        while (true) {
            std::map<std::vector<int>, int> ids;
            auto sig = [&](const Graph& x, const std::vector<int>& c, int v) {
                std::vector<int> s;
                s.reserve(x.adj(v).size() + 1);
                for (int w : x.adj(v)) s.push_back(c[static_cast<std::size_t>(w)]);
                std::sort(s.begin(), s.end());
                s.insert(s.begin(), c[static_cast<std::size_t>(v)]);
                return s;
            };
            std::vector<std::vector<int>> sg, sh;
            for (int v = 0; v < n_; ++v) {
                sg.push_back(sig(g_, cg, v));
                sh.push_back(sig(h_, ch, v));
                ids.emplace(sg.back(), 0);
                ids.emplace(sh.back(), 0);
            }
            int next = 0;
            for (auto& [k, id] : ids) id = next++;
            std::vector<int> hist(static_cast<std::size_t>(next), 0);
            for (int v = 0; v < n_; ++v) {
                cg[static_cast<std::size_t>(v)] = ids[sg[static_cast<std::size_t>(v)]];
                ch[static_cast<std::size_t>(v)] = ids[sh[static_cast<std::size_t>(v)]];
                ++hist[static_cast<std::size_t>(cg[static_cast<std::size_t>(v)])];
                --hist[static_cast<std::size_t>(ch[static_cast<std::size_t>(v)])];
            }
            for (int x : hist)
                if (x != 0) return false;
            std::size_t now = static_cast<std::size_t>(next);
            if (now == classes) return true;
            classes = now;
        }
    }

    static std::size_t count_classes(const std::vector<int>& c) {
        std::vector<int> s = c;
        std::sort(s.begin(), s.end());
        return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
    }

    std::optional<std::vector<int>> search(std::vector<int> cg, std::vector<int> ch) const {
        if (!refine(cg, ch)) return std::nullopt;
        std::map<int, int> size;
        for (int c : cg) ++size[c];
        int pick = -1, best = n_ + 1;
        for (auto [c, s] : size)
            if (s > 1 && s < best) {
                best = s;
                pick = c;
            }
        if (pick < 0) {
            std::vector<int> map(static_cast<std::size_t>(n_));
            std::map<int, int> where;
            for (int v = 0; v < n_; ++v) where[ch[static_cast<std::size_t>(v)]] = v;
            for (int v = 0; v < n_; ++v) map[static_cast<std::size_t>(v)] = where[cg[static_cast<std::size_t>(v)]];
            for (int v = 0; v < n_; ++v)
                for (int w : g_.adj(v))
                    if (!h_.adjacent(map[static_cast<std::size_t>(v)], map[static_cast<std::size_t>(w)]))
                        return std::nullopt;
            return map;
        }
        int u = -1;
        for (int v = 0; v < n_ && u < 0; ++v)
            if (cg[static_cast<std::size_t>(v)] == pick) u = v;
        int fresh = *std::max_element(cg.begin(), cg.end()) + 1;
        for (int v = 0; v < n_; ++v) {
            if (ch[static_cast<std::size_t>(v)] != pick) continue;
            auto cg2 = cg, ch2 = ch;
            cg2[static_cast<std::size_t>(u)] = fresh;
            ch2[static_cast<std::size_t>(v)] = fresh;
            if (auto r = search(std::move(cg2), std::move(ch2))) return r;
        }
        return std::nullopt;
    }

    const Graph& g_;
    const Graph& h_;
    int n_;
};

} // namespace detail

/// Exact isomorphism test. Returns a vertex map g -> h when one exists.
inline std::optional<std::map<Label, Label>> find_isomorphism(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
    auto r = detail::IsoSearch(g, h).run();
    if (!r) return std::nullopt;
    std::map<Label, Label> out;
    for (std::size_t v = 0; v < g.order(); ++v) out.emplace(g.label(static_cast<int>(v)), h.label((*r)[v]));
    return out;
}

inline bool is_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

} // namespace matchtop
