#pragma once

#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "homology.hpp"
#include "smith.hpp"

namespace matchtop {

/// Symbolic homotopy type: the void complex, or a finite wedge of spheres
/// {dimension -> count}. The empty wedge is a point.
///
/// Dimension -1 stands for the complex {∅}, so Ind of the empty graph is S^-1.
class WedgeDescriptor {
public:
    static WedgeDescriptor void_complex() {
        WedgeDescriptor w;
        w.void_ = true;
        return w;
    }
    static WedgeDescriptor point() { return WedgeDescriptor(); }
    static WedgeDescriptor sphere(int d, BigInt count = 1) {
        if (d < -1) throw std::invalid_argument("sphere dimension must be >= -1");
        WedgeDescriptor w;
        if (count < 0) throw std::invalid_argument("negative sphere count");
        if (count > 0) w.spheres_[d] = count;
        return w;
    }
    /// {dim -> count}
    static WedgeDescriptor spheres(const std::map<int, BigInt>& m) {
        WedgeDescriptor w;
        for (const auto& [d, c] : m) w = wedge2(w, sphere(d, c));
        return w;
    }

    bool is_void() const { return void_; }
    bool is_contractible() const { return !void_ && spheres_.empty(); }
    const std::map<int, BigInt>& counts() const { return spheres_; }
    BigInt count(int d) const {
        auto it = spheres_.find(d);
        return it == spheres_.end() ? BigInt(0) : it->second;
    }
    BigInt total() const {
        BigInt t = 0;
        for (const auto& [d, c] : spheres_) t += c;
        return t;
    }
    std::optional<int> min_dim() const {
        if (spheres_.empty()) return std::nullopt;
        return spheres_.begin()->first;
    }
    std::optional<int> max_dim() const {
        if (spheres_.empty()) return std::nullopt;
        return spheres_.rbegin()->first;
    }

    friend bool operator==(const WedgeDescriptor& a, const WedgeDescriptor& b) {
        return a.void_ == b.void_ && a.spheres_ == b.spheres_;
    }

    /// Betti profile of the wedge: beta_d = number of d-spheres, no torsion.
    HomologyProfile to_profile() const {
        HomologyProfile p;
        p.is_void = void_;
        for (const auto& [d, c] : spheres_) {
            if (c > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("sphere count exceeds 64 bits");
            p.betti[d] = static_cast<std::uint64_t>(c);
        }
        return p;
    }

    /// Homology comparison; torsion anywhere is a mismatch.
    bool matches(const HomologyProfile& p) const {
        if (p.is_void != void_ || !p.torsion_free()) return false;
        if (p.betti.size() != spheres_.size()) return false;
        for (const auto& [d, c] : spheres_)
            if (BigInt(p.b(d)) != c) return false;
        return true;
    }

    static std::optional<WedgeDescriptor> from_profile(const HomologyProfile& p) {
        if (p.is_void) return void_complex();
        if (!p.torsion_free()) return std::nullopt;
        WedgeDescriptor w;
        for (auto [d, n] : p.betti) w.spheres_[d] = n;
        return w;
    }

    /// "point", "void", or e.g. "S^2 v 3S^4".
    std::string str() const {
        if (void_) return "void";
        if (spheres_.empty()) return "point";
        std::string s;
        for (const auto& [d, c] : spheres_) {
            if (!s.empty()) s += " v ";
            if (c != 1) s += c.str();
            s += "S^" + std::to_string(d);
        }
        return s;
    }

    nlohmann::json to_json() const {
        if (void_) return nlohmann::json{{"kind", "void"}};
        if (spheres_.empty()) return nlohmann::json{{"kind", "contractible"}};
        nlohmann::json sp = nlohmann::json::object();
        for (const auto& [d, c] : spheres_) {
            if (c <= std::numeric_limits<std::int64_t>::max())
                sp[std::to_string(d)] = static_cast<std::int64_t>(c);
            else
                sp[std::to_string(d)] = c.str();
        }
        return nlohmann::json{{"kind", "wedge"}, {"spheres", sp}};
    }

    friend WedgeDescriptor wedge2(const WedgeDescriptor& a, const WedgeDescriptor& b) {
        if (a.void_ || b.void_) throw std::invalid_argument("wedge with the void complex");
        WedgeDescriptor w = a;
        for (const auto& [d, c] : b.spheres_) w.spheres_[d] += c;
        return w;
    }

private:
    bool void_ = false;
    std::map<int, BigInt> spheres_;
};

inline WedgeDescriptor suspend(const WedgeDescriptor& w, int k) {
    if (w.is_void()) throw std::invalid_argument("suspension of the void complex");
    if (k < 0) throw std::invalid_argument("negative suspension");
    std::map<int, BigInt> m;
    for (const auto& [d, c] : w.counts()) m[d + k] = c;
    return WedgeDescriptor::spheres(m);
}

inline WedgeDescriptor wedge(const std::vector<WedgeDescriptor>& ws) {
    WedgeDescriptor out = WedgeDescriptor::point();
    for (const auto& w : ws) out = wedge2(out, w);
    return out;
}

/// k copies of w wedged together.
inline WedgeDescriptor wedge_power(const WedgeDescriptor& w, const BigInt& k) {
    if (w.is_void()) throw std::invalid_argument("wedge with the void complex");
    std::map<int, BigInt> m;
    for (const auto& [d, c] : w.counts()) m[d] = c * k;
    return WedgeDescriptor::spheres(m);
}

/// S^a * S^b = S^{a+b+1}, bilinear in the sphere counts. A void factor gives void.
inline WedgeDescriptor join_desc(const WedgeDescriptor& a, const WedgeDescriptor& b) {
    if (a.is_void() || b.is_void()) return WedgeDescriptor::void_complex();
    std::map<int, BigInt> m;
    for (const auto& [i, x] : a.counts())
        for (const auto& [j, y] : b.counts()) m[i + j + 1] += x * y;
    return WedgeDescriptor::spheres(m);
}

} // namespace matchtop
