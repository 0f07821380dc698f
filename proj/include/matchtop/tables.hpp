#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "descriptor.hpp"
#include "families.hpp"

namespace matchtop {

/// coef * ((x + shift) / period) + add, where x + shift is divisible by period.
struct TableCell {
    int shift = 0;
    int add = 0;
    bool excluded_at_zero = false;   // cell carries an "n != 0" caveat

    int eval(int x, int coef, int period) const {
        if ((x + shift) % period != 0) throw std::logic_error("table cell applied to the wrong residue");
        return coef * ((x + shift) / period) + add;
    }
};

struct DimPair {
    int d_min;
    int d_max;
    friend bool operator==(const DimPair&, const DimPair&) = default;
};

namespace detail {

template <std::size_t N>
using Column = std::array<TableCell, N>;

// Tables for M(P_n x P_5), indexed by the residue of k (n = 2k+2 or 2k+3).
inline const Column<4> t1_dmax_even{{{0, 1}, {-1, 5}, {-2, 9}, {-3, 13}}};
inline const Column<4> t1_dmax_odd{{{0, 3}, {-1, 7}, {-2, 11}, {1, 0}}};
inline const Column<5> t1_dmin_even{{{0, 1}, {-1, 5}, {-2, 9}, {-3, 11}, {-4, 15}}};
inline const Column<5> t1_dmin_odd{{{0, 4}, {-1, 7}, {-2, 10}, {-3, 13}, {1, 0}}};

// d_max of M(P_n x P_4) is 2(k + 3q) + add, k = 7q + r.
inline const std::array<int, 7> t2_dmax_even{1, 1, 3, 3, 3, 5, 5};
inline const std::array<int, 7> t2_dmax_odd{1, 3, 3, 5, 5, 7, 7};

// Per-family tables for m = 5: d_max by n mod 4 (coefficient 7), d_min by n mod 5 (coefficient 8).
inline Column<4> family_dmax5(Family f) {
    switch (f) {
    case Family::Gamma: case Family::E: return {{{0, 0, true}, {-1, 2}, {-2, 4}, {-3, 6}}};
    case Family::Lambda: return {{{0, 1}, {-1, 3}, {-2, 5}, {-3, 6}}};
    case Family::A: case Family::F: return {{{0, 1}, {-1, 3}, {-2, 4}, {-3, 6}}};
    case Family::B: return {{{0, 2}, {-1, 3}, {-2, 5}, {1, 0}}};
    case Family::C: case Family::D: return {{{0, 1}, {-1, 2}, {-2, 4}, {-3, 6}}};
    case Family::GammaTilde: case Family::ETilde: return {{{0, 1, true}, {-1, 3}, {-2, 5}, {1, 0}}};
    case Family::LambdaTilde: return {{{0, 2}, {-1, 4}, {-2, 6}, {1, 0}}};
    case Family::ATilde: case Family::FTilde: return {{{0, 2}, {-1, 4}, {-2, 5}, {1, 0}}};
    case Family::BTilde: return {{{0, 3}, {-1, 4}, {-2, 6}, {1, 1}}};
    case Family::CTilde: case Family::DTilde: return {{{0, 2}, {-1, 3}, {-2, 5}, {1, 0}}};
    }
    throw std::logic_error("unreachable");
}

inline Column<5> family_dmin5(Family f) {
    switch (f) {
    case Family::Gamma: case Family::E: return {{{0, 0, true}, {-1, 2}, {-2, 4}, {-3, 5}, {-4, 7}}};
    case Family::Lambda: case Family::A: return {{{0, 1}, {-1, 3}, {-2, 4}, {-3, 6}, {-4, 7}}};
    case Family::F: case Family::D: return {{{0, 1}, {-1, 2}, {-2, 4}, {-3, 6}, {-4, 7}}};
    case Family::B: return {{{0, 1}, {-1, 3}, {-2, 5}, {-3, 6}, {-4, 8}}};
    case Family::C: return {{{0, 1}, {-1, 2}, {-2, 4}, {-3, 5}, {-4, 7}}};
    case Family::GammaTilde: case Family::ETilde: return {{{0, 2, true}, {-1, 3}, {-2, 5}, {-3, 6}, {1, 0}}};
    case Family::LambdaTilde: case Family::ATilde: return {{{0, 2}, {-1, 4}, {-2, 5}, {-3, 7}, {1, 1}}};
    case Family::FTilde: return {{{0, 2}, {-1, 4}, {-2, 5}, {-3, 7}, {1, 0}}};
    case Family::BTilde: return {{{0, 3}, {-1, 4}, {-2, 6}, {-3, 7}, {1, 1}}};
    case Family::CTilde: case Family::DTilde: return {{{0, 2}, {-1, 3}, {-2, 5}, {-3, 7}, {1, 0}}};
    }
    throw std::logic_error("unreachable");
}

// m = 4: d_max = n + 3q + offset[r] with n = 7q + r; d_min = n + dmin_offset.
inline std::array<int, 7> family_dmax4(Family f) {
    switch (f) {
    case Family::Gamma: return {0, 0, 1, 1, 1, 2, 2};
    case Family::Lambda: return {0, 1, 1, 2, 2, 3, 3};
    case Family::A: return {0, 1, 1, 1, 2, 2, 3};
    case Family::B: return {1, 1, 2, 2, 3, 3, 3};
    case Family::C: return {0, 0, 1, 1, 2, 2, 3};
    case Family::D: return {1, 1, 2, 2, 2, 3, 3};
    default: throw FamilyError("family not defined for m = 4");
    }
}

inline int family_dmin4_offset(Family f) {
    switch (f) {
    case Family::Gamma: case Family::A: case Family::C: return 0;
    case Family::Lambda: case Family::B: case Family::D: return 1;
    default: throw FamilyError("family not defined for m = 4");
    }
}

} // namespace detail

/// Tabulated (d_min, d_max) of M(P_n x P_m), m in {4, 5}, n >= 3.
inline DimPair closed_form_dims(int n, int m) {
    if (n < 3) throw std::out_of_range("dimension tables start at n = 3");
    const bool even = n % 2 == 0;
    const int k = even ? (n - 2) / 2 : (n - 3) / 2;
    if (m == 5) {
        const auto& mx = even ? detail::t1_dmax_even : detail::t1_dmax_odd;
        const auto& mn = even ? detail::t1_dmin_even : detail::t1_dmin_odd;
        return {mn[static_cast<std::size_t>(k % 5)].eval(k, 16, 5), mx[static_cast<std::size_t>(k % 4)].eval(k, 7, 2)};
    }
    if (m == 4) {
        const int q = k / 7, r = k % 7;
        const int add = (even ? detail::t2_dmax_even : detail::t2_dmax_odd)[static_cast<std::size_t>(r)];
        return {even ? 2 * k + 1 : 2 * (k + 1) + 1, 2 * (k + 3 * q) + add};
    }
    throw std::out_of_range("dimension tables cover m = 4 and m = 5");
}

/// M(P_n x P_3) is a wedge of this many spheres, all of dimension closed_form_dim_m3(n).
inline BigInt closed_form_count(int n) {
    if (n < 2) throw std::out_of_range("closed_form_count needs n >= 2");
    if (n % 2 == 0) return 1;
    const int t = (n - 3) / 2;
    return (BigInt(1) << (t + 2)) - 1;
}

inline int closed_form_dim_m3(int n) {
    if (n < 2) throw std::out_of_range("closed_form_dim_m3 needs n >= 2");
    return n % 2 == 0 ? n - 1 : n - 2;
}

/// Tabulated d_max for a family member; nullopt where the cell excludes n = 0.
inline std::optional<int> table_dmax(const FamilyId& id) {
    if (!is_constructible(id) || id.n < 0) throw std::out_of_range("no table entry for " + id.str());
    const int n = id.n;
    if (id.m == 5) {
        auto cell = detail::family_dmax5(id.family)[static_cast<std::size_t>(n % 4)];
        if (n == 0 && cell.excluded_at_zero) return std::nullopt;
        return cell.eval(n, 7, 4);
    }
    if (id.m == 4) {
        if (id.family == Family::Lambda && n == 0) return 1;
        return n + 3 * (n / 7) + detail::family_dmax4(id.family)[static_cast<std::size_t>(n % 7)];
    }
    throw std::out_of_range("no table entry for " + id.str());
}

inline std::optional<int> table_dmin(const FamilyId& id) {
    if (!is_constructible(id) || id.n < 0) throw std::out_of_range("no table entry for " + id.str());
    const int n = id.n;
    if (id.m == 5) {
        auto cell = detail::family_dmin5(id.family)[static_cast<std::size_t>(n % 5)];
        if (n == 0 && cell.excluded_at_zero) return std::nullopt;
        return cell.eval(n, 8, 5);
    }
    if (id.m == 4) return n + detail::family_dmin4_offset(id.family);
    throw std::out_of_range("no table entry for " + id.str());
}

/// Direct formulas for the m = 3 families.
inline WedgeDescriptor closed_form_family_m3(const FamilyId& id) {
    if (id.m != 3 || !is_constructible(id)) throw std::out_of_range("closed form needs an m = 3 family");
    const int n = id.n;
    switch (id.family) {
    case Family::Gamma: case Family::LambdaTilde: return WedgeDescriptor::sphere(n);
    case Family::A: return WedgeDescriptor::sphere(n, BigInt(1) << (n + 1));
    case Family::Lambda: return WedgeDescriptor::sphere(n, (BigInt(1) << (n + 2)) - 1);
    default: throw std::out_of_range("closed form needs an m = 3 family");
    }
}

} // namespace matchtop
