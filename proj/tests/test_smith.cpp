#include <catch_amalgamated.hpp>

#include <random>

#include <matchtop/smith.hpp>

using namespace matchtop;

namespace {

using Dense = std::vector<std::vector<std::int64_t>>;

BigInt det(const std::vector<std::vector<BigInt>>& a) {
    const std::size_t n = a.size();
    if (n == 1) return a[0][0];
    BigInt s = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<BigInt>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<BigInt> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(a[r][k]);
            minor.push_back(row);
        }
        const BigInt t = a[0][c] * det(minor);
        s += (c % 2 == 0) ? t : BigInt(-t);
    }
    return s;
}

void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// invariant factors from determinantal divisors: gcd of all k x k minors
std::vector<BigInt> minor_invariants(const Dense& a) {
    const std::size_t r = a.size(), c = a.empty() ? 0 : a[0].size();
    std::vector<BigInt> divisors{1};
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        std::vector<std::size_t> cur;
        subsets(r, k, 0, cur, rs);
        subsets(c, k, 0, cur, cs);
        BigInt g = 0;
        for (const auto& ri : rs)
            for (const auto& ci : cs) {
                std::vector<std::vector<BigInt>> m;
                for (auto i : ri) {
                    std::vector<BigInt> row;
                    for (auto j : ci) row.emplace_back(a[i][j]);
                    m.push_back(row);
                }
                g = boost::multiprecision::gcd(g, abs(det(m)));
            }
        if (g == 0) break;
        divisors.push_back(g);
    }
    std::vector<BigInt> out;
    for (std::size_t k = 1; k < divisors.size(); ++k) out.push_back(divisors[k] / divisors[k - 1]);
    return out;
}

// rank over Z/p with p prime
std::size_t rank_mod(Dense a, std::int64_t p) {
    std::size_t r = 0;
    const std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
    for (auto& row : a)
        for (auto& x : row) x = ((x % p) + p) % p;
    auto inv = [p](std::int64_t x) {
        std::int64_t y = 1, e = p - 2;
        while (e) {
            if (e & 1) y = static_cast<std::int64_t>(static_cast<__int128>(y) * x % p);
            x = static_cast<std::int64_t>(static_cast<__int128>(x) * x % p);
            e >>= 1;
        }
        return y;
    };
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        const std::int64_t iv = inv(a[r][c]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const std::int64_t f = static_cast<std::int64_t>(static_cast<__int128>(a[i][c]) * iv % p);
            for (std::size_t j = 0; j < cols; ++j)
                a[i][j] = static_cast<std::int64_t>(((a[i][j] - static_cast<__int128>(f) * a[r][j]) % p + p) % p);
        }
        ++r;
    }
    return r;
}

Dense random_dense(std::mt19937_64& rng, std::size_t r, std::size_t c, int range, double density) {
    std::uniform_int_distribution<int> v(-range, range);
    std::bernoulli_distribution keep(density);
    Dense a(r, std::vector<std::int64_t>(c, 0));
    for (auto& row : a)
        for (auto& x : row)
            if (keep(rng)) x = v(rng);
    return a;
}

} // namespace

TEST_CASE("small matrices: invariant factors match determinantal divisors") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        const Dense a = random_dense(rng, r, c, 1 + static_cast<int>(trial % 9), 0.7);
        REQUIRE(smith_normal_form(a).invariant_factors() == minor_invariants(a));
    }
}

TEST_CASE("2x2 factors are the gcd and |det| / gcd") {
    std::mt19937_64 rng(32);
    std::uniform_int_distribution<int> v(-40, 40);
    for (int trial = 0; trial < 500; ++trial) {
        const Dense a{{v(rng), v(rng)}, {v(rng), v(rng)}};
        const BigInt g = boost::multiprecision::gcd(boost::multiprecision::gcd(BigInt(a[0][0]), BigInt(a[0][1])),
                                                    boost::multiprecision::gcd(BigInt(a[1][0]), BigInt(a[1][1])));
        const BigInt d = abs(BigInt(a[0][0]) * a[1][1] - BigInt(a[0][1]) * a[1][0]);
        std::vector<BigInt> expect;
        if (g != 0) expect.push_back(g);
        if (d != 0) expect.push_back(d / g);
        REQUIRE(smith_normal_form(a).invariant_factors() == expect);
    }
}

TEST_CASE("rank matches rank modulo a large prime on sparse 0/1/-1 matrices") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t r = 5 + rng() % 40, c = 5 + rng() % 40;
        const Dense a = random_dense(rng, r, c, 1, 0.15);
        const auto s = smith_normal_form(a);
        REQUIRE(s.rank == rank_mod(a, 1'000'000'007));
        // a factor divisible by p shows up as a rank drop mod p
        std::size_t div3 = 0;
        for (const auto& x : s.nonunits)
            if (x % 3 == 0) ++div3;
        REQUIRE(s.rank - div3 == rank_mod(a, 3));
    }
}

TEST_CASE("divisibility chain and torsion normalization") {
    const Dense a{{2, 0, 0}, {0, 3, 0}, {0, 0, 4}};
    REQUIRE(smith_normal_form(a).invariant_factors() == std::vector<BigInt>{1, 2, 12});
    REQUIRE(normalize_torsion({BigInt(4), BigInt(6), BigInt(1)}) == std::vector<BigInt>{2, 12});
    REQUIRE(normalize_torsion({BigInt(-3)}) == std::vector<BigInt>{3});
    REQUIRE(smith_normal_form(Dense{}).rank == 0);
    REQUIRE(smith_normal_form(SparseMatrix(3, 0)).rank == 0);
}

TEST_CASE("overflow promotes to arbitrary precision") {
    const std::int64_t big = std::int64_t{1} << 40;
    const Dense a{{big, big + 1}, {big - 1, big}};   // det = 1
    const auto s = smith_normal_form(a);
    REQUIRE(s.invariant_factors() == std::vector<BigInt>{1, 1});
    const Dense b{{big, 0}, {0, big}};
    const auto t = smith_normal_form(Dense{{big, 3}, {5, big}});
    REQUIRE(smith_normal_form(b).invariant_factors() == std::vector<BigInt>{BigInt(big), BigInt(big)});
    REQUIRE(t.invariant_factors() == minor_invariants(Dense{{big, 3}, {5, big}}));
}

TEST_CASE("sparse and dense constructors agree") {
    std::mt19937_64 rng(34);
    const Dense a = random_dense(rng, 6, 9, 3, 0.4);
    const auto m = SparseMatrix::from_dense(a);
    REQUIRE(m.dense() == a);
    REQUIRE(multiply(m, SparseMatrix::from_dense(Dense(9, std::vector<std::int64_t>(1, 1)))).size() == 6);
}
