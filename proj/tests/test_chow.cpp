#include <doctest.h>

#include "oracles.hpp"
#include "quotcone/chow.hpp"
#include "quotcone/random.hpp"

using namespace quotcone;

TEST_CASE("total Chern class examples") {
    CHECK(chern_total({{-2, -1}}) == SurfaceClass{1, -2, -1, 0});
    CHECK(chern_total({}) == SurfaceClass::one());
    CHECK(chern_total({{-1, -1}, {-1, -1}}) == SurfaceClass{1, -2, -2, 2});
}

TEST_CASE("Chern products match brute-force expansion") {
    Rng rng(2);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<LineBundleOnS> bs;
        for (auto i = rng.below(6); i > 0; --i) bs.push_back({rng.uniform(-5, 5), rng.uniform(-5, 5)});
        CHECK(chern_total(bs) == oracle::chern_expand(bs));
    }
}

TEST_CASE("Whitney quotient") {
    CHECK(whitney_quotient(SurfaceClass::one()) == SurfaceClass::one());
    CHECK(whitney_quotient({1, -2, -2, 2}) == SurfaceClass{1, 2, 2, 6});
    try {
        (void)whitney_quotient({2, 0, 0, 0});
        FAIL("expected NotUnital");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotUnital);
    }
    Rng rng(9);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<LineBundleOnS> bs;
        for (auto i = rng.below(5); i > 0; --i) bs.push_back({rng.uniform(-4, 4), rng.uniform(-4, 4)});
        const SurfaceClass c = chern_total(bs);
        CHECK(whitney_quotient(c) * c == SurfaceClass::one());
        CHECK(c * whitney_quotient(c) == SurfaceClass::one());
    }
}

TEST_CASE("alpha and beta pairings") {
    const auto p3 = make_params(4, 2, 3);
    const auto p2 = make_params(4, 2, 2);
    CHECK(alpha_DY(p3, {1, 0}).dotY == 1);
    CHECK(alpha_DY(p3, {1, 0}).dotD == 4);
    CHECK(alpha_DY(p3, {0, 1}).dotY == 1);
    CHECK(alpha_DY(p3, {0, 1}).dotD == 5);
    CHECK(alpha_DY(p2, {1, 1}).dotY == 2);
    CHECK(alpha_DY(p2, {1, 1}).dotD == 6);
    CHECK(beta_DY(p2, {1, 1}).dotY == 2);
    CHECK(beta_DY(p2, {1, 1}).dotD == 2);
    CHECK(beta_DY(p3, {1, 0}).dotD == 2);
    CHECK(beta_DY(p3, {0, 1}).dotD == 1);
    CHECK_THROWS_AS(alpha_DY(p2, {1}), Error);
    CHECK_THROWS_AS(alpha_DY(p2, {-1, 1}), Error);
    try {
        (void)beta_DY(make_params(3, 0, 2), {});
        FAIL("expected UnsupportedRegime");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedRegime);
    }
}

TEST_CASE("pairings are linear and both routes agree on random data") {
    Rng rng(12);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 3 + static_cast<int>(rng.below(6));
        const int r = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 2)));
        const auto p = make_params(n, r, 1 + static_cast<int>(rng.below(12)));
        std::vector<std::int64_t> a, b;
        for (int i = 0; i < p.k; ++i) a.push_back(rng.uniform(0, 5));
        for (int i = 0; i < p.r; ++i) b.push_back(rng.uniform(0, 5));
        // Both functions throw InternalInconsistency if the routes differ.
        const CurvePairing ca = alpha_DY(p, a);
        const CurvePairing cb = beta_DY(p, b);
        CurvePairing sa, sb;
        for (int i = 0; i < p.k; ++i) {
            std::vector<std::int64_t> e(static_cast<std::size_t>(p.k), 0);
            e[static_cast<std::size_t>(i)] = 1;
            const auto c = alpha_DY(p, e);
            sa.dotD += a[static_cast<std::size_t>(i)] * c.dotD;
            sa.dotY += a[static_cast<std::size_t>(i)] * c.dotY;
        }
        for (int i = 0; i < p.r; ++i) {
            std::vector<std::int64_t> e(static_cast<std::size_t>(p.r), 0);
            e[static_cast<std::size_t>(i)] = 1;
            const auto c = beta_DY(p, e);
            sb.dotD += b[static_cast<std::size_t>(i)] * c.dotD;
            sb.dotY += b[static_cast<std::size_t>(i)] * c.dotY;
        }
        CHECK(ca.dotD == sa.dotD);
        CHECK(ca.dotY == sa.dotY);
        CHECK(cb.dotD == sb.dotD);
        CHECK(cb.dotY == sb.dotY);
    }
}

TEST_CASE("alpha . D rewrites as 2d sum a - sum_{i != j} a_i m_j on the grid") {
    for (int n = 2; n <= 8; ++n)
        for (int r = 0; r <= n - 2; ++r)
            for (int d = 1; d <= 10; ++d) {
                const auto p = make_params(n, r, d);
                std::vector<std::int64_t> a;
                for (int i = 0; i < p.k; ++i) a.push_back(i + 1);
                std::int64_t rhs = 0;
                for (std::size_t i = 0; i < a.size(); ++i) {
                    rhs += 2 * d * a[i];
                    for (std::size_t j = 0; j < a.size(); ++j)
                        if (i != j) rhs -= a[i] * p.m[j];
                }
                CHECK(alpha_DY(p, a).dotD == rhs);
            }
}
