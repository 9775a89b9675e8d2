#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "quotcone/harness.hpp"
#include "quotcone/splitting.hpp"

using namespace quotcone;
using namespace testing_helpers;

namespace {

// [[x,0],[y,x],[0,y],[0,0]]
PolyMatrix scroll_example(const Field& f) {
    return M(f, {{{0, 1}, {0, 0}}, {{1, 0}, {0, 1}}, {{0, 0}, {1, 0}}, {{0, 0}, {0, 0}}});
}

PolyMatrix euler(const Field& f) { return M(f, {{{0, 1}}, {{1, 0}}}); }

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InternalInconsistency;
}

} // namespace

TEST_CASE("left nullity examples") {
    const Field Q = qq();
    const PolyMatrix e = euler(Q);
    CHECK(left_nullity(e, 0) == 0);
    CHECK(left_nullity(e, 1) == 1);
    CHECK(left_nullity(e, 2) == 2);
    const PolyMatrix s = scroll_example(Q);
    CHECK(left_nullity(s, 0) == 1);
    // quotient O + O(2): h0 of O(e) + O(e - 2)
    CHECK(left_nullity(s, 1) == 2);
    CHECK(left_nullity(s, 2) == 4);
    Rng rng(1);
    const PolyMatrix g = random_poly_matrix(fp(), 4, {1, 1}, rng);
    CHECK(left_nullity(g, 0) == 0);
    CHECK(!criterion_det(g).is_zero());
}

TEST_CASE("right nullity examples") {
    const Field Q = qq();
    const PolyMatrix psi = M(Q, {{{0, 0, 1}}, {{0, 1, 0}}, {{1, 0, 0}}});  // (x^2, xy, y^2) transposed
    CHECK(right_nullity(psi, 0) == 0);
    CHECK(right_nullity(psi, 1) == 2);
    Rng rng(2);
    const PolyMatrix gen = random_poly_matrix(fp(), 3, {1, 1}, rng);  // n = 3, r = 2, d = 2: K = O(-2)
    CHECK(right_nullity(gen, 0) == 0);
    CHECK(right_nullity(gen, 1) == 0);
    CHECK(right_nullity(gen, 2) == 1);
}

TEST_CASE("nullities match the brute-force oracle") {
    Rng rng(3);
    for (int trial = 0; trial < 80; ++trial) {
        const Field field = trial % 2 ? qq() : fp();
        const std::size_t n = 1 + rng.below(4), k = rng.below(4);
        std::vector<int> degs;
        for (std::size_t j = 0; j < k; ++j) degs.push_back(static_cast<int>(rng.below(3)));
        const PolyMatrix m = random_poly_matrix(field, n, degs, rng, 1, 4);
        const int e = static_cast<int>(rng.below(4));
        CHECK(left_nullity(m, e) == oracle::left_nullity(m, e));
        if (k > 0) CHECK(right_nullity(m, e) == oracle::right_nullity(m, e));
    }
}

TEST_CASE("quotient splitting examples") {
    const Field Q = qq();
    CHECK(quotient_splitting(euler(Q)) == SplittingType{{1}, 0});
    CHECK(quotient_splitting(M(Q, {{{0, 0, 1}}, {{0, 1, 0}}})) == SplittingType{{1}, 1});  // (x^2, xy)
    CHECK(quotient_splitting(scroll_example(Q)) == SplittingType{{0, 2}, 0});
    CHECK(kind_of([&] { quotient_splitting(M(Q, {{{0, 1}, {0, 2}}, {{1, 0}, {2, 0}}})); }) == ErrorKind::NotInjective);
}

TEST_CASE("kernel splitting examples") {
    const Field Q = qq();
    CHECK(kernel_splitting(M(Q, {{{0, 0, 1}}, {{0, 1, 0}}, {{1, 0, 0}}})).degrees == std::vector<int>{1, 1});
    CHECK(kernel_splitting(M(Q, {{{0, 0, 0, 0, 1}}, {{1, 0, 0, 0, 0}}})).degrees == std::vector<int>{4});
    Rng rng(4);
    CHECK(kernel_splitting(random_poly_matrix(fp(), 4, {1, 1}, rng)).degrees == std::vector<int>{1, 1});
    CHECK(kind_of([&] { kernel_splitting(M(Q, {{{0, 1}, {0, 1}}, {{1, 0}, {1, 0}}})); }) == ErrorKind::NotSurjective);
}

TEST_CASE("local freeness, balance and degenerate scrolls") {
    const Field Q = qq();
    CHECK(is_locally_free(euler(Q)));
    CHECK(!is_locally_free(M(Q, {{{0, 0, 1}}, {{0, 1, 0}}})));
    CHECK(!is_locally_free(M(Q, {{{0, 1}, {0, 0}}, {{0, 0}, {1, 0}}})));  // pure torsion when n = k
    CHECK(!is_unbalanced({{1, 1}, 0}));
    CHECK(is_unbalanced({{0, 2}, 0}));
    CHECK(!is_unbalanced({{1, 2}, 0}));
    CHECK(kind_of([] { is_unbalanced({{}, 0}); }) == ErrorKind::DegenerateInput);
    CHECK(kind_of([] { is_unbalanced({{0, 2}, 1}); }) == ErrorKind::DegenerateInput);
    CHECK(is_unbalanced({{0, 2}, 1}, true));
    CHECK(scroll_degenerate(scroll_example(Q)));
    CHECK(!scroll_degenerate(M(Q, {{{0, 1}, {0, 0}}, {{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}, {{0, 0}, {1, 0}}})));
    Rng rng(5);
    const PolyMatrix g = random_poly_matrix(fp(), 4, {1, 1}, rng);
    CHECK(!scroll_degenerate(g));
    CHECK(!is_unbalanced(quotient_splitting(g)));
}

TEST_CASE("criterion determinant") {
    const Field Q = qq();
    CHECK(criterion_det(scroll_example(Q)).is_zero());
    CHECK(criterion_det(scroll_example(Q), make_params(4, 2, 2)).is_zero());
    CHECK(kind_of([&] { criterion_det(scroll_example(Q), make_params(4, 2, 3)); }) == ErrorKind::ShapeError);
    CHECK(kind_of([&] { criterion_det(M(Q, {{{0, 1}}, {{1, 0}}, {{0, 0}}})); }) == ErrorKind::ShapeError);
    Rng rng(6);
    for (int trial = 0; trial < 60; ++trial) {
        const Field field = trial % 2 ? qq() : fp();
        const PolyMatrix phi = random_poly_matrix(field, 4, {static_cast<int>(rng.below(3)), 2}, rng, 1, 3);
        if (!is_generically_injective(phi) || phi.total_degree() % 2 != 0) continue;
        CHECK(criterion_duality_holds(phi));
    }
}

TEST_CASE("support of a torsion quotient") {
    const Field Q = qq();
    CHECK(torsion_support_distinct(M(Q, {{{0, 1}, {0, 0}}, {{0, 0}, {1, 0}}})));   // diag(x, y)
    CHECK(!torsion_support_distinct(M(Q, {{{0, 1}, {0, 0}}, {{0, 0}, {0, 1}}})));  // diag(x, x)
    CHECK(torsion_support_distinct(M(Q, {{{0, 1}, {1, 0}}, {{-1, 0}, {0, 1}}})));  // det x^2 + y^2
    CHECK(kind_of([&] { torsion_support_distinct(M(Q, {{{0, 1}, {0, 1}}, {{0, 1}, {0, 1}}})); }) ==
          ErrorKind::NotInjective);
    CHECK(kind_of([&] { torsion_support_distinct(M(Q, {{{0, 1}}})); }) == ErrorKind::DegenerateInput);
}

TEST_CASE("directrix incidence") {
    const Field Q = qq();
    const PolyMatrix col = M(Q, {{{0, 1}}, {{1, 0}}, {{0, 0}}});  // (x, y, 0)
    auto span = [&](std::vector<long> v) {
        std::vector<Scalar> s;
        for (long x : v) s.emplace_back(Q, x);
        return LinearSubspace(Q, 3, {s});
    };
    CHECK(!directrix_meets(col, span({0, 0, 1})));
    CHECK(directrix_meets(col, span({1, 0, 0})));  // fiber (1:0:0) at y = 0
    CHECK(directrix_meets(col, span({0, 1, 0})));  // fiber (0:1:0) at x = 0
    CHECK(kind_of([&] {
              directrix_meets(col, LinearSubspace(Q, 3, {{Scalar(Q, 1L), Scalar(Q, 0L), Scalar(Q, 0L)},
                                                         {Scalar(Q, 0L), Scalar(Q, 1L), Scalar(Q, 0L)}}));
          }) == ErrorKind::ShapeError);
    CHECK(kind_of([&] { directrix_meets(M(Q, {{{0, 1}}, {{0, 0}}, {{0, 0}}}), span({0, 0, 1})); }) ==
          ErrorKind::DirectrixUndefined);
    CHECK(kind_of([&] { LinearSubspace(Q, 3, {}); }) == ErrorKind::ShapeError);
}

TEST_CASE("split analysis bundles the reports") {
    const Field Q = qq();
    const SplitAnalysis a = analyze_split(scroll_example(Q));
    CHECK(a.splitting == SplittingType{{0, 2}, 0});
    CHECK(a.locally_free);
    CHECK(a.unbalanced == true);
    CHECK(a.scroll_degenerate == true);
    CHECK(!a.support_distinct);
    const SplitAnalysis t = analyze_split(M(Q, {{{0, 1}, {0, 0}}, {{0, 0}, {0, 1}}}));
    CHECK(t.support_distinct == false);
    CHECK(!t.locally_free);
}

TEST_CASE("twist-nullity profiles are monotone with bounded differences") {
    for (int trial = 0; trial < 60; ++trial) {
        const PolyMatrix phi = sample_conservation_matrix(derive_seed(77, trial), trial % 2 ? qq() : fp());
        const std::size_t r = phi.rows() - phi.cols();
        long prev_nu = 0, prev_delta = 0;
        for (int e = 0; e <= phi.total_degree() + 1; ++e) {
            const long nu = static_cast<long>(left_nullity(phi, e));
            const long delta = nu - prev_nu;
            CHECK(nu >= prev_nu);
            CHECK(delta >= prev_delta);
            CHECK(delta <= static_cast<long>(r));
            prev_nu = nu;
            prev_delta = delta;
        }
    }
}

TEST_CASE("quotient splitting equals the kernel splitting of the dual map") {
    int checked = 0;
    for (std::uint64_t s = 0; checked < 200; ++s) {
        Rng rng(derive_seed(500, s));
        const Field field = s % 2 ? qq() : fp();
        const std::size_t n = 2 + rng.below(4);
        const std::size_t k = 1 + rng.below(n - 1);
        std::vector<int> degs;
        for (std::size_t j = 0; j < k; ++j) degs.push_back(static_cast<int>(rng.below(4)));
        const PolyMatrix phi = random_poly_matrix(field, n, degs, rng, s % 3 == 0 ? 1 : 0, 3);
        if (!is_generically_injective(phi) || !is_locally_free(phi)) continue;
        CHECK(quotient_splitting(phi).degrees == kernel_splitting(phi).degrees);
        ++checked;
    }
}

TEST_CASE("random balanced-degree matrices are almost always balanced") {
    std::size_t balanced = 0, total = 0;
    for (std::uint64_t s = 0; s < 200; ++s) {
        Rng rng(derive_seed(900, s));
        const int r = 1 + static_cast<int>(rng.below(3));
        const int k = 2 + static_cast<int>(rng.below(2));
        const int d = 1 + static_cast<int>(rng.below(6));
        const auto p = make_params(k + r, r, d);
        const PolyMatrix phi = random_poly_matrix(fp(), static_cast<std::size_t>(p.n), p.m, rng);
        const SplittingType st = quotient_splitting(phi);
        ++total;
        if (st.torsion == 0 && st.degrees == p.nvec) ++balanced;
    }
    CHECK(balanced * 100 >= 95 * total);
}

TEST_CASE("planted splittings are recovered") {
    for (std::uint64_t s = 0; s < 40; ++s) {
        const auto inst = sample_planted_splitting(derive_seed(31, s), s % 2 ? qq() : fp());
        CHECK(quotient_splitting(inst.phi) == inst.expected);
    }
}
