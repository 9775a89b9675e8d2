#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "helpers.hpp"
#include "oracles.hpp"
#include "quotcone/matrix.hpp"
#include "quotcone/random.hpp"

using namespace quotcone;
using namespace testing_helpers;

TEST_CASE("rationals stay in lowest terms with a positive denominator") {
    const Field Q = qq();
    Scalar a = Scalar::parse(Q, "6/-4");
    CHECK(a.to_string() == "-3/2");
    CHECK(a.rational().get_den() == 2);
    CHECK((Scalar(Q, 2L) / Scalar(Q, 4L)).to_string() == "1/2");
    CHECK((a * Scalar(Q, -2L)).to_string() == "3");
    CHECK_THROWS_AS(Scalar::parse(Q, "1/0"), Error);
    CHECK_THROWS_AS(Scalar::parse(Q, "abc"), Error);
}

TEST_CASE("prime field arithmetic wraps and inverts") {
    const Field P = Field::prime(7);
    CHECK(Scalar(P, 10L).residue() == 3);
    CHECK(Scalar(P, -1L).residue() == 6);
    CHECK((Scalar(P, 3L) * Scalar(P, 3L).inverse()).is_one());
    CHECK(Scalar::parse(P, "-15").residue() == 6);
    CHECK_THROWS_AS(Scalar(P, 0L).inverse(), Error);
    CHECK_THROWS_AS(Field::prime(9), Error);
    CHECK_THROWS_AS(Field::prime(2), Error);
}

TEST_CASE("mixing fields is rejected") {
    try {
        (void)(Scalar(qq(), 1L) + Scalar(fp(), 1L));
        FAIL("expected FieldMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::FieldMismatch);
    }
}

TEST_CASE("univariate polynomials trim and divide exactly") {
    const Field Q = qq();
    const UniPoly s = UniPoly::monomial(Scalar::one(Q), 1);
    const UniPoly one = UniPoly::from_int(Q, 1);
    const UniPoly p = (s + one) * (s - one);
    CHECK(p.degree() == 2);
    CHECK(exact_div(p, s - one) == s + one);
    CHECK_THROWS_AS(exact_div(p, s), Error);
    CHECK(gcd(p, (s + one) * s) == s + one);
    CHECK(UniPoly::zero(Q).degree() == UniPoly::kMinusInfinity);
    CHECK((p - p).is_zero());
    CHECK((s * s * s).order_at_zero() == 3);
    // s^2 - 1 on the other chart of a degree-3 form: s^3 (1/s^2 - 1) = s - s^3
    CHECK(p.reversed(3) == s - s * s * s);
}

TEST_CASE("binary form gcd examples") {
    const Field Q = qq();
    CHECK(bf_gcd(F(Q, {0, 0, 1}), F(Q, {0, 1, 0})) == F(Q, {0, 1}));      // gcd(x^2, xy) = x
    CHECK(bf_gcd(F(Q, {0, 1}), F(Q, {1, 0})).degree() == 0);            // gcd(x, y) = 1
    CHECK(bf_gcd(F(Q, {-1, 0, 1}), F(Q, {-1, 1})) == F(Q, {-1, 1}));    // gcd(x^2 - y^2, x - y) = x - y
    // gcd(0, 4x + 2y) = x + y/2, monic in the top x-power
    CHECK(bf_gcd(F(Q, {0, 0, 0}), F(Q, {2, 4})) == BinaryForm(Q, 1, {Scalar::parse(Q, "1/2"), Scalar::one(Q)}));
    try {
        (void)bf_gcd(BinaryForm(Q, 2), BinaryForm(Q, 1));
        FAIL("expected DegenerateInput");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateInput);
    }
}

TEST_CASE("random gcds divide both inputs") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Field field = trial % 2 ? qq() : fp();
        const BinaryForm common = random_form(field, static_cast<int>(rng.below(3)), rng);
        if (common.is_zero()) continue;
        const BinaryForm f = common * random_form(field, static_cast<int>(rng.below(4)), rng);
        const BinaryForm g = common * random_form(field, static_cast<int>(rng.below(4)), rng);
        if (f.is_zero() && g.is_zero()) continue;
        const BinaryForm h = bf_gcd(f, g);
        if (!f.is_zero()) CHECK(exact_div(f, h) * h == f);
        if (!g.is_zero()) CHECK(exact_div(g, h) * h == g);
        if (!f.is_zero() && !g.is_zero()) CHECK(h.degree() >= common.degree());
    }
}

TEST_CASE("discriminant examples") {
    const Field Q = qq();
    CHECK(bf_discriminant(F(Q, {2, 3, 1})) == Scalar(Q, 1L));   // x^2 + 3xy + 2y^2
    CHECK(bf_discriminant(F(Q, {0, 1, 0})) == Scalar(Q, 1L));   // xy
    CHECK(bf_discriminant(F(Q, {0, 0, 1, 0})).is_zero());       // x^2 y
    CHECK(bf_discriminant(F(Q, {1, 0, 1})) == Scalar(Q, -4L));  // x^2 + y^2
    CHECK_THROWS_AS(bf_discriminant(F(Q, {1, 1})), Error);
}

TEST_CASE("discriminant agrees with the quadratic and cubic closed forms") {
    Rng rng(5);
    const Field Q = qq();
    for (int trial = 0; trial < 200; ++trial) {
        const long a = rng.uniform(-6, 6), b = rng.uniform(-6, 6), c = rng.uniform(-6, 6), d = rng.uniform(-6, 6);
        if (a != 0 || b != 0 || c != 0)
            CHECK(bf_discriminant(F(Q, {c, b, a})) == Scalar(Q, oracle::quadratic_disc(a, b, c)));
        if (a != 0 || b != 0 || c != 0 || d != 0)
            CHECK(bf_discriminant(F(Q, {d, c, b, a})) == Scalar(Q, oracle::cubic_disc(a, b, c, d)));
    }
}

TEST_CASE("resultant and discriminant of split forms match root products") {
    Rng rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const Field field = trial % 2 ? qq() : fp();
        std::vector<long> ra, rb;
        for (auto i = 1 + rng.below(4); i > 0; --i) ra.push_back(rng.uniform(-5, 5));
        for (auto i = 1 + rng.below(4); i > 0; --i) rb.push_back(rng.uniform(-5, 5));
        const auto fa = oracle::from_roots(field, ra);
        const auto fb = oracle::from_roots(field, rb);
        const BinaryForm f(field, static_cast<int>(ra.size()), fa), g(field, static_cast<int>(rb.size()), fb);
        CHECK(bf_resultant(f, g) == oracle::root_resultant(field, ra, rb));
        if (ra.size() >= 2) CHECK(bf_discriminant(f) == oracle::root_discriminant(field, ra));
    }
}

TEST_CASE("discriminant vanishes exactly when the partials share a factor") {
    // Over F_p with p > 2 deg, disc f = 0 iff gcd(f_x, f_y) is nonconstant.
    Rng rng(21);
    int vanishing = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const Field P = fp();
        const int m = 2 + static_cast<int>(rng.below(4));
        BinaryForm f = random_form(P, m, rng);
        if (trial % 2 == 0) {
            const BinaryForm g = random_form(P, 1, rng);
            f = g * g * random_form(P, m - 2, rng);
        }
        if (f.is_zero()) continue;
        const bool disc_zero = bf_discriminant(f).is_zero();
        const BinaryForm fx = f.partial_x(), fy = f.partial_y();
        const bool shared = !(fx.is_zero() && fy.is_zero()) && bf_gcd(fx, fy).degree() > 0;
        CHECK(disc_zero == shared);
        vanishing += disc_zero;
    }
    CHECK(vanishing >= 50);
}

TEST_CASE("polynomial matrix determinants") {
    const Field Q = qq();
    CHECK(polymat_det(M(Q, {{{0, 1}, {0, 0}}, {{0, 0}, {1, 0}}})) == F(Q, {0, 1, 0}));  // diag(x, y) -> xy
    CHECK(polymat_det(M(Q, {{{0, 1}, {1, 0}}, {{0, 1}, {1, 0}}})).is_zero());
    CHECK(polymat_det(M(Q, {{{0, 1}, {1, 0}}, {{-1, 0}, {0, 1}}})) == F(Q, {1, 0, 1}));  // x^2 + y^2
    CHECK(polymat_det(M(Q, {{{0, 1}, {0, 0}}, {{0, 0}, {1, 0}}})).degree() == 2);
    CHECK_THROWS_AS(PolyMatrix(Q, 1, {1}, {F(Q, {1, 2, 3})}), Error);
}

TEST_CASE("rank examples") {
    const Field Q = qq();
    Matrix<Scalar> id(2, 2, Scalar::zero(Q));
    id(0, 0) = id(1, 1) = Scalar::one(Q);
    CHECK(rank(id) == 2);
    const Matrix<Scalar> zero(3, 4, Scalar::zero(Q));
    CHECK(rank(zero) == 0);
    CHECK(nullity(zero) == 4);
    Matrix<Scalar> prop(2, 2, Scalar::zero(Q));
    prop(0, 0) = Scalar(Q, 1L);
    prop(0, 1) = Scalar(Q, 2L);
    prop(1, 0) = Scalar(Q, 2L);
    prop(1, 1) = Scalar(Q, 4L);
    CHECK(rank(prop) == 1);
}

namespace {

Matrix<Scalar> random_matrix(const Field& field, std::size_t r, std::size_t c, Rng& rng, bool low_rank) {
    Matrix<Scalar> m(r, c, Scalar::zero(field));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar(field, rng);
    if (low_rank && r >= 2)
        for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * Scalar(field, 3L) - m(1, j);
    return m;
}

} // namespace

TEST_CASE("rank matches Gauss-Jordan and survives permutation and scaling") {
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const Field field = trial % 2 ? qq() : fp();
        const std::size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
        const Matrix<Scalar> m = random_matrix(field, r, c, rng, trial % 3 == 0);
        std::vector<std::vector<Scalar>> rows(r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) rows[i].push_back(m(i, j));
        const std::size_t expected = oracle::naive_rank(rows);
        REQUIRE(rank(m) == expected);

        std::vector<std::size_t> pr(r), pc(c);
        std::iota(pr.begin(), pr.end(), 0);
        std::iota(pc.begin(), pc.end(), 0);
        for (std::size_t i = r; i > 1; --i) std::swap(pr[i - 1], pr[rng.below(i)]);
        for (std::size_t j = c; j > 1; --j) std::swap(pc[j - 1], pc[rng.below(j)]);
        Matrix<Scalar> shuffled(r, c, Scalar::zero(field));
        for (std::size_t i = 0; i < r; ++i) {
            const Scalar s = random_nonzero_scalar(field, rng);
            for (std::size_t j = 0; j < c; ++j) shuffled(i, j) = m(pr[i], pc[j]) * s;
        }
        CHECK(rank(shuffled) == expected);
        CHECK(rank(m.transposed()) == expected);
    }
}

TEST_CASE("determinant matches cofactor expansion") {
    Rng rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const Field field = trial % 2 ? qq() : fp();
        const std::size_t n = 1 + rng.below(5);
        const Matrix<Scalar> m = random_matrix(field, n, n, rng, trial % 4 == 0);
        std::vector<std::vector<Scalar>> rows(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) rows[i].push_back(m(i, j));
        CHECK(determinant(m) == oracle::cofactor_det(rows));
    }
}

TEST_CASE("kernel basis vectors are killed and span the nullity") {
    Rng rng(6);
    for (int trial = 0; trial < 60; ++trial) {
        const Field field = trial % 2 ? qq() : fp();
        const Matrix<Scalar> m = random_matrix(field, 1 + rng.below(4), 1 + rng.below(6), rng, true);
        const auto basis = kernel_basis(m);
        CHECK(basis.size() == nullity(m));
        for (const auto& v : basis) {
            for (std::size_t i = 0; i < m.rows(); ++i) {
                Scalar acc = Scalar::zero(field);
                for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
                CHECK(acc.is_zero());
            }
        }
        if (!basis.empty()) CHECK(oracle::naive_rank(basis) == basis.size());
    }
}

TEST_CASE("seeded streams are reproducible") {
    Rng a(99), b(99);
    for (int i = 0; i < 50; ++i) CHECK(a.below(1000) == b.below(1000));
    CHECK(derive_seed(7, 0) != derive_seed(7, 1));
    CHECK(derive_seed(7, 3) == derive_seed(7, 3));
}
