#include <doctest.h>

#include "quotcone/chow.hpp"
#include "quotcone/class_solver.hpp"

using namespace quotcone;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InternalInconsistency;
}

} // namespace

TEST_CASE("solving for a class from curve pairings") {
    // (4,2,3): alpha on the first and on the second summand against D_unb.
    const auto unb = solve_class({{"a1", 4, 1, 2}, {"a2", 5, 1, 0}});
    CHECK(unb.d == -2);
    CHECK(unb.y == 10);
    CHECK(unb.integral() == DivisorClass{-2, 10});
    // (4,2,2): alpha ones kills D_unb, beta ones meets it in (d1 + d2) r.
    const auto dd = solve_class({{"alpha", 6, 2, 0}, {"beta", 2, 2, 4}});
    CHECK(dd.integral() == DivisorClass{-1, 3});
    // (2,0,2): alpha ones against D_deg plus the gamma row.
    const auto g = solve_class({{"alpha", 6, 2, 4}, {"gamma", std::nullopt, 0, 0}});
    CHECK(g.integral() == DivisorClass{0, 2});
    // Overdetermined and consistent.
    CHECK(solve_class({{"a", 1, 0, 3}, {"b", 0, 1, 4}, {"c", 1, 1, 7}}).integral() == DivisorClass{3, 4});
}

TEST_CASE("rational solutions") {
    const auto s = solve_class({{"a", 2, 0, 1}, {"b", 0, 1, 1}});
    CHECK(!s.is_integral());
    CHECK(s.d == mpq_class(1, 2));
    CHECK(kind_of([&] { s.integral(); }) == ErrorKind::Inconsistent);
}

TEST_CASE("solver errors") {
    CHECK(kind_of([] { solve_class({{"a", 1, 1, 0}}); }) == ErrorKind::Underdetermined);
    CHECK(kind_of([] { solve_class({{"a", 1, 1, 0}, {"b", 2, 2, 0}}); }) == ErrorKind::Underdetermined);
    CHECK(kind_of([] { solve_class({{"a", 1, 0, 0}, {"b", 0, 1, 0}, {"c", 1, 1, 1}}); }) == ErrorKind::Inconsistent);
    CHECK(kind_of([] { solve_class({{"a", 1, 1, 0}, {"g", std::nullopt, 1, 0}}); }) == ErrorKind::DegenerateInput);
}

TEST_CASE("kernel rays") {
    CHECK(kernel_ray({{"alpha", 4, 2, 0}}) == DivisorClass{-1, 2});
    CHECK(kernel_ray({{"alpha", 4, 2, 0}, {"twice", 8, 4, 0}}) == DivisorClass{-1, 2});
    CHECK(kind_of([] { kernel_ray({{"a", 1, 0, 0}, {"b", 0, 1, 0}}); }) == ErrorKind::Inconsistent);
    CHECK(kind_of([] { kernel_ray({{"a", 1, 0, 1}}); }) == ErrorKind::Inconsistent);
}

TEST_CASE("solver path reproduces the closed-form cone") {
    {
        const auto rep = theorem1_report(make_params(4, 2, 2));
        CHECK(rep.agrees);
        CHECK(rep.unb.ray == DivisorClass{-1, 3});
        CHECK(rep.deg.ray == DivisorClass{1, -1});
        CHECK(rep.unb.mult == 1);
        CHECK(rep.deg.mult == 1);
    }
    {
        const auto rep = theorem1_report(make_params(4, 2, 3));
        CHECK(rep.agrees);
        CHECK(rep.unb.ray == DivisorClass{-1, 5});
        CHECK(rep.unb.mult == 2);
    }
    {
        const auto rep = theorem1_report(make_params(3, 1, 2));
        CHECK(rep.agrees);
        CHECK(rep.r1_class_is_D);
        CHECK(rep.deg.ray == DivisorClass{1, 0});
    }
    {
        const auto rep = theorem1_report(make_params(2, 0, 2));
        CHECK(rep.agrees);
        CHECK(rep.deg.ray == DivisorClass{0, 1});
        CHECK(rep.deg.mult == 2);
        CHECK(!rep.unb.mult);
    }
}

TEST_CASE("spanning preconditions") {
    const auto s = spanning_report(make_params(4, 2, 3));
    CHECK(s.ok);
    CHECK(s.alpha_unb == 0);
    CHECK(s.alpha_deg > 0);
    CHECK(s.beta_deg == 0);
    CHECK(s.beta_unb > 0);
    CHECK(spanning_consistency(make_params(3, 0, 3)));
}

TEST_CASE("parameter grid") {
    const auto grid = theorem1_grid(2, 8, 1, 10);
    CHECK(grid.size() == 183);
    for (const auto& g : grid) {
        INFO(g.params.n << "," << g.params.r << "," << g.params.d);
        CHECK(g.report.agrees);
        CHECK(g.report.nef_in_eff);
        CHECK(g.spanning);
        if (!g.params.k_divides_d()) CHECK(g.report.unb.mult == g.params.d1 * (*g.params.l1 + 1));
    }
}
