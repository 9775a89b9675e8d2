#include "quotcone/chow.hpp"

#include <string>

namespace quotcone {

SurfaceClass chern_total(const std::vector<LineBundleOnS>& bundles) {
    SurfaceClass c = SurfaceClass::one();
    for (const auto& L : bundles) c = c * SurfaceClass{1, L.base_deg, L.fiber_twist, 0};
    return c;
}

SurfaceClass whitney_quotient(const SurfaceClass& cA) {
    if (cA.deg0 != 1) fail(ErrorKind::NotUnital, "total Chern class must start with 1");
    // (af + bh)^2 = 2ab fh
    return {1, -cA.a, -cA.b, 2 * cA.a * cA.b - cA.c};
}

namespace {

void check_nonnegative(const std::vector<std::int64_t>& v) {
    for (auto x : v)
        if (x < 0) fail(ErrorKind::DegenerateInput, "test-curve degrees must be nonnegative");
}

} // namespace

CurvePairing alpha_DY(const QuotParams& p, const std::vector<std::int64_t>& a) {
    if (a.size() != static_cast<std::size_t>(p.k))
        fail(ErrorKind::ShapeError, "alpha needs " + std::to_string(p.k) + " degrees");
    check_nonnegative(a);
    CurvePairing closed;
    for (std::size_t i = 0; i < a.size(); ++i) {
        closed.dotY += a[i];
        closed.dotD += a[i] * (p.d + p.m[i]);
    }
    // A_S = (+) A_i^v(-m_i); D and Y are read off c(B) = c(A_S)^{-1}.
    std::vector<LineBundleOnS> summands;
    for (std::size_t i = 0; i < a.size(); ++i) summands.push_back({-a[i], -p.m[i]});
    const SurfaceClass cB = whitney_quotient(chern_total(summands));
    // h . (a f + b h) = a
    const CurvePairing chern{cB.a, cB.c};
    if (chern.dotY != closed.dotY || chern.dotD != closed.dotD)
        fail(ErrorKind::InternalInconsistency, "alpha intersection numbers disagree between routes");
    return closed;
}

CurvePairing beta_DY(const QuotParams& p, const std::vector<std::int64_t>& b) {
    if (p.r == 0) fail(ErrorKind::UnsupportedRegime, "the curve beta needs r > 0");
    if (b.size() != static_cast<std::size_t>(p.r))
        fail(ErrorKind::ShapeError, "beta needs " + std::to_string(p.r) + " degrees");
    check_nonnegative(b);
    CurvePairing closed;
    for (std::size_t i = 0; i < b.size(); ++i) {
        closed.dotY += b[i];
        closed.dotD += b[i] * (p.d - p.nvec[i]);
    }
    // B_S = (+) B_i(n_i) is split, so c(B_S) is the Whitney product directly.
    std::vector<LineBundleOnS> summands;
    for (std::size_t i = 0; i < b.size(); ++i) summands.push_back({b[i], p.nvec[i]});
    const SurfaceClass cB = chern_total(summands);
    const CurvePairing chern{cB.a, cB.c};
    if (chern.dotY != closed.dotY || chern.dotD != closed.dotD)
        fail(ErrorKind::InternalInconsistency, "beta intersection numbers disagree between routes");
    return closed;
}

} // namespace quotcone
