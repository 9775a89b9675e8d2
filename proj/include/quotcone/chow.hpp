#pragma once

#include <cstdint>
#include <vector>

#include "quotcone/picard.hpp"

namespace quotcone {

/// Truncated Chow class on S = C x P^1: deg0 + (a f + b h) + c (f h), with
/// f^2 = h^2 = 0 and f h the class of a point.
struct SurfaceClass {
    std::int64_t deg0 = 0;
    std::int64_t a = 0; ///< coefficient of f
    std::int64_t b = 0; ///< coefficient of h
    std::int64_t c = 0; ///< coefficient of f h

    static SurfaceClass one() { return {1, 0, 0, 0}; }

    friend SurfaceClass operator*(const SurfaceClass& u, const SurfaceClass& v) {
        return {u.deg0 * v.deg0, u.deg0 * v.a + v.deg0 * u.a, u.deg0 * v.b + v.deg0 * u.b,
                u.deg0 * v.c + v.deg0 * u.c + u.a * v.b + u.b * v.a};
    }
    friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;
};

/// pi_1^* L (m) with deg L = base_deg.
struct LineBundleOnS {
    std::int64_t base_deg = 0;
    std::int64_t fiber_twist = 0;
};

/// Whitney product of (1 + base_deg f + fiber_twist h), truncated at degree 2.
SurfaceClass chern_total(const std::vector<LineBundleOnS>& bundles);

/// Total Chern class of B in 0 -> A -> trivial -> B -> 0 from c(A):
/// c1(B) = -c1(A), c2(B) = c1(A)^2 - c2(A). NotUnital unless deg0 = 1.
SurfaceClass whitney_quotient(const SurfaceClass& cA);

struct CurvePairing {
    std::int64_t dotY = 0;
    std::int64_t dotD = 0;
};

/// alpha . Y and alpha . D for the test curve alpha with degree vector a
/// (length k). Computed in closed form and through the Chern calculus; the
/// two must agree (InternalInconsistency otherwise).
CurvePairing alpha_DY(const QuotParams& p, const std::vector<std::int64_t>& a);

/// beta . Y and beta . D for the test curve beta with degree vector b
/// (length r). UnsupportedRegime for r = 0.
CurvePairing beta_DY(const QuotParams& p, const std::vector<std::int64_t>& b);

} // namespace quotcone
