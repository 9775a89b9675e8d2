#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "quotcone/picard.hpp"

namespace quotcone {

/// One test curve: its pairings with D and Y and with the unknown divisor.
/// An empty dotD is an unknown nonzero pairing (the curve gamma); such a row
/// must have dotY = dotX = 0 and then forces e1 = 0.
struct CurveData {
    std::string label;
    std::optional<std::int64_t> dotD;
    std::int64_t dotY = 0;
    std::int64_t dotX = 0;
};

/// e1 D + e2 Y with rational coefficients.
struct RationalClass {
    mpq_class d;
    mpq_class y;

    bool is_integral() const;
    /// Inconsistent if a coefficient is not an integer.
    DivisorClass integral() const;
};

/// Unique solution of e1 dotD + e2 dotY = dotX over all rows.
/// Underdetermined if the rows have rank < 2, Inconsistent if overdetermined
/// rows disagree, DegenerateInput for an unusable unknown-pairing row.
RationalClass solve_class(const std::vector<CurveData>& rows);

/// Primitive generator of the classes killed by every row (rank exactly 1,
/// all dotX = 0), up to sign. Underdetermined / Inconsistent otherwise.
DivisorClass kernel_ray(const std::vector<CurveData>& rows);

/// Solver-path result for one generator of the effective cone.
struct SolvedGenerator {
    std::vector<CurveData> rows;
    DivisorClass ray;                      ///< primitive
    std::optional<std::int64_t> mult;      ///< empty when only the ray is determined
    bool ray_agrees = false;
    bool mult_agrees = false;
};

struct Theorem1Report {
    QuotParams params;
    EffectiveCone formula;
    SolvedGenerator unb;
    SolvedGenerator deg;
    bool nef_in_eff = false;
    bool r1_class_is_D = true; ///< r = 1 only: D_deg = D
    bool agrees = false;
};

/// Builds the curve rows from the closed-form pairings, solves for D_unb and
/// D_deg and compares with effective_cone. Errors of effective_cone propagate.
Theorem1Report theorem1_report(const QuotParams& p);

struct SpanningReport {
    std::vector<std::int64_t> alpha_vec;
    std::int64_t alpha_unb = 0;
    std::int64_t alpha_deg = 0;
    std::vector<std::int64_t> beta_vec; ///< empty when r = 0
    std::int64_t beta_deg = 0;
    std::int64_t beta_unb = 0;
    std::int64_t gamma_deg = 0;         ///< r = 0 only
    bool rays_independent = false;
    bool ok = false;
};

/// Numerical preconditions of the spanning lemma: alpha avoids D_unb and
/// meets D_deg positively; beta (or gamma when r = 0) avoids D_deg and, for
/// beta, meets D_unb positively. gamma . D_unb is not computable, so for
/// r = 0 the complement is replaced by independence of the two rays.
SpanningReport spanning_report(const QuotParams& p);
bool spanning_consistency(const QuotParams& p);

struct GridPoint {
    QuotParams params;
    Theorem1Report report;
    bool spanning = false;
};

/// Every (n, r, d) with n in [n_lo, n_hi], 0 <= r <= n - 2, d in [d_lo, d_hi],
/// skipping UnsupportedRegime and the empty D_deg of (r, d) = (0, 1).
std::vector<GridPoint> theorem1_grid(int n_lo, int n_hi, int d_lo, int d_hi);

} // namespace quotcone
