#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quotcone/picard.hpp"
#include "quotcone/poly_matrix.hpp"
#include "quotcone/uni_poly.hpp"

namespace quotcone {

using FamilyMatrix = BasicPolyMatrix<ParamPoly>;

enum class CurveKind { Alpha, Beta };

/// One-parameter family over the line C = P^1 with coordinates (s0 : s1),
/// stored in the affine chart s = s0 / s1. Every coefficient in column j of
/// `entries` is a binary form of degree bidegrees[j] in (s0, s1).
///   alpha: entries is phi, n x k, column j of x,y-degree m_j, s-degree a_j.
///   beta:  entries is psi transposed, n x r, column i of x,y-degree n_i,
///          s-degree b_i (psi itself is r x n).
struct CurveFamily {
    CurveKind kind = CurveKind::Alpha;
    QuotParams params;
    std::vector<std::int64_t> degree_vec;
    FamilyMatrix entries;
    std::uint64_t seed = 0;

    /// Shape of the presented map: (n, k) for alpha, (r, n) for beta.
    std::pair<std::size_t, std::size_t> shape() const;
    /// The member over s0/s1 = s.
    PolyMatrix specialize(const Scalar& s) const;
    /// The same family in the chart u = s1 / s0 around s = infinity.
    FamilyMatrix at_infinity() const;
};

/// GenericityFailure if no sample in the retry budget is generically
/// injective (alpha) / surjective (beta) at a random specialization.
CurveFamily sample_alpha_family(const QuotParams& p, const std::vector<std::int64_t>& a, std::uint64_t seed,
                                const Field& field = Field::prime());
CurveFamily sample_beta_family(const QuotParams& p, const std::vector<std::int64_t>& b, std::uint64_t seed,
                               const Field& field = Field::prime());

struct TrialReport {
    std::string kind;
    QuotParams params;
    std::vector<std::int64_t> vec;
    std::uint64_t seed = 0;
    std::int64_t measured = -1; ///< -1 when degenerate
    std::int64_t predicted = 0;
    bool agreed = false;
    bool degenerate = false;
};

/// Number of roots on P^1, with multiplicity, of a homogeneous polynomial
/// given by its two affine charts. nullopt when it vanishes identically.
std::optional<std::int64_t> projective_root_count(const ParamPoly& affine, const ParamPoly& at_infinity);

/// alpha . D_deg: degree in s of the criterion determinant (r | d), or of the
/// discriminant of det phi (r = 0, d >= 2). UnsupportedRegime otherwise.
TrialReport measure_alpha_Ddeg(const CurveFamily& fam);

/// beta . D_unb for k | d: degree in s of the determinant of the square
/// system psi . g = 0, g of degree d1 - 1. UnsupportedRegime otherwise.
TrialReport measure_beta_Dunb(const CurveFamily& fam);

enum class Pairing { AlphaUnb, BetaUnb, AlphaDeg, BetaDeg };

std::string_view to_string(Pairing which);

/// Closed-form intersection numbers of the test curves with D_unb and D_deg.
/// nullopt where no formula is available (beta . D_unb for k not dividing d,
/// alpha . D_deg for r > 0 not dividing d, beta anything for r = 0).
std::optional<std::int64_t> closed_form_prop42(const QuotParams& p, Pairing which, const std::vector<std::int64_t>& vec);

/// Samples and measures one pairing (AlphaDeg or BetaUnb) over seeded trials;
/// trial i uses derive_seed(master_seed, i).
std::vector<TrialReport> run_trials(Pairing which, const QuotParams& p, const std::vector<std::int64_t>& vec,
                                    std::size_t trials, std::uint64_t master_seed, const Field& field = Field::prime());

struct TrialTally {
    std::size_t total = 0;
    std::size_t generic = 0;
    std::size_t exact = 0; ///< generic trials with measured == predicted

    /// All generic trials exact and at least min_generic of them.
    bool passed(std::size_t min_generic) const { return exact == generic && generic >= min_generic; }
};

TrialTally tally(const std::vector<TrialReport>& reports);

} // namespace quotcone
