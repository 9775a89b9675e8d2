#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quotcone/picard.hpp"
#include "quotcone/poly_matrix.hpp"
#include "quotcone/random.hpp"
#include "quotcone/splitting.hpp"

namespace quotcone {

/// n x k matrix with the given column degrees; each coefficient is zeroed
/// with probability zero_num / zero_den before drawing.
PolyMatrix random_poly_matrix(const Field& field, std::size_t n, const std::vector<int>& col_degs, Rng& rng,
                              std::uint64_t zero_num = 0, std::uint64_t zero_den = 1);

/// Random invertible constant n x n matrix.
Matrix<Scalar> random_invertible(const Field& field, std::size_t n, Rng& rng);

/// G * phi for a constant n x n matrix G.
PolyMatrix left_multiply(const Matrix<Scalar>& g, const PolyMatrix& phi);

/// Random automorphism of the source (+) O(-m_j): column scalings plus
/// col_j += h * col_i for deg h = m_j - m_i >= 0. Keeps the cokernel.
PolyMatrix twist_source(const PolyMatrix& phi, Rng& rng);

/// Locally free instance for the degenerate-scroll test with d = r.
struct Prop41Instance {
    QuotParams params;
    PolyMatrix phi;
    std::string mode; ///< "balanced", "composition" or "planted"
};

Prop41Instance sample_prop41_instance(std::uint64_t seed, const Field& field = Field::prime());

/// Matrix with a known splitting type of its cokernel.
struct PlantedSplitting {
    PolyMatrix phi;
    SplittingType expected;
};

PlantedSplitting sample_planted_splitting(std::uint64_t seed, const Field& field);

/// Generically injective random matrix for the degree-conservation fuzz.
PolyMatrix sample_conservation_matrix(std::uint64_t seed, const Field& field);

/// Outcome of a randomized suite. Each failure keeps the offending matrix.
struct SuiteResult {
    std::string name;
    std::size_t total = 0;
    std::size_t passed = 0;
    std::vector<std::string> failures; ///< human-readable reason per failure
    std::vector<PolyMatrix> counterexamples;

    bool ok() const { return total > 0 && passed == total; }
};

/// Whether the criterion determinant vanishes exactly when the quotient
/// admits a twisted cofunctional: criterion_det = 0 iff left_nullity(d/r - 1) > 0.
/// Requires r | d >= 1.
bool criterion_duality_holds(const PolyMatrix& phi);

/// scroll_degenerate iff unbalanced quotient, on `trials` seeded instances.
SuiteResult verify_prop41(std::size_t trials, std::uint64_t seed, const Field& field = Field::prime());

/// Planted splitting recovery; fields alternate between F_p and Q.
SuiteResult verify_planted_splitting(std::size_t trials, std::uint64_t seed, std::uint64_t prime = kDefaultPrime);

/// sum b_i + torsion = sum m_j; fields alternate between F_p and Q.
SuiteResult verify_conservation(std::size_t trials, std::uint64_t seed, std::uint64_t prime = kDefaultPrime);

/// Criterion duality on the prop41 instances and on the planted instances with r | d.
SuiteResult verify_criterion_duality(std::size_t prop41_trials, std::uint64_t prop41_seed, std::size_t planted_trials,
                                     std::uint64_t planted_seed, std::uint64_t prime = kDefaultPrime);

} // namespace quotcone
