#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quotcone/binary_form.hpp"
#include "quotcone/picard.hpp"
#include "quotcone/poly_matrix.hpp"

namespace quotcone {

/// Splitting data of a sheaf on P^1: degrees of the line-bundle summands
/// (sorted ascending) and the length of the torsion part.
struct SplittingType {
    std::vector<int> degrees;
    int torsion = 0;

    friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

/// Span of linearly independent constant vectors in the n-dimensional ambient
/// space (the cone over a projective subspace of P(V)).
class LinearSubspace {
public:
    /// ShapeError on length mismatch or a count outside [1, n-1];
    /// DegenerateInput if the vectors are dependent.
    LinearSubspace(const Field& field, std::size_t ambient, std::vector<std::vector<Scalar>> basis);

    const Field& field() const noexcept { return field_; }
    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<std::vector<Scalar>>& basis() const noexcept { return basis_; }

private:
    Field field_;
    std::size_t ambient_;
    std::vector<std::vector<Scalar>> basis_;
};

/// All size-k subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

/// gcd of all k x k minors of an n x k matrix (k <= n). Returns the constant
/// form 1 when k = 0. NotInjective if every maximal minor vanishes.
BinaryForm maximal_minor_gcd(const PolyMatrix& phi);

bool is_generically_injective(const PolyMatrix& phi);

/// dim { f in (forms of degree e)^n : f . phi = 0 }.
std::size_t left_nullity(const PolyMatrix& phi, int e);

/// dim { g in (forms of degree t)^n : psi . g = 0 }, psi given transposed.
std::size_t right_nullity(const PolyMatrix& psi_t, int t);

/// Splitting of coker(phi) = (+) O(b_i) (+) torsion, recovered from the
/// twist-nullity profile over e in [0, d]. Torsion comes from degree
/// conservation and is cross-checked against the gcd of maximal minors.
SplittingType quotient_splitting(const PolyMatrix& phi);

/// a_i with ker(psi) = (+) O(-a_i), from the right-nullity profile.
/// NotSurjective if psi is not generically surjective.
SplittingType kernel_splitting(const PolyMatrix& psi_t);

/// True iff the gcd of maximal minors is constant (coker phi has no torsion).
bool is_locally_free(const PolyMatrix& phi);

/// max - min >= 2. DegenerateInput on an empty degree list, or on a torsion
/// part unless vector_part_only is set.
bool is_unbalanced(const SplittingType& s, bool vector_part_only = false);

/// Some constant functional kills the image of phi (the scroll spans a hyperplane).
bool scroll_degenerate(const PolyMatrix& phi);

/// Determinant of the square system f . phi = 0 with f of degree d/r - 1.
/// ShapeError unless r = n - k >= 1 divides d = sum of column degrees.
Scalar criterion_det(const PolyMatrix& phi);
/// Same, checking that phi has the (n, k, d) shape of the given parameters.
Scalar criterion_det(const PolyMatrix& phi, const QuotParams& p);

/// For square phi (r = 0): whether det phi has d distinct roots on P^1.
bool torsion_support_distinct(const PolyMatrix& phi);

/// Whether the subbundle spanned by the given n x l columns (all of one
/// degree) meets the fixed subspace Lambda (dim n - 1 - l) over some point.
/// DirectrixUndefined if the columns are not injective on every fiber.
bool directrix_meets(const PolyMatrix& directrix_cols, const LinearSubspace& lambda);

/// The l1 columns of degree d1 of phi, for phi with the balanced column
/// degrees of p in the regime k does not divide d.
PolyMatrix directrix_columns(const PolyMatrix& phi, const QuotParams& p);

/// Everything `split` reports about one matrix. Optional flags are empty
/// when the test does not apply; `notes` says why.
struct SplitAnalysis {
    SplittingType splitting;
    bool locally_free = false;
    std::optional<bool> unbalanced;
    std::optional<bool> scroll_degenerate;
    std::optional<bool> support_distinct;
    std::optional<bool> directrix_meets;
    std::vector<std::string> notes;
};

/// NotInjective if phi is not generically injective.
SplitAnalysis analyze_split(const PolyMatrix& phi, const LinearSubspace* lambda = nullptr);

} // namespace quotcone
