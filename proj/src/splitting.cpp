#include "quotcone/splitting.hpp"

#include <algorithm>
#include <string>

namespace quotcone {

LinearSubspace::LinearSubspace(const Field& field, std::size_t ambient, std::vector<std::vector<Scalar>> basis)
    : field_(field), ambient_(ambient), basis_(std::move(basis)) {
    if (basis_.empty() || basis_.size() >= ambient_)
        fail(ErrorKind::ShapeError, "subspace dimension must lie in [1, n-1]");
    Matrix<Scalar> m(basis_.size(), ambient_, Scalar::zero(field_));
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i].size() != ambient_) fail(ErrorKind::ShapeError, "subspace vector has the wrong length");
        for (std::size_t j = 0; j < ambient_; ++j) {
            require_same_field(field_, basis_[i][j].field());
            m(i, j) = basis_[i][j];
        }
    }
    if (rank(m) != basis_.size()) fail(ErrorKind::DegenerateInput, "subspace vectors are dependent");
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

namespace {

std::vector<std::size_t> iota_vec(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

/// gcd of the minors of size cols() over the row subsets; nullopt if all vanish.
std::optional<BinaryForm> minor_gcd(const PolyMatrix& m) {
    const std::size_t k = m.cols();
    if (k == 0) return BinaryForm(m.field(), 0, {Scalar::one(m.field())});
    if (k > m.rows()) return std::nullopt;
    const auto all_cols = iota_vec(k);
    std::optional<BinaryForm> g;
    for (const auto& rows : combinations(m.rows(), k)) {
        BinaryForm det = polymat_det(m.select(rows, all_cols));
        if (det.is_zero()) continue;
        g = g ? bf_gcd(*g, det) : bf_gcd(det, det);
        if (g->degree() == 0) break;
    }
    return g;
}

/// Multiset of degrees from a profile nu(0..emax) with nu(e) = sum max(0, e - b_i + 1).
std::vector<int> degrees_from_profile(const std::vector<std::size_t>& nu, std::size_t expected_count) {
    std::vector<long> delta(nu.size());
    for (std::size_t e = 0; e < nu.size(); ++e)
        delta[e] = static_cast<long>(nu[e]) - (e == 0 ? 0L : static_cast<long>(nu[e - 1]));
    std::vector<int> degrees;
    long prev = 0;
    for (std::size_t e = 0; e < delta.size(); ++e) {
        if (delta[e] < prev)
            fail(ErrorKind::InternalInconsistency, "twist-nullity differences are not monotone");
        for (long c = prev; c < delta[e]; ++c) degrees.push_back(static_cast<int>(e));
        prev = delta[e];
    }
    if (degrees.size() != expected_count)
        fail(ErrorKind::InternalInconsistency, "profile recovered " + std::to_string(degrees.size()) +
                                                   " summands, expected " + std::to_string(expected_count));
    return degrees;
}

} // namespace

BinaryForm maximal_minor_gcd(const PolyMatrix& phi) {
    auto g = minor_gcd(phi);
    if (!g) fail(ErrorKind::NotInjective, "every maximal minor vanishes");
    return *g;
}

bool is_generically_injective(const PolyMatrix& phi) { return minor_gcd(phi).has_value(); }

std::size_t left_nullity(const PolyMatrix& phi, int e) { return nullity(left_system(phi, e)); }

std::size_t right_nullity(const PolyMatrix& psi_t, int t) { return nullity(right_system(psi_t, t)); }

SplittingType quotient_splitting(const PolyMatrix& phi) {
    const BinaryForm g = maximal_minor_gcd(phi);
    const int d = phi.total_degree();
    const std::size_t r = phi.rows() - phi.cols();
    std::vector<std::size_t> nu;
    for (int e = 0; e <= d; ++e) nu.push_back(left_nullity(phi, e));
    SplittingType s;
    s.degrees = degrees_from_profile(nu, r);
    int sum = 0;
    for (int b : s.degrees) sum += b;
    s.torsion = d - sum;
    if (s.torsion < 0 || s.torsion != g.degree())
        fail(ErrorKind::InternalInconsistency, "torsion by degree count (" + std::to_string(s.torsion) +
                                                   ") differs from the minor gcd degree (" +
                                                   std::to_string(g.degree()) + ")");
    return s;
}

SplittingType kernel_splitting(const PolyMatrix& psi_t) {
    const std::size_t n = psi_t.rows(), r = psi_t.cols();
    if (r > n) fail(ErrorKind::NotSurjective, "more target summands than source rank");
    auto g = minor_gcd(psi_t);
    if (!g) fail(ErrorKind::NotSurjective, "every maximal minor of psi vanishes");
    const int d = psi_t.total_degree();
    std::vector<std::size_t> nu;
    for (int t = 0; t <= d; ++t) nu.push_back(right_nullity(psi_t, t));
    SplittingType s;
    s.degrees = degrees_from_profile(nu, n - r);
    int sum = 0;
    for (int a : s.degrees) sum += a;
    if (sum != d - g->degree())
        fail(ErrorKind::InternalInconsistency, "kernel degree does not match the image degree");
    return s;
}

bool is_locally_free(const PolyMatrix& phi) { return maximal_minor_gcd(phi).degree() == 0; }

bool is_unbalanced(const SplittingType& s, bool vector_part_only) {
    if (s.degrees.empty()) fail(ErrorKind::DegenerateInput, "no line-bundle summands");
    if (s.torsion != 0 && !vector_part_only)
        fail(ErrorKind::DegenerateInput, "balancedness of a sheaf with torsion needs vector_part_only");
    const auto [lo, hi] = std::minmax_element(s.degrees.begin(), s.degrees.end());
    return *hi - *lo >= 2;
}

bool scroll_degenerate(const PolyMatrix& phi) {
    if (!is_generically_injective(phi)) fail(ErrorKind::NotInjective, "phi is not generically injective");
    return left_nullity(phi, 0) > 0;
}

Scalar criterion_det(const PolyMatrix& phi) {
    if (phi.cols() >= phi.rows()) fail(ErrorKind::ShapeError, "criterion matrix needs r >= 1");
    const int r = static_cast<int>(phi.rows() - phi.cols());
    const int d = phi.total_degree();
    if (d < 1 || d % r != 0) fail(ErrorKind::ShapeError, "criterion matrix is square only when r divides d >= 1");
    return determinant(left_system(phi, d / r - 1));
}

Scalar criterion_det(const PolyMatrix& phi, const QuotParams& p) {
    if (phi.rows() != static_cast<std::size_t>(p.n) || phi.cols() != static_cast<std::size_t>(p.k) ||
        phi.total_degree() != p.d)
        fail(ErrorKind::ShapeError, "matrix shape does not match (n, r, d)");
    return criterion_det(phi);
}

bool torsion_support_distinct(const PolyMatrix& phi) {
    if (phi.rows() != phi.cols()) fail(ErrorKind::ShapeError, "support test needs a square matrix");
    if (phi.total_degree() < 2) fail(ErrorKind::DegenerateInput, "support test needs d >= 2");
    const BinaryForm det = polymat_det(phi);
    if (det.is_zero()) fail(ErrorKind::NotInjective, "det phi vanishes identically");
    return !bf_discriminant(det).is_zero();
}

bool directrix_meets(const PolyMatrix& cols, const LinearSubspace& lambda) {
    require_same_field(cols.field(), lambda.field());
    const std::size_t n = cols.rows(), l = cols.cols();
    if (lambda.ambient_dim() != n) fail(ErrorKind::ShapeError, "subspace lives in the wrong ambient space");
    if (l == 0 || l >= n) fail(ErrorKind::ShapeError, "directrix needs between 1 and n-1 columns");
    if (lambda.dim() + l + 1 != n)
        fail(ErrorKind::ShapeError, "subspace must have linear dimension n - 1 - l = " + std::to_string(n - 1 - l));
    for (std::size_t j = 1; j < l; ++j)
        if (cols.col_degree(j) != cols.col_degree(0)) fail(ErrorKind::ShapeError, "directrix columns differ in degree");
    auto fiber = minor_gcd(cols);
    if (!fiber || fiber->degree() != 0)
        fail(ErrorKind::DirectrixUndefined, "directrix columns drop rank over some point");
    std::vector<int> degs = cols.col_degs();
    degs.resize(n - 1, 0);
    PolyMatrix joined(cols.field(), n, degs);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < l; ++j) joined.set(i, j, cols.entry(i, j));
        for (std::size_t v = 0; v < lambda.dim(); ++v)
            joined.set(i, l + v, BinaryForm(cols.field(), 0, {lambda.basis()[v][i]}));
    }
    auto g = minor_gcd(joined);
    return !g || g->degree() > 0;
}

PolyMatrix directrix_columns(const PolyMatrix& phi, const QuotParams& p) {
    if (p.k_divides_d()) fail(ErrorKind::UnsupportedRegime, "directrix is defined only when k does not divide d");
    if (phi.col_degs() != p.m) fail(ErrorKind::DirectrixUndefined, "column degrees are not the balanced partition");
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < phi.cols(); ++j)
        if (phi.col_degree(j) == p.d1) cols.push_back(j);
    std::vector<std::size_t> rows(phi.rows());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    return phi.select(rows, cols);
}

SplitAnalysis analyze_split(const PolyMatrix& phi, const LinearSubspace* lambda) {
    SplitAnalysis a;
    a.splitting = quotient_splitting(phi);
    a.locally_free = a.splitting.torsion == 0 && phi.rows() > phi.cols();
    const std::size_t r = phi.rows() - phi.cols();
    if (r > 0) {
        a.unbalanced = is_unbalanced(a.splitting, true);
        if (a.splitting.torsion > 0) a.notes.push_back("unbalanced refers to the vector-bundle part");
    }
    a.scroll_degenerate = scroll_degenerate(phi);
    if (r == 0) {
        if (phi.total_degree() >= 2)
            a.support_distinct = torsion_support_distinct(phi);
        else
            a.notes.push_back("support test needs d >= 2");
    }
    if (lambda) {
        if (phi.cols() < 2 || phi.total_degree() < 1) {
            a.notes.push_back("directrix needs k >= 2 and d >= 1");
        } else {
            const QuotParams p = make_params(static_cast<int>(phi.rows()), static_cast<int>(r), phi.total_degree());
            if (p.k_divides_d() || p.d1 == 0) {
                a.notes.push_back("directrix test applies only when k does not divide d and d >= k");
            } else {
                try {
                    a.directrix_meets = directrix_meets(directrix_columns(phi, p), *lambda);
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::DirectrixUndefined) throw;
                    a.notes.push_back(std::string("directrix undefined: ") + e.what());
                }
            }
        }
    }
    return a;
}

} // namespace quotcone
