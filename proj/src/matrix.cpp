#include "quotcone/matrix.hpp"

#include <numeric>

namespace quotcone {

namespace {

Field field_of(const Matrix<Scalar>& m) {
    if (m.rows() == 0 || m.cols() == 0) return Field::rational();
    return m(0, 0).field();
}

std::vector<std::uint64_t> residues(const Matrix<Scalar>& m, const Field& f) {
    std::vector<std::uint64_t> out;
    out.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            require_same_field(f, m(i, j).field());
            out.push_back(m(i, j).residue());
        }
    return out;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    std::uint64_t result = 1, e = p - 2;
    while (e) {
        if (e & 1) result = result * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return result;
}

/// Row-echelon reduction mod p in place; returns (rank, determinant sign/product).
std::pair<std::size_t, std::uint64_t> eliminate_mod(std::vector<std::uint64_t>& a, std::size_t rows,
                                                    std::size_t cols, std::uint64_t p) {
    std::size_t r = 0;
    std::uint64_t det = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) {
            det = 0;
            continue;
        }
        if (piv != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
            det = (p - det) % p;
        }
        const std::uint64_t pv = a[r * cols + c];
        det = det * pv % p;
        const std::uint64_t inv = inv_mod(pv, p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const std::uint64_t factor = a[i * cols + c] * inv % p;
            if (factor == 0) continue;
            for (std::size_t j = c; j < cols; ++j)
                a[i * cols + j] = (a[i * cols + j] + (p - factor) * a[r * cols + j]) % p;
        }
        ++r;
    }
    if (r < rows) det = 0;
    return {r, det};
}

/// Integer matrix whose row i is row i of m times scale[i].
Matrix<mpz_class> integer_rows(const Matrix<Scalar>& m, std::vector<mpz_class>& scale) {
    Matrix<mpz_class> out(m.rows(), m.cols(), mpz_class(0));
    scale.assign(m.rows(), mpz_class(1));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            require_same_field(Field::rational(), m(i, j).field());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).rational().get_den_mpz_t());
        }
        scale[i] = l;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const mpq_class& q = m(i, j).rational();
            out(i, j) = q.get_num() * (l / q.get_den());
        }
    }
    return out;
}

/// Fraction-free elimination; returns the rank. On a square full-rank input
/// `det` holds the determinant of the (row-swapped) input with sign fixed.
std::size_t bareiss_rank(Matrix<mpz_class> a, mpz_class* det) {
    const std::size_t rows = a.rows(), cols = a.cols();
    mpz_class prev = 1;
    std::size_t r = 0;
    bool negate = false;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && sgn(a(piv, c)) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            a.swap_rows(piv, r);
            negate = !negate;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class v = a(r, c) * a(i, j) - a(i, c) * a(r, j);
                mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, c) = 0;
        }
        prev = a(r, c);
        ++r;
    }
    if (det) *det = (r == rows && rows == cols) ? (negate ? mpz_class(-prev) : prev) : mpz_class(0);
    return r;
}

} // namespace

std::size_t rank(const Matrix<Scalar>& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    const Field f = field_of(m);
    if (f.is_prime()) {
        auto a = residues(m, f);
        return eliminate_mod(a, m.rows(), m.cols(), f.modulus()).first;
    }
    std::vector<mpz_class> scale;
    return bareiss_rank(integer_rows(m, scale), nullptr);
}

Scalar determinant(const Matrix<Scalar>& m) {
    if (!m.is_square() || m.rows() == 0) fail(ErrorKind::ShapeError, "determinant needs a non-empty square matrix");
    const Field f = field_of(m);
    if (f.is_prime()) {
        auto a = residues(m, f);
        const auto det = eliminate_mod(a, m.rows(), m.cols(), f.modulus()).second;
        return Scalar(f, mpz_class(static_cast<unsigned long>(det)));
    }
    std::vector<mpz_class> scale;
    mpz_class det;
    bareiss_rank(integer_rows(m, scale), &det);
    mpq_class q(det);
    for (const auto& s : scale) q /= s;
    return Scalar(f, q);
}

std::vector<std::vector<Scalar>> kernel_basis(const Matrix<Scalar>& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Scalar>> basis;
    if (cols == 0) return basis;
    const Field f = field_of(m);
    Matrix<Scalar> a = m;
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        a.swap_rows(piv, r);
        const Scalar inv = a(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            const Scalar factor = a(i, c);
            for (std::size_t j = c; j < cols; ++j) a(i, j) -= factor * a(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(cols, Scalar::zero(f));
        v[free] = Scalar::one(f);
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace quotcone
