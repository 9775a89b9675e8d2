#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "quotcone/binary_form.hpp"
#include "quotcone/matrix.hpp"

namespace quotcone {

/// n x k matrix of binary forms, column j homogeneous of degree colDegs[j].
/// Presents a map  (+)_j O(-m_j) -> O^n  on P^1 (the phi layout). A map
/// psi: O^n -> (+)_i O(n_i) is stored as its transpose in the same layout.
template <class R>
class BasicPolyMatrix {
public:
    /// All-zero matrix.
    BasicPolyMatrix(const Field& field, std::size_t rows, std::vector<int> col_degs)
        : field_(field), rows_(rows), col_degs_(std::move(col_degs)) {
        for (int m : col_degs_)
            if (m < 0) fail(ErrorKind::ShapeError, "negative column degree");
        entries_.reserve(rows_ * col_degs_.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (int m : col_degs_) entries_.emplace_back(field_, m);
    }

    /// Row-major entries; entry (i, j) must have degree col_degs[j].
    BasicPolyMatrix(const Field& field, std::size_t rows, std::vector<int> col_degs,
                    std::vector<BasicBinaryForm<R>> entries)
        : field_(field), rows_(rows), col_degs_(std::move(col_degs)), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * col_degs_.size()) fail(ErrorKind::ShapeError, "entry count does not match shape");
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols(); ++j) check_entry(j, entry(i, j));
    }

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return col_degs_.size(); }
    const std::vector<int>& col_degs() const noexcept { return col_degs_; }
    int col_degree(std::size_t j) const { return col_degs_.at(j); }
    /// Sum of the column degrees (the degree d of the cokernel).
    int total_degree() const { return std::accumulate(col_degs_.begin(), col_degs_.end(), 0); }

    const BasicBinaryForm<R>& entry(std::size_t i, std::size_t j) const { return entries_.at(i * cols() + j); }
    void set(std::size_t i, std::size_t j, BasicBinaryForm<R> form) {
        check_entry(j, form);
        entries_.at(i * cols() + j) = std::move(form);
    }
    const std::vector<BasicBinaryForm<R>>& entries() const noexcept { return entries_; }

    BasicPolyMatrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
        std::vector<int> degs;
        for (auto j : cols) degs.push_back(col_degree(j));
        BasicPolyMatrix out(field_, rows.size(), std::move(degs));
        for (std::size_t a = 0; a < rows.size(); ++a)
            for (std::size_t b = 0; b < cols.size(); ++b) out.set(a, b, entry(rows[a], cols[b]));
        return out;
    }

    Matrix<BasicBinaryForm<R>> as_matrix() const {
        Matrix<BasicBinaryForm<R>> m(rows_, cols(), BasicBinaryForm<R>(field_, 0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols(); ++j) m(i, j) = entry(i, j);
        return m;
    }

    friend bool operator==(const BasicPolyMatrix&, const BasicPolyMatrix&) = default;

private:
    void check_entry(std::size_t j, const BasicBinaryForm<R>& form) const {
        require_same_field(field_, form.field());
        if (form.degree() != col_degs_.at(j))
            fail(ErrorKind::ShapeError, "entry in column " + std::to_string(j) + " has degree " +
                                            std::to_string(form.degree()) + ", expected " +
                                            std::to_string(col_degs_.at(j)));
    }

    Field field_;
    std::size_t rows_;
    std::vector<int> col_degs_;
    std::vector<BasicBinaryForm<R>> entries_;
};

using PolyMatrix = BasicPolyMatrix<Scalar>;

/// Determinant of a square matrix of forms: a form of degree sum(colDegs),
/// possibly the zero form.
template <class R>
BasicBinaryForm<R> polymat_det(const BasicPolyMatrix<R>& m) {
    if (m.rows() != m.cols() || m.rows() == 0) fail(ErrorKind::ShapeError, "polymat_det needs a square matrix");
    auto det = bareiss_determinant(m.as_matrix());
    if (!det) return BasicBinaryForm<R>(m.field(), m.total_degree());
    if (det->degree() != m.total_degree()) fail(ErrorKind::InternalInconsistency, "determinant degree drifted");
    return *det;
}

/// Coefficient matrix of the linear system f . phi = 0 in the unknowns
/// f_{i,t}, f_i a form of degree e: one column per unknown (i, t), one row
/// per equation (j, t) with t in [0, m_j + e], entry s_{ij, t - t2}.
template <class R>
Matrix<R> left_system(const BasicPolyMatrix<R>& phi, int e) {
    if (e < 0) fail(ErrorKind::ShapeError, "negative twist");
    const std::size_t n = phi.rows();
    const std::size_t width = static_cast<std::size_t>(e) + 1;
    std::size_t eqs = 0;
    for (int m : phi.col_degs()) eqs += static_cast<std::size_t>(m + e) + 1;
    Matrix<R> a(eqs, n * width, R::zero(phi.field()));
    std::size_t row = 0;
    for (std::size_t j = 0; j < phi.cols(); ++j) {
        const int m = phi.col_degree(j);
        for (int t = 0; t <= m + e; ++t, ++row) {
            for (std::size_t i = 0; i < n; ++i) {
                const auto& s = phi.entry(i, j);
                for (int t2 = std::max(0, t - m); t2 <= std::min(e, t); ++t2)
                    a(row, i * width + static_cast<std::size_t>(t2)) = s.coeff(t - t2);
            }
        }
    }
    return a;
}

/// Coefficient matrix of psi . g = 0 for g in (forms of degree t)^n, where
/// psi is an r x n matrix with row i homogeneous of degree n_i, passed in
/// transposed layout (psi_t is n x r, colDegs = n_i). One row per equation
/// (i, u) with u in [0, n_i + t], one column per unknown (j, u2).
template <class R>
Matrix<R> right_system(const BasicPolyMatrix<R>& psi_t, int t) {
    if (t < 0) fail(ErrorKind::ShapeError, "negative twist");
    const std::size_t n = psi_t.rows();
    const std::size_t r = psi_t.cols();
    const std::size_t width = static_cast<std::size_t>(t) + 1;
    std::size_t eqs = 0;
    for (std::size_t i = 0; i < r; ++i) eqs += static_cast<std::size_t>(psi_t.col_degree(i) + t) + 1;
    Matrix<R> a(eqs, n * width, R::zero(psi_t.field()));
    std::size_t base = 0;
    for (std::size_t i = 0; i < r; ++i) {
        const int deg = psi_t.col_degree(i);
        for (std::size_t j = 0; j < n; ++j) {
            const auto& psi_ij = psi_t.entry(j, i);
            for (int u1 = 0; u1 <= deg; ++u1) {
                if (psi_ij.coeff(u1).is_zero()) continue;
                for (int u2 = 0; u2 <= t; ++u2)
                    a(base + static_cast<std::size_t>(u1 + u2), j * width + static_cast<std::size_t>(u2)) = psi_ij.coeff(u1);
            }
        }
        base += static_cast<std::size_t>(deg + t) + 1;
    }
    return a;
}

} // namespace quotcone
