#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "quotcone/error.hpp"
#include "quotcone/scalar.hpp"

namespace quotcone {

/// Dense row-major matrix over any value type.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    Matrix transposed() const {
        Matrix out;
        out.rows_ = cols_;
        out.cols_ = rows_;
        out.data_.reserve(data_.size());
        for (std::size_t j = 0; j < cols_; ++j)
            for (std::size_t i = 0; i < rows_; ++i) out.data_.push_back((*this)(i, j));
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Fraction-free (Bareiss) determinant over an integral domain whose elements
/// provide *, -, is_zero() and an exact_div(a, b) overload. Returns nullopt
/// when the matrix is singular, since a zero of the right "shape" (e.g. a zero
/// binary form of the right degree) is the caller's to build.
template <class E>
std::optional<E> bareiss_determinant(Matrix<E> a) {
    if (!a.is_square()) fail(ErrorKind::ShapeError, "determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) fail(ErrorKind::ShapeError, "determinant of an empty matrix");
    bool negate = false;
    std::optional<E> prev;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a(pivot, k).is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != k) {
            a.swap_rows(pivot, k);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                E v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                a(i, j) = prev ? exact_div(v, *prev) : std::move(v);
            }
        }
        prev = a(k, k);
    }
    E det = a(n - 1, n - 1);
    if (det.is_zero()) return std::nullopt;
    if (negate) det = -det;
    return det;
}

/// Exact rank. Rationals go through fraction-free elimination on an integer
/// row-scaled copy; prime fields use plain modular elimination.
std::size_t rank(const Matrix<Scalar>& m);

inline std::size_t nullity(const Matrix<Scalar>& m) { return m.cols() - rank(m); }

/// Exact determinant of a square scalar matrix (same dispatch as rank()).
Scalar determinant(const Matrix<Scalar>& m);

/// Basis of the right kernel {v : m v = 0}; one vector per free column.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix<Scalar>& m);

} // namespace quotcone
