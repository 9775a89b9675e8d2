#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quotcone/error.hpp"
#include "quotcone/matrix.hpp"
#include "quotcone/scalar.hpp"
#include "quotcone/uni_poly.hpp"

namespace quotcone {

/// Homogeneous polynomial of a fixed degree m in (x, y) with coefficients in a
/// commutative ring R (Scalar, or ParamPoly for one-parameter families).
/// coeff(t) multiplies x^t y^(m-t). The zero form of degree m is allowed and
/// still remembers m, so degree arithmetic stays exact under products.
template <class R>
class BasicBinaryForm {
public:
    BasicBinaryForm(const Field& field, int degree) : field_(field), degree_(degree) {
        if (degree < 0) fail(ErrorKind::ShapeError, "negative form degree");
        coeffs_.assign(static_cast<std::size_t>(degree) + 1, R::zero(field));
    }

    BasicBinaryForm(const Field& field, int degree, std::vector<R> coeffs)
        : field_(field), degree_(degree), coeffs_(std::move(coeffs)) {
        if (degree < 0 || coeffs_.size() != static_cast<std::size_t>(degree) + 1)
            fail(ErrorKind::ShapeError, "form of degree " + std::to_string(degree) + " needs " +
                                            std::to_string(degree + 1) + " coefficients, got " +
                                            std::to_string(coeffs_.size()));
        for (const R& c : coeffs_) require_same_field(field_, c.field());
    }

    /// c * x^xpow * y^ypow
    static BasicBinaryForm monomial(const R& c, int xpow, int ypow) {
        BasicBinaryForm out(c.field(), xpow + ypow);
        out.coeffs_[static_cast<std::size_t>(xpow)] = c;
        return out;
    }

    const Field& field() const noexcept { return field_; }
    int degree() const noexcept { return degree_; }
    const R& coeff(int t) const { return coeffs_.at(static_cast<std::size_t>(t)); }
    void set_coeff(int t, R value) {
        require_same_field(field_, value.field());
        coeffs_.at(static_cast<std::size_t>(t)) = std::move(value);
    }
    const std::vector<R>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const {
        for (const R& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    /// Largest t with a nonzero coefficient; -1 for the zero form.
    int top_index() const {
        for (int t = degree_; t >= 0; --t)
            if (!coeffs_[static_cast<std::size_t>(t)].is_zero()) return t;
        return -1;
    }

    BasicBinaryForm operator-() const {
        BasicBinaryForm out = *this;
        for (R& c : out.coeffs_) c = -c;
        return out;
    }

    BasicBinaryForm& operator+=(const BasicBinaryForm& rhs) {
        check_compatible(rhs);
        for (std::size_t t = 0; t < coeffs_.size(); ++t) coeffs_[t] += rhs.coeffs_[t];
        return *this;
    }

    BasicBinaryForm& operator-=(const BasicBinaryForm& rhs) {
        check_compatible(rhs);
        for (std::size_t t = 0; t < coeffs_.size(); ++t) coeffs_[t] -= rhs.coeffs_[t];
        return *this;
    }

    friend BasicBinaryForm operator+(BasicBinaryForm a, const BasicBinaryForm& b) { return a += b; }
    friend BasicBinaryForm operator-(BasicBinaryForm a, const BasicBinaryForm& b) { return a -= b; }

    friend BasicBinaryForm operator*(const BasicBinaryForm& a, const BasicBinaryForm& b) {
        require_same_field(a.field_, b.field_);
        BasicBinaryForm out(a.field_, a.degree_ + b.degree_);
        for (int i = 0; i <= a.degree_; ++i) {
            const R& ai = a.coeffs_[static_cast<std::size_t>(i)];
            if (ai.is_zero()) continue;
            for (int j = 0; j <= b.degree_; ++j) out.coeffs_[static_cast<std::size_t>(i + j)] += ai * b.coeffs_[static_cast<std::size_t>(j)];
        }
        return out;
    }

    BasicBinaryForm scaled(const R& c) const {
        BasicBinaryForm out = *this;
        for (R& v : out.coeffs_) v = v * c;
        return out;
    }

    /// df/dx, a form of degree m-1 (requires m >= 1).
    BasicBinaryForm partial_x() const {
        if (degree_ < 1) fail(ErrorKind::DegenerateInput, "partial derivative of a constant form");
        BasicBinaryForm out(field_, degree_ - 1);
        for (int t = 1; t <= degree_; ++t)
            out.coeffs_[static_cast<std::size_t>(t - 1)] = coeffs_[static_cast<std::size_t>(t)] * R::from_int(field_, t);
        return out;
    }

    /// df/dy, a form of degree m-1 (requires m >= 1).
    BasicBinaryForm partial_y() const {
        if (degree_ < 1) fail(ErrorKind::DegenerateInput, "partial derivative of a constant form");
        BasicBinaryForm out(field_, degree_ - 1);
        for (int t = 0; t < degree_; ++t)
            out.coeffs_[static_cast<std::size_t>(t)] = coeffs_[static_cast<std::size_t>(t)] * R::from_int(field_, degree_ - t);
        return out;
    }

    friend bool operator==(const BasicBinaryForm& a, const BasicBinaryForm& b) {
        return a.field_ == b.field_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }

    std::string to_string() const {
        std::string out;
        for (int t = degree_; t >= 0; --t) {
            const R& c = coeffs_[static_cast<std::size_t>(t)];
            if (c.is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "(" + c.to_string() + ")";
            if (t > 0) out += "*x^" + std::to_string(t);
            if (degree_ - t > 0) out += "*y^" + std::to_string(degree_ - t);
        }
        return out.empty() ? "0" : out;
    }

private:
    void check_compatible(const BasicBinaryForm& rhs) const {
        require_same_field(field_, rhs.field_);
        if (degree_ != rhs.degree_)
            fail(ErrorKind::ShapeError, "adding forms of degree " + std::to_string(degree_) + " and " +
                                            std::to_string(rhs.degree_));
    }

    Field field_;
    int degree_;
    std::vector<R> coeffs_;
};

/// a / b for forms with b | a over R. InternalInconsistency if b does not divide a.
template <class R>
BasicBinaryForm<R> exact_div(const BasicBinaryForm<R>& a, const BasicBinaryForm<R>& b) {
    require_same_field(a.field(), b.field());
    if (b.is_zero()) fail(ErrorKind::DegenerateInput, "form division by zero");
    if (a.degree() < b.degree()) fail(ErrorKind::InternalInconsistency, "inexact form division (degree)");
    const int qdeg = a.degree() - b.degree();
    if (a.is_zero()) return BasicBinaryForm<R>(a.field(), qdeg);
    // b = x^shift * b' with b'_0 != 0; divide power-series style in ascending x.
    int shift = 0;
    while (b.coeff(shift).is_zero()) ++shift;
    for (int t = 0; t < shift; ++t)
        if (!a.coeff(t).is_zero()) fail(ErrorKind::InternalInconsistency, "inexact form division");
    const R& b0 = b.coeff(shift);
    std::vector<R> q(static_cast<std::size_t>(qdeg) + 1, R::zero(a.field()));
    for (int t = 0; t <= qdeg; ++t) {
        R acc = a.coeff(t + shift);
        for (int i = 1; i <= t && shift + i <= b.degree(); ++i) acc -= b.coeff(shift + i) * q[static_cast<std::size_t>(t - i)];
        q[static_cast<std::size_t>(t)] = exact_div(acc, b0);
    }
    BasicBinaryForm<R> quotient(a.field(), qdeg, std::move(q));
    if (!(quotient * b == a)) fail(ErrorKind::InternalInconsistency, "inexact form division");
    return quotient;
}

using BinaryForm = BasicBinaryForm<Scalar>;

/// Global x and y as degree-1 forms, handy for building examples.
BinaryForm form_x(const Field& field);
BinaryForm form_y(const Field& field);
/// Form from coefficient integers c_t of x^t y^(m-t).
BinaryForm make_form(const Field& field, const std::vector<long>& coeffs);

/// Dehomogenization f(x, 1) and homogenization back to a given degree.
UniPoly dehomogenize(const BinaryForm& f);
BinaryForm homogenize(const UniPoly& p, int degree);

/// gcd over the field, normalized so its leading nonzero coefficient (highest
/// x-power) is 1. DegenerateInput if both inputs are zero.
BinaryForm bf_gcd(const BinaryForm& f, const BinaryForm& g);

/// Sylvester resultant of two forms of formal degrees p, q >= 0 (not both 0).
template <class R>
R bf_resultant(const BasicBinaryForm<R>& f, const BasicBinaryForm<R>& g) {
    require_same_field(f.field(), g.field());
    const int p = f.degree(), q = g.degree();
    const std::size_t n = static_cast<std::size_t>(p + q);
    if (n == 0) fail(ErrorKind::DegenerateInput, "resultant of two constants");
    Matrix<R> syl(n, n, R::zero(f.field()));
    // Coefficients ordered by descending x-power.
    for (int i = 0; i < q; ++i)
        for (int t = 0; t <= p; ++t) syl(static_cast<std::size_t>(i), static_cast<std::size_t>(i + t)) = f.coeff(p - t);
    for (int i = 0; i < p; ++i)
        for (int t = 0; t <= q; ++t) syl(static_cast<std::size_t>(q + i), static_cast<std::size_t>(i + t)) = g.coeff(q - t);
    auto det = bareiss_determinant(std::move(syl));
    return det ? *det : R::zero(f.field());
}

/// Discriminant of a binary form of degree m >= 2, normalized so that the
/// quadratic a x^2 + b xy + c y^2 gives b^2 - 4ac:
///   disc(f) = (-1)^(m(m-1)/2) Res(f_x, f_y) / m^(m-2).
/// Vanishes iff f has a repeated root on P^1 (including at infinity).
template <class R>
R bf_discriminant(const BasicBinaryForm<R>& f) {
    const int m = f.degree();
    if (m < 2) fail(ErrorKind::DegenerateInput, "discriminant needs degree >= 2");
    if (f.is_zero()) fail(ErrorKind::DegenerateInput, "discriminant of the zero form");
    const Field& field = f.field();
    if (field.is_prime() && static_cast<std::uint64_t>(m) % field.modulus() == 0)
        fail(ErrorKind::DegenerateInput, "field characteristic divides the form degree");
    R res = bf_resultant(f.partial_x(), f.partial_y());
    R norm = R::from_int(field, 1);
    for (int i = 0; i < m - 2; ++i) norm = norm * R::from_int(field, m);
    res = exact_div(res, norm);
    if ((m * (m - 1) / 2) % 2 == 1) res = -res;
    return res;
}

} // namespace quotcone
