#pragma once

#include <string>
#include <vector>

#include "quotcone/scalar.hpp"

namespace quotcone {

/// Dense univariate polynomial over a Field. Coefficient i multiplies s^i.
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and degree() == kMinusInfinity.
class UniPoly {
public:
    static constexpr int kMinusInfinity = -1;

    explicit UniPoly(const Field& field) : field_(field) {}
    UniPoly(const Field& field, std::vector<Scalar> coeffs);

    static UniPoly zero(const Field& field) { return UniPoly(field); }
    static UniPoly constant(const Scalar& c);
    static UniPoly from_int(const Field& field, long value) { return constant(Scalar(field, value)); }
    /// c * s^power
    static UniPoly monomial(const Scalar& c, int power);

    const Field& field() const noexcept { return field_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Coefficient of s^i; zero beyond the degree.
    Scalar coeff(int i) const;
    const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
    /// Leading coefficient; DegenerateInput on the zero polynomial.
    const Scalar& leading() const;
    /// Multiplicity of s = 0 as a root; DegenerateInput on the zero polynomial.
    int order_at_zero() const;

    Scalar evaluate(const Scalar& s) const;
    UniPoly derivative() const;
    /// s^bound * p(1/s); requires degree() <= bound. Switches to the other
    /// affine chart of a binary form of degree `bound` in (s0, s1).
    UniPoly reversed(int bound) const;
    UniPoly monic() const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& rhs);
    UniPoly& operator-=(const UniPoly& rhs);
    UniPoly& operator*=(const UniPoly& rhs);
    UniPoly& operator*=(const Scalar& rhs);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Scalar& b) { return a *= b; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

    std::string to_string(char var = 's') const;

private:
    void trim();

    Field field_;
    std::vector<Scalar> coeffs_;
};

struct UniPolyDivision {
    UniPoly quotient;
    UniPoly remainder;
};

UniPolyDivision divmod(const UniPoly& a, const UniPoly& b);
/// Quotient a / b; InternalInconsistency if b does not divide a.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(UniPoly a, UniPoly b);

/// Polynomials in the family parameter s.
using ParamPoly = UniPoly;

} // namespace quotcone
