#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "quotcone/error.hpp"

namespace quotcone {

inline constexpr std::uint64_t kDefaultPrime = 10007;

/// The ground field of a computation: the rationals or F_p for an odd prime p < 2^31.
class Field {
public:
    enum class Kind { Rational, Prime };

    static Field rational() { return Field(Kind::Rational, 0); }
    static Field prime(std::uint64_t p = kDefaultPrime);

    Kind kind() const noexcept { return kind_; }
    bool is_prime() const noexcept { return kind_ == Kind::Prime; }
    bool is_rational() const noexcept { return kind_ == Kind::Rational; }
    /// 0 for the rationals.
    std::uint64_t modulus() const noexcept { return p_; }
    /// 0 for the rationals, p otherwise.
    std::uint64_t characteristic() const noexcept { return p_; }

    std::string describe() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

    Kind kind_;
    std::uint64_t p_;
};

void require_same_field(const Field& a, const Field& b);

/// An element of a Field. Rationals are kept in lowest terms with a positive
/// denominator (mpq canonical form); residues are kept in [0, p).
class Scalar {
public:
    Scalar() : field_(Field::rational()), value_(mpq_class(0)) {}
    Scalar(const Field& field, long value);
    Scalar(const Field& field, const mpz_class& value);
    /// Rational field only.
    Scalar(const Field& field, const mpq_class& value);

    static Scalar zero(const Field& field) { return Scalar(field, 0L); }
    static Scalar one(const Field& field) { return Scalar(field, 1L); }
    static Scalar from_int(const Field& field, long value) { return Scalar(field, value); }
    /// Decimal integer, "num/den", or (prime field) any integer reduced mod p.
    static Scalar parse(const Field& field, std::string_view text);

    const Field& field() const noexcept { return field_; }
    bool is_zero() const;
    bool is_one() const;

    const mpq_class& rational() const;
    std::uint64_t residue() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);
    Scalar inverse() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

    std::string to_string() const;

private:
    Field field_;
    std::variant<std::uint64_t, mpq_class> value_;
};

inline Scalar exact_div(const Scalar& a, const Scalar& b) { return a / b; }

} // namespace quotcone
