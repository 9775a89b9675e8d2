#include "quotcone/scalar.hpp"

#include <string>

namespace quotcone {

namespace {

bool is_odd_prime(std::uint64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint64_t q = 3; q * q <= p; q += 2)
        if (p % q == 0) return false;
    return true;
}

std::uint64_t reduce(const mpz_class& value, std::uint64_t p) {
    mpz_class r = value % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1;
    base %= p;
    while (exp) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return result;
}

} // namespace

Field Field::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31) || !is_odd_prime(p))
        fail(ErrorKind::ParamError, "field modulus must be an odd prime below 2^31, got " + std::to_string(p));
    return Field(Kind::Prime, p);
}

std::string Field::describe() const {
    return is_rational() ? std::string("Q") : "F_" + std::to_string(p_);
}

void require_same_field(const Field& a, const Field& b) {
    if (!(a == b)) fail(ErrorKind::FieldMismatch, a.describe() + " vs " + b.describe());
}

Scalar::Scalar(const Field& field, long value) : Scalar(field, mpz_class(value)) {}

Scalar::Scalar(const Field& field, const mpz_class& value) : field_(field) {
    if (field.is_prime())
        value_ = reduce(value, field.modulus());
    else
        value_ = mpq_class(value);
}

Scalar::Scalar(const Field& field, const mpq_class& value) : field_(field) {
    if (field.is_prime()) {
        const std::uint64_t p = field.modulus();
        const std::uint64_t den = reduce(value.get_den(), p);
        if (den == 0) fail(ErrorKind::DegenerateInput, "denominator vanishes mod " + std::to_string(p));
        value_ = reduce(value.get_num(), p) * pow_mod(den, p - 2, p) % p;
    } else {
        mpq_class q = value;
        q.canonicalize();
        value_ = std::move(q);
    }
}

Scalar Scalar::parse(const Field& field, std::string_view text) {
    const std::string s(text);
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0)
        fail(ErrorKind::ParseError, "malformed scalar '" + s + "'");
    if (q.get_den() == 0) fail(ErrorKind::ParseError, "zero denominator in '" + s + "'");
    q.canonicalize();
    return Scalar(field, q);
}

bool Scalar::is_zero() const {
    if (field_.is_prime()) return std::get<std::uint64_t>(value_) == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
    if (field_.is_prime()) return std::get<std::uint64_t>(value_) == 1;
    return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
    if (!field_.is_rational()) fail(ErrorKind::FieldMismatch, "rational() on " + field_.describe());
    return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
    if (!field_.is_prime()) fail(ErrorKind::FieldMismatch, "residue() on Q");
    return std::get<std::uint64_t>(value_);
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    if (field_.is_prime()) {
        auto& v = std::get<std::uint64_t>(out.value_);
        v = v == 0 ? 0 : field_.modulus() - v;
    } else {
        auto& q = std::get<mpq_class>(out.value_);
        q = -q;
    }
    return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    require_same_field(field_, rhs.field_);
    if (field_.is_prime()) {
        auto& v = std::get<std::uint64_t>(value_);
        v = (v + std::get<std::uint64_t>(rhs.value_)) % field_.modulus();
    } else {
        std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    require_same_field(field_, rhs.field_);
    if (field_.is_prime()) {
        const std::uint64_t p = field_.modulus();
        auto& v = std::get<std::uint64_t>(value_);
        v = (v + p - std::get<std::uint64_t>(rhs.value_)) % p;
    } else {
        std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    require_same_field(field_, rhs.field_);
    if (field_.is_prime()) {
        auto& v = std::get<std::uint64_t>(value_);
        v = v * std::get<std::uint64_t>(rhs.value_) % field_.modulus();
    } else {
        std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) fail(ErrorKind::DegenerateInput, "division by zero");
    if (field_.is_prime()) {
        Scalar out = *this;
        const std::uint64_t p = field_.modulus();
        std::get<std::uint64_t>(out.value_) = pow_mod(std::get<std::uint64_t>(value_), p - 2, p);
        return out;
    }
    return Scalar(field_, mpq_class(1) / std::get<mpq_class>(value_));
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    require_same_field(field_, rhs.field_);
    return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
    if (field_.is_prime()) return std::to_string(std::get<std::uint64_t>(value_));
    return std::get<mpq_class>(value_).get_str(10);
}

} // namespace quotcone
