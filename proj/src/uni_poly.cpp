#include "quotcone/uni_poly.hpp"

#include <utility>

namespace quotcone {

UniPoly::UniPoly(const Field& field, std::vector<Scalar> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
    for (const Scalar& c : coeffs_) require_same_field(field_, c.field());
    trim();
}

UniPoly UniPoly::constant(const Scalar& c) { return UniPoly(c.field(), {c}); }

UniPoly UniPoly::monomial(const Scalar& c, int power) {
    std::vector<Scalar> coeffs(static_cast<std::size_t>(power) + 1, Scalar::zero(c.field()));
    coeffs.back() = c;
    return UniPoly(c.field(), std::move(coeffs));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar UniPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return Scalar::zero(field_);
    return coeffs_[static_cast<std::size_t>(i)];
}

const Scalar& UniPoly::leading() const {
    if (is_zero()) fail(ErrorKind::DegenerateInput, "leading coefficient of the zero polynomial");
    return coeffs_.back();
}

int UniPoly::order_at_zero() const {
    if (is_zero()) fail(ErrorKind::DegenerateInput, "order of the zero polynomial");
    int i = 0;
    while (coeffs_[static_cast<std::size_t>(i)].is_zero()) ++i;
    return i;
}

Scalar UniPoly::evaluate(const Scalar& s) const {
    require_same_field(field_, s.field());
    Scalar acc = Scalar::zero(field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    std::vector<Scalar> out;
    for (int i = 1; i <= degree(); ++i) out.push_back(coeffs_[static_cast<std::size_t>(i)] * Scalar(field_, i));
    return UniPoly(field_, std::move(out));
}

UniPoly UniPoly::reversed(int bound) const {
    if (degree() > bound) fail(ErrorKind::ShapeError, "reversal bound below the degree");
    std::vector<Scalar> out(static_cast<std::size_t>(bound) + 1, Scalar::zero(field_));
    for (int i = 0; i <= degree(); ++i) out[static_cast<std::size_t>(bound - i)] = coeffs_[static_cast<std::size_t>(i)];
    return UniPoly(field_, std::move(out));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

UniPoly UniPoly::operator-() const {
    UniPoly out = *this;
    for (Scalar& c : out.coeffs_) c = -c;
    return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
    require_same_field(field_, rhs.field_);
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar::zero(field_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
    require_same_field(field_, rhs.field_);
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar::zero(field_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    require_same_field(a.field_, b.field_);
    if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.field_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(a.field_, std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) { return *this = *this * rhs; }

UniPoly& UniPoly::operator*=(const Scalar& rhs) {
    require_same_field(field_, rhs.field());
    for (Scalar& c : coeffs_) c *= rhs;
    trim();
    return *this;
}

std::string UniPoly::to_string(char var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Scalar& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")";
        if (i > 0) out += std::string("*") + var + "^" + std::to_string(i);
    }
    return out;
}

UniPolyDivision divmod(const UniPoly& a, const UniPoly& b) {
    require_same_field(a.field(), b.field());
    if (b.is_zero()) fail(ErrorKind::DegenerateInput, "polynomial division by zero");
    const Field& f = a.field();
    std::vector<Scalar> rem = a.coeffs();
    const int db = b.degree();
    const int dq = a.degree() - db;
    if (dq < 0) return {UniPoly(f), a};
    std::vector<Scalar> quot(static_cast<std::size_t>(dq) + 1, Scalar::zero(f));
    const Scalar lead_inv = b.leading().inverse();
    for (int i = dq; i >= 0; --i) {
        const Scalar q = rem[static_cast<std::size_t>(i + db)] * lead_inv;
        quot[static_cast<std::size_t>(i)] = q;
        if (q.is_zero()) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {UniPoly(f, std::move(quot)), UniPoly(f, std::move(rem))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) fail(ErrorKind::InternalInconsistency, "inexact polynomial division");
    return q;
}

UniPoly gcd(UniPoly a, UniPoly b) {
    require_same_field(a.field(), b.field());
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

} // namespace quotcone
