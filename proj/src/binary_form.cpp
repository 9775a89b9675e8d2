#include "quotcone/binary_form.hpp"

namespace quotcone {

BinaryForm form_x(const Field& field) { return BinaryForm::monomial(Scalar::one(field), 1, 0); }

BinaryForm form_y(const Field& field) { return BinaryForm::monomial(Scalar::one(field), 0, 1); }

BinaryForm make_form(const Field& field, const std::vector<long>& coeffs) {
    if (coeffs.empty()) fail(ErrorKind::ShapeError, "a form needs at least one coefficient");
    std::vector<Scalar> cs;
    cs.reserve(coeffs.size());
    for (long c : coeffs) cs.emplace_back(field, c);
    return BinaryForm(field, static_cast<int>(coeffs.size()) - 1, std::move(cs));
}

UniPoly dehomogenize(const BinaryForm& f) { return UniPoly(f.field(), f.coeffs()); }

BinaryForm homogenize(const UniPoly& p, int degree) {
    if (p.degree() > degree) fail(ErrorKind::ShapeError, "homogenizing below the polynomial degree");
    BinaryForm out(p.field(), degree);
    for (int t = 0; t <= p.degree(); ++t) out.set_coeff(t, p.coeff(t));
    return out;
}

BinaryForm bf_gcd(const BinaryForm& f, const BinaryForm& g) {
    require_same_field(f.field(), g.field());
    const Field& field = f.field();
    if (f.is_zero() && g.is_zero()) fail(ErrorKind::DegenerateInput, "gcd of two zero forms");
    auto normalize = [](const BinaryForm& h) { return h.scaled(h.coeff(h.top_index()).inverse()); };
    if (f.is_zero()) return normalize(g);
    if (g.is_zero()) return normalize(f);
    // y-adic valuation: f = y^v f' with f' having a nonzero x^deg term.
    const int vf = f.degree() - f.top_index();
    const int vg = g.degree() - g.top_index();
    const UniPoly h = gcd(dehomogenize(f), dehomogenize(g));
    const int v = std::min(vf, vg);
    BinaryForm out = homogenize(h, h.degree());
    if (v > 0) out = out * BinaryForm::monomial(Scalar::one(field), 0, v);
    return normalize(out);
}

} // namespace quotcone
