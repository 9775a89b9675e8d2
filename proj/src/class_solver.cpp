#include "quotcone/class_solver.hpp"

#include <numeric>

#include "quotcone/chow.hpp"
#include "quotcone/families.hpp"

namespace quotcone {

namespace {

struct Equation {
    mpq_class a, b, rhs;
};

std::vector<Equation> equations(const std::vector<CurveData>& rows) {
    std::vector<Equation> eqs;
    for (const auto& row : rows) {
        if (row.dotD) {
            eqs.push_back({mpq_class(static_cast<long>(*row.dotD)), mpq_class(static_cast<long>(row.dotY)),
                           mpq_class(static_cast<long>(row.dotX))});
        } else {
            if (row.dotY != 0 || row.dotX != 0)
                fail(ErrorKind::DegenerateInput, "row '" + row.label + "' has an unknown D pairing and nonzero data");
            eqs.push_back({1, 0, 0});
        }
    }
    return eqs;
}

std::vector<std::int64_t> indicator(std::size_t len, std::size_t i) {
    std::vector<std::int64_t> v(len, 0);
    v[i] = 1;
    return v;
}

CurveData alpha_row(const QuotParams& p, const std::vector<std::int64_t>& a, Pairing against, const std::string& label) {
    const CurvePairing c = alpha_DY(p, a);
    return {label, c.dotD, c.dotY, closed_form_prop42(p, against, a).value()};
}

CurveData beta_row(const QuotParams& p, const std::vector<std::int64_t>& b, Pairing against, const std::string& label) {
    const CurvePairing c = beta_DY(p, b);
    return {label, c.dotD, c.dotY, closed_form_prop42(p, against, b).value()};
}

std::string vec_label(const char* curve, const std::vector<std::int64_t>& v) {
    std::string out = std::string(curve) + "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

void add_indicator_rows(std::vector<CurveData>& rows, const QuotParams& p, bool alpha, Pairing against) {
    const auto len = static_cast<std::size_t>(alpha ? p.k : p.r);
    for (std::size_t i = 0; i < len; ++i) {
        const auto v = indicator(len, i);
        rows.push_back(alpha ? alpha_row(p, v, against, vec_label("alpha", v))
                             : beta_row(p, v, against, vec_label("beta", v)));
    }
}

void fill_from_class(SolvedGenerator& g, const DivisorClass& cls) {
    g.ray = cls.primitive();
    g.mult = cls.content();
}

std::int64_t pair(const DivisorClass& cls, const CurvePairing& c) { return cls.d * c.dotD + cls.y * c.dotY; }

} // namespace

bool RationalClass::is_integral() const { return d.get_den() == 1 && y.get_den() == 1; }

DivisorClass RationalClass::integral() const {
    if (!is_integral()) fail(ErrorKind::Inconsistent, "solved class is not integral");
    return {d.get_num().get_si(), y.get_num().get_si()};
}

RationalClass solve_class(const std::vector<CurveData>& rows) {
    if (rows.size() < 2) fail(ErrorKind::Underdetermined, "need at least two curves");
    const auto eqs = equations(rows);
    std::optional<std::pair<std::size_t, std::size_t>> basis;
    for (std::size_t i = 0; i < eqs.size() && !basis; ++i)
        for (std::size_t j = i + 1; j < eqs.size() && !basis; ++j)
            if (eqs[i].a * eqs[j].b - eqs[i].b * eqs[j].a != 0) basis = {i, j};
    if (!basis) fail(ErrorKind::Underdetermined, "curve pairings have rank < 2");
    const auto& u = eqs[basis->first];
    const auto& v = eqs[basis->second];
    const mpq_class det = u.a * v.b - u.b * v.a;
    RationalClass out{(u.rhs * v.b - u.b * v.rhs) / det, (u.a * v.rhs - u.rhs * v.a) / det};
    for (std::size_t i = 0; i < eqs.size(); ++i)
        if (eqs[i].a * out.d + eqs[i].b * out.y != eqs[i].rhs)
            fail(ErrorKind::Inconsistent, "row '" + rows[i].label + "' contradicts the solution");
    return out;
}

DivisorClass kernel_ray(const std::vector<CurveData>& rows) {
    const auto eqs = equations(rows);
    std::optional<Equation> lead;
    for (const auto& e : eqs) {
        if (e.rhs != 0) fail(ErrorKind::Inconsistent, "kernel rows must have dotX = 0");
        if (!lead && (e.a != 0 || e.b != 0)) lead = e;
    }
    if (!lead) fail(ErrorKind::Underdetermined, "no nonzero row");
    for (const auto& e : eqs)
        if (lead->a * e.b - lead->b * e.a != 0) fail(ErrorKind::Inconsistent, "rows have rank 2, the kernel is zero");
    // a, b are integers here since every row came from integer data.
    const DivisorClass k{-lead->b.get_num().get_si(), lead->a.get_num().get_si()};
    return k.primitive();
}

Theorem1Report theorem1_report(const QuotParams& p) {
    Theorem1Report rep{p, effective_cone(p), {}, {}, false, true, false};
    const auto k = static_cast<std::size_t>(p.k);
    const auto r = static_cast<std::size_t>(p.r);
    const std::vector<std::int64_t> ones_k(k, 1), ones_r(r, 1);

    // D_unb
    auto& unb = rep.unb;
    if (!p.k_divides_d()) {
        add_indicator_rows(unb.rows, p, true, Pairing::AlphaUnb);
        fill_from_class(unb, solve_class(unb.rows).integral());
    } else if (p.r > 0) {
        unb.rows.push_back(alpha_row(p, ones_k, Pairing::AlphaUnb, vec_label("alpha", ones_k)));
        unb.rows.push_back(alpha_row(p, indicator(k, 0), Pairing::AlphaUnb, vec_label("alpha", indicator(k, 0))));
        unb.rows.push_back(beta_row(p, ones_r, Pairing::BetaUnb, vec_label("beta", ones_r)));
        fill_from_class(unb, solve_class(unb.rows).integral());
    } else {
        unb.rows.push_back(alpha_row(p, ones_k, Pairing::AlphaUnb, vec_label("alpha", ones_k)));
        DivisorClass ray = kernel_ray(unb.rows);
        // Of the two signs, the effective one together with D_deg contains the nef cone.
        const Cone2 nef = nef_cone(p);
        const auto contains_nef = [&](DivisorClass cand) {
            try {
                return cone_subset(nef, Cone2::spanned_by(cand, rep.formula.deg.ray));
            } catch (const Error&) {
                return false;
            }
        };
        if (!contains_nef(ray)) ray = -1 * ray;
        unb.ray = ray;
    }

    // D_deg
    auto& deg = rep.deg;
    if (p.r == 0) {
        if (!p.k_divides_d()) {
            add_indicator_rows(deg.rows, p, true, Pairing::AlphaDeg);
        } else {
            deg.rows.push_back(alpha_row(p, ones_k, Pairing::AlphaDeg, vec_label("alpha", ones_k)));
            deg.rows.push_back({"gamma", std::nullopt, 0, 0});
        }
    } else if (!p.r_divides_d()) {
        add_indicator_rows(deg.rows, p, false, Pairing::BetaDeg);
    } else if (!p.k_divides_d()) {
        add_indicator_rows(deg.rows, p, true, Pairing::AlphaDeg);
    } else {
        deg.rows.push_back(alpha_row(p, ones_k, Pairing::AlphaDeg, vec_label("alpha", ones_k)));
        deg.rows.push_back(beta_row(p, ones_r, Pairing::BetaDeg, vec_label("beta", ones_r)));
    }
    const DivisorClass deg_class = solve_class(deg.rows).integral();
    fill_from_class(deg, deg_class);
    if (p.r == 1) rep.r1_class_is_D = deg_class == class_D();

    unb.ray_agrees = unb.ray == rep.formula.unb.ray;
    unb.mult_agrees = unb.mult == rep.formula.unb.mult;
    deg.ray_agrees = deg.ray == rep.formula.deg.ray;
    deg.mult_agrees = deg.mult == rep.formula.deg.mult;
    try {
        rep.nef_in_eff = cone_subset(nef_cone(p), Cone2::spanned_by(unb.ray, deg.ray));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateCone) throw;
        rep.nef_in_eff = false;
    }
    rep.agrees = unb.ray_agrees && unb.mult_agrees && deg.ray_agrees && deg.mult_agrees && rep.nef_in_eff &&
                 rep.r1_class_is_D;
    return rep;
}

SpanningReport spanning_report(const QuotParams& p) {
    const Theorem1Report t = theorem1_report(p);
    SpanningReport s;
    const auto k = static_cast<std::size_t>(p.k);
    const auto r = static_cast<std::size_t>(p.r);

    // Alpha supported off the first l1 (lowest-degree) summands.
    s.alpha_vec.assign(k, 1);
    if (!p.k_divides_d())
        for (std::size_t i = 0; i < static_cast<std::size_t>(*p.l1); ++i) s.alpha_vec[i] = 0;
    s.alpha_unb = closed_form_prop42(p, Pairing::AlphaUnb, s.alpha_vec).value();
    // Positivity only depends on the ray, since multipliers are positive.
    s.alpha_deg = pair(t.deg.ray, alpha_DY(p, s.alpha_vec));
    bool ok = s.alpha_unb == 0 && s.alpha_deg > 0;

    if (p.r > 0) {
        s.beta_vec.assign(r, 1);
        if (!p.r_divides_d())
            for (std::size_t i = 0; i < static_cast<std::size_t>(*p.l2); ++i) s.beta_vec[i] = 0;
        s.beta_deg = closed_form_prop42(p, Pairing::BetaDeg, s.beta_vec).value();
        s.beta_unb = pair(t.unb.ray, beta_DY(p, s.beta_vec));
        ok = ok && s.beta_deg == 0 && s.beta_unb > 0;
    } else {
        // gamma . Y = 0 and D_deg is a multiple of Y.
        s.gamma_deg = t.deg.ray.d == 0 ? 0 : -1;
        ok = ok && s.gamma_deg == 0;
    }
    s.rays_independent = cross(t.unb.ray, t.deg.ray) != 0;
    s.ok = ok && s.rays_independent;
    return s;
}

bool spanning_consistency(const QuotParams& p) { return spanning_report(p).ok; }

std::vector<GridPoint> theorem1_grid(int n_lo, int n_hi, int d_lo, int d_hi) {
    if (n_lo < 2 || n_hi < n_lo || d_lo < 1 || d_hi < d_lo) fail(ErrorKind::ParamError, "empty or invalid grid");
    std::vector<GridPoint> out;
    for (int n = n_lo; n <= n_hi; ++n) {
        for (int r = 0; r <= n - 2; ++r) {
            for (int d = d_lo; d <= d_hi; ++d) {
                const QuotParams p = make_params(n, r, d);
                try {
                    Theorem1Report rep = theorem1_report(p);
                    const bool span = spanning_consistency(p);
                    out.push_back({p, std::move(rep), span});
                } catch (const Error& e) {
                    if (e.kind() == ErrorKind::UnsupportedRegime || e.kind() == ErrorKind::EmptyRay) continue;
                    throw;
                }
            }
        }
    }
    return out;
}

} // namespace quotcone
