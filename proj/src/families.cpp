#include "quotcone/families.hpp"

#include <numeric>

#include "quotcone/random.hpp"
#include "quotcone/splitting.hpp"

namespace quotcone {

namespace {

constexpr int kMaxRetries = 16;

void check_vector(const std::vector<std::int64_t>& v, std::size_t expected, const char* what) {
    if (v.size() != expected)
        fail(ErrorKind::ShapeError, std::string(what) + " has length " + std::to_string(v.size()) + ", expected " +
                                        std::to_string(expected));
    for (auto x : v)
        if (x < 0) fail(ErrorKind::DegenerateInput, std::string(what) + " must be nonnegative");
}

template <class F>
PolyMatrix map_coeffs(const FamilyMatrix& m, F&& fn) {
    std::vector<BinaryForm> out;
    out.reserve(m.entries().size());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto& e = m.entry(i, j);
            std::vector<Scalar> cs;
            for (const auto& c : e.coeffs()) cs.push_back(fn(j, c));
            out.emplace_back(m.field(), e.degree(), std::move(cs));
        }
    }
    return PolyMatrix(m.field(), m.rows(), m.col_degs(), std::move(out));
}

// Column j of the family carries parameter degree bounds[j].
FamilyMatrix random_family(const Field& field, std::size_t rows, const std::vector<int>& col_degs,
                           const std::vector<std::int64_t>& bounds, Rng& rng) {
    FamilyMatrix m(field, rows, col_degs);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < col_degs.size(); ++j) {
            std::vector<ParamPoly> cs;
            for (int t = 0; t <= col_degs[j]; ++t) cs.push_back(random_param_poly(field, static_cast<int>(bounds[j]), rng));
            m.set(i, j, BasicBinaryForm<ParamPoly>(field, col_degs[j], std::move(cs)));
        }
    }
    return m;
}

CurveFamily sample_family(CurveKind kind, const QuotParams& p, const std::vector<std::int64_t>& vec,
                          std::uint64_t seed, const Field& field) {
    const bool alpha = kind == CurveKind::Alpha;
    const std::vector<int>& degs = alpha ? p.m : p.nvec;
    Rng rng(seed);
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        CurveFamily fam{kind, p, vec, random_family(field, static_cast<std::size_t>(p.n), degs, vec, rng), seed};
        // Both conditions reduce to a nonvanishing maximal minor of the stored n x (k or r) matrix.
        if (is_generically_injective(fam.specialize(random_scalar(field, rng)))) return fam;
    }
    fail(ErrorKind::GenericityFailure, std::string("no generic ") + (alpha ? "alpha" : "beta") + " family after " +
                                           std::to_string(kMaxRetries) + " attempts");
}

std::int64_t sum_range(const std::vector<std::int64_t>& v, std::size_t count) {
    return std::accumulate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(count), std::int64_t{0});
}

ParamPoly det_or_zero(const Matrix<ParamPoly>& a, const Field& field) {
    auto det = bareiss_determinant(a);
    return det ? *det : ParamPoly::zero(field);
}

ParamPoly alpha_section(const FamilyMatrix& m, const QuotParams& p) {
    if (p.r == 0) {
        const auto det = polymat_det(m);
        if (det.is_zero()) return ParamPoly::zero(m.field());
        return bf_discriminant(det);
    }
    return det_or_zero(left_system(m, *p.d2 - 1), m.field());
}

ParamPoly beta_section(const FamilyMatrix& m, const QuotParams& p) {
    return det_or_zero(right_system(m, p.d1 - 1), m.field());
}

TrialReport make_report(const CurveFamily& fam, std::string kind, std::int64_t predicted, const ParamPoly& affine,
                        const ParamPoly& infinity) {
    TrialReport rep;
    rep.kind = std::move(kind);
    rep.params = fam.params;
    rep.vec = fam.degree_vec;
    rep.seed = fam.seed;
    rep.predicted = predicted;
    const auto count = projective_root_count(affine, infinity);
    rep.degenerate = !count.has_value();
    rep.measured = count.value_or(-1);
    rep.agreed = !rep.degenerate && rep.measured == rep.predicted;
    return rep;
}

} // namespace

std::pair<std::size_t, std::size_t> CurveFamily::shape() const {
    if (kind == CurveKind::Alpha) return {entries.rows(), entries.cols()};
    return {entries.cols(), entries.rows()};
}

PolyMatrix CurveFamily::specialize(const Scalar& s) const {
    return map_coeffs(entries, [&](std::size_t, const ParamPoly& c) { return c.evaluate(s); });
}

FamilyMatrix CurveFamily::at_infinity() const {
    std::vector<BasicBinaryForm<ParamPoly>> out;
    for (std::size_t i = 0; i < entries.rows(); ++i) {
        for (std::size_t j = 0; j < entries.cols(); ++j) {
            const auto& e = entries.entry(i, j);
            std::vector<ParamPoly> cs;
            for (const auto& c : e.coeffs()) cs.push_back(c.reversed(static_cast<int>(degree_vec.at(j))));
            out.emplace_back(entries.field(), e.degree(), std::move(cs));
        }
    }
    return FamilyMatrix(entries.field(), entries.rows(), entries.col_degs(), std::move(out));
}

CurveFamily sample_alpha_family(const QuotParams& p, const std::vector<std::int64_t>& a, std::uint64_t seed,
                                const Field& field) {
    check_vector(a, static_cast<std::size_t>(p.k), "alpha degree vector");
    return sample_family(CurveKind::Alpha, p, a, seed, field);
}

CurveFamily sample_beta_family(const QuotParams& p, const std::vector<std::int64_t>& b, std::uint64_t seed,
                               const Field& field) {
    if (p.r < 1) fail(ErrorKind::UnsupportedRegime, "beta curves need r >= 1");
    check_vector(b, static_cast<std::size_t>(p.r), "beta degree vector");
    return sample_family(CurveKind::Beta, p, b, seed, field);
}

std::optional<std::int64_t> projective_root_count(const ParamPoly& affine, const ParamPoly& at_infinity) {
    if (affine.is_zero() != at_infinity.is_zero())
        fail(ErrorKind::InternalInconsistency, "the two charts disagree on vanishing");
    if (affine.is_zero()) return std::nullopt;
    return affine.degree() + at_infinity.order_at_zero();
}

TrialReport measure_alpha_Ddeg(const CurveFamily& fam) {
    if (fam.kind != CurveKind::Alpha) fail(ErrorKind::ShapeError, "measure_alpha_Ddeg needs an alpha family");
    const QuotParams& p = fam.params;
    if (p.r > 0 && !p.r_divides_d()) fail(ErrorKind::UnsupportedRegime, "alpha . D_deg is measured only when r | d");
    if (p.r == 0 && p.d < 2) fail(ErrorKind::UnsupportedRegime, "the r = 0 discriminant needs d >= 2");
    const auto predicted = closed_form_prop42(p, Pairing::AlphaDeg, fam.degree_vec);
    return make_report(fam, "alpha-Ddeg", predicted.value(), alpha_section(fam.entries, p),
                       alpha_section(fam.at_infinity(), p));
}

TrialReport measure_beta_Dunb(const CurveFamily& fam) {
    if (fam.kind != CurveKind::Beta) fail(ErrorKind::ShapeError, "measure_beta_Dunb needs a beta family");
    const QuotParams& p = fam.params;
    if (!p.k_divides_d()) fail(ErrorKind::UnsupportedRegime, "beta . D_unb is measured only when k | d");
    const auto predicted = closed_form_prop42(p, Pairing::BetaUnb, fam.degree_vec);
    return make_report(fam, "beta-Dunb", predicted.value(), beta_section(fam.entries, p),
                       beta_section(fam.at_infinity(), p));
}

std::string_view to_string(Pairing which) {
    switch (which) {
    case Pairing::AlphaUnb: return "alpha-Dunb";
    case Pairing::BetaUnb: return "beta-Dunb";
    case Pairing::AlphaDeg: return "alpha-Ddeg";
    case Pairing::BetaDeg: return "beta-Ddeg";
    }
    return "?";
}

std::optional<std::int64_t> closed_form_prop42(const QuotParams& p, Pairing which, const std::vector<std::int64_t>& vec) {
    const bool alpha = which == Pairing::AlphaUnb || which == Pairing::AlphaDeg;
    if (!alpha && p.r == 0) return std::nullopt;
    const std::size_t len = static_cast<std::size_t>(alpha ? p.k : p.r);
    if (vec.size() != len) fail(ErrorKind::ShapeError, "degree vector has the wrong length");
    switch (which) {
    case Pairing::AlphaUnb:
        if (p.k_divides_d()) return 0;
        return std::int64_t{p.d1} * (*p.l1 + 1) * sum_range(vec, static_cast<std::size_t>(*p.l1));
    case Pairing::BetaUnb: {
        if (!p.k_divides_d()) return std::nullopt;
        std::int64_t total = 0;
        for (std::size_t i = 0; i < len; ++i) total += vec[i] * (p.nvec[i] + p.d1);
        return total;
    }
    case Pairing::AlphaDeg: {
        if (p.r == 0) return 2 * std::int64_t{p.d - 1} * sum_range(vec, len);
        if (!p.r_divides_d()) return std::nullopt;
        std::int64_t total = 0;
        for (std::size_t i = 0; i < len; ++i) total += vec[i] * (p.m[i] + *p.d2);
        return total;
    }
    case Pairing::BetaDeg:
        if (p.r_divides_d()) return 0;
        return std::int64_t{*p.d2} * (*p.l2 + 1) * sum_range(vec, static_cast<std::size_t>(*p.l2));
    }
    return std::nullopt;
}

std::vector<TrialReport> run_trials(Pairing which, const QuotParams& p, const std::vector<std::int64_t>& vec,
                                    std::size_t trials, std::uint64_t master_seed, const Field& field) {
    if (which != Pairing::AlphaDeg && which != Pairing::BetaUnb)
        fail(ErrorKind::UnsupportedRegime, std::string("no measurement for ") + std::string(to_string(which)));
    std::vector<TrialReport> out;
    out.reserve(trials);
    for (std::size_t i = 0; i < trials; ++i) {
        const std::uint64_t seed = derive_seed(master_seed, i);
        try {
            if (which == Pairing::AlphaDeg)
                out.push_back(measure_alpha_Ddeg(sample_alpha_family(p, vec, seed, field)));
            else
                out.push_back(measure_beta_Dunb(sample_beta_family(p, vec, seed, field)));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::GenericityFailure) throw;
            TrialReport rep;
            rep.kind = std::string(to_string(which));
            rep.params = p;
            rep.vec = vec;
            rep.seed = seed;
            rep.predicted = closed_form_prop42(p, which, vec).value();
            rep.degenerate = true;
            out.push_back(rep);
        }
    }
    return out;
}

TrialTally tally(const std::vector<TrialReport>& reports) {
    TrialTally t;
    for (const auto& r : reports) {
        ++t.total;
        if (r.degenerate) continue;
        ++t.generic;
        if (r.agreed) ++t.exact;
    }
    return t;
}

} // namespace quotcone
