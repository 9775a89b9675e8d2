#include "quotcone/json_io.hpp"

#include <fstream>
#include <sstream>

namespace quotcone {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::ParseError, what); }

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
    return j.at(key);
}

long as_long(const Json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<long>();
}

std::size_t as_count(const Json& j, const char* what) {
    const long v = as_long(j, what);
    if (v < 0) bad(std::string(what) + " must be nonnegative");
    return static_cast<std::size_t>(v);
}

Json mult_json(const std::optional<std::int64_t>& m) {
    if (m) return *m;
    return "unknown";
}

Json pair_json(const Cone2& c) { return Json::array({class_to_json(c.first()), class_to_json(c.second())}); }

Json slopes_json(const Cone2& c) {
    const auto [a, b] = boundary_slopes(c);
    return Json::array({slope_to_json(a), slope_to_json(b)});
}

Json params_json(const QuotParams& p) { return Json::array({p.n, p.r, p.d}); }

Json generator_json(const Generator& g) {
    Json j;
    j["ray"] = class_to_json(g.ray);
    j["mult"] = mult_json(g.mult);
    return j;
}

Json rows_json(const std::vector<CurveData>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) {
        Json j;
        j["label"] = r.label;
        j["dotD"] = r.dotD ? Json(*r.dotD) : Json("unknown");
        j["dotY"] = r.dotY;
        j["dotX"] = r.dotX;
        out.push_back(std::move(j));
    }
    return out;
}

Json solved_json(const SolvedGenerator& g) {
    Json j;
    j["ray"] = class_to_json(g.ray);
    j["mult"] = mult_json(g.mult);
    j["rays_agree"] = g.ray_agrees;
    j["mult_agrees"] = g.mult_agrees;
    j["rows"] = rows_json(g.rows);
    return j;
}

} // namespace

Json field_to_json(const Field& field) {
    Json j;
    if (field.is_rational()) {
        j["type"] = "rational";
    } else {
        j["type"] = "prime";
        j["p"] = field.modulus();
    }
    return j;
}

Field field_from_json(const Json& j) {
    const Json& type = member(j, "type");
    if (!type.is_string()) bad("field type must be a string");
    const auto t = type.get<std::string>();
    if (t == "rational") return Field::rational();
    if (t == "prime") {
        const long p = as_long(member(j, "p"), "field prime");
        if (p < 3) bad("field prime out of range");
        try {
            return Field::prime(static_cast<std::uint64_t>(p));
        } catch (const Error& e) {
            bad(e.what());
        }
    }
    bad("unknown field type '" + t + "'");
}

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Field& field, const Json& j) {
    try {
        if (j.is_number_integer()) return Scalar(field, j.get<long>());
        if (j.is_string()) return Scalar::parse(field, j.get<std::string>());
    } catch (const Error& e) {
        bad(std::string("bad scalar: ") + e.what());
    }
    bad("scalar must be a string or an integer");
}

Json polymatrix_to_json(const PolyMatrix& m) {
    Json j;
    j["field"] = field_to_json(m.field());
    j["n"] = m.rows();
    j["k"] = m.cols();
    j["colDegs"] = m.col_degs();
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            Json coeffs = Json::array();
            for (const auto& s : m.entry(i, c).coeffs()) coeffs.push_back(scalar_to_json(s));
            row.push_back(std::move(coeffs));
        }
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

PolyMatrix polymatrix_from_json(const Json& j) {
    const Field field = field_from_json(member(j, "field"));
    const std::size_t n = as_count(member(j, "n"), "n");
    const std::size_t k = as_count(member(j, "k"), "k");
    const Json& degs_json = member(j, "colDegs");
    if (!degs_json.is_array() || degs_json.size() != k) bad("colDegs must be an array of length k");
    std::vector<int> degs;
    for (const auto& d : degs_json) degs.push_back(static_cast<int>(as_count(d, "column degree")));
    const Json& rows = member(j, "entries");
    if (!rows.is_array() || rows.size() != n) bad("entries must have n rows");
    std::vector<BinaryForm> entries;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != k) bad("every entries row must have k columns");
        for (std::size_t c = 0; c < k; ++c) {
            const Json& coeffs = row[c];
            if (!coeffs.is_array() || coeffs.size() != static_cast<std::size_t>(degs[c]) + 1)
                bad("entry in column " + std::to_string(c) + " needs " + std::to_string(degs[c] + 1) + " coefficients");
            std::vector<Scalar> cs;
            for (const auto& v : coeffs) cs.push_back(scalar_from_json(field, v));
            entries.emplace_back(field, degs[c], std::move(cs));
        }
    }
    return PolyMatrix(field, n, std::move(degs), std::move(entries));
}

Json subspace_to_json(const LinearSubspace& s) {
    Json j;
    j["field"] = field_to_json(s.field());
    j["n"] = s.ambient_dim();
    Json basis = Json::array();
    for (const auto& v : s.basis()) {
        Json row = Json::array();
        for (const auto& x : v) row.push_back(scalar_to_json(x));
        basis.push_back(std::move(row));
    }
    j["basis"] = std::move(basis);
    return j;
}

LinearSubspace subspace_from_json(const Json& j) {
    const Field field = field_from_json(member(j, "field"));
    const std::size_t n = as_count(member(j, "n"), "n");
    const Json& basis = member(j, "basis");
    if (!basis.is_array()) bad("basis must be an array");
    std::vector<std::vector<Scalar>> vecs;
    for (const auto& v : basis) {
        if (!v.is_array()) bad("basis vectors must be arrays");
        std::vector<Scalar> row;
        for (const auto& x : v) row.push_back(scalar_from_json(field, x));
        vecs.push_back(std::move(row));
    }
    try {
        return LinearSubspace(field, n, std::move(vecs));
    } catch (const Error& e) {
        bad(std::string("bad subspace: ") + e.what());
    }
}

Json class_to_json(const DivisorClass& c) { return Json::array({c.d, c.y}); }

Json slope_to_json(const Slope& s) {
    if (s.infinite || s.den != 1) return s.to_string();
    return s.num;
}

Json cones_to_json(const QuotParams& p, const EffectiveCone& eff) {
    Json j;
    j["params"] = params_json(p);
    j["basis"] = "DY";
    const Cone2 nef = nef_cone(p);
    j["nef"] = pair_json(nef);
    Json e;
    e["unb"] = generator_json(eff.unb);
    e["deg"] = generator_json(eff.deg);
    j["eff"] = std::move(e);
    j["c1"] = mult_json(eff.c1);
    j["c2"] = eff.c2 ? Json(*eff.c2) : Json(nullptr);
    Json slopes;
    slopes["nef"] = slopes_json(nef);
    slopes["eff"] = slopes_json(eff.cone);
    j["slopes"] = std::move(slopes);
    return j;
}

Json trial_to_json(const TrialReport& t) {
    Json j;
    j["kind"] = t.kind;
    j["params"] = params_json(t.params);
    j["vec"] = t.vec;
    j["seed"] = t.seed;
    j["measured"] = t.degenerate ? Json(nullptr) : Json(t.measured);
    j["predicted"] = t.predicted;
    j["agreed"] = t.agreed;
    j["degenerate"] = t.degenerate;
    return j;
}

Json theorem1_to_json(const Theorem1Report& rep) {
    Json j = cones_to_json(rep.params, rep.formula);
    Json solved;
    solved["unb"] = solved_json(rep.unb);
    solved["deg"] = solved_json(rep.deg);
    solved["nef_in_eff"] = rep.nef_in_eff;
    if (rep.params.r == 1) solved["r1_class_is_D"] = rep.r1_class_is_D;
    j["solved"] = std::move(solved);
    j["agrees"] = rep.agrees;
    return j;
}

Json split_to_json(const SplitAnalysis& a) {
    Json j;
    j["degrees"] = a.splitting.degrees;
    j["torsion"] = a.splitting.torsion;
    j["locally_free"] = a.locally_free;
    auto opt = [&](const char* key, const std::optional<bool>& v) {
        if (v) j[key] = *v;
    };
    opt("unbalanced", a.unbalanced);
    opt("scroll_degenerate", a.scroll_degenerate);
    opt("support_distinct", a.support_distinct);
    opt("directrix_meets", a.directrix_meets);
    if (!a.notes.empty()) j["notes"] = a.notes;
    return j;
}

Json suite_to_json(const SuiteResult& s) {
    Json j;
    j["suite"] = s.name;
    j["total"] = s.total;
    j["passed"] = s.passed;
    j["ok"] = s.ok();
    Json fails = Json::array();
    for (std::size_t i = 0; i < s.failures.size(); ++i) {
        Json f;
        f["reason"] = s.failures[i];
        f["matrix"] = polymatrix_to_json(s.counterexamples[i]);
        fails.push_back(std::move(f));
    }
    j["failures"] = std::move(fails);
    return j;
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        bad(std::string("invalid JSON: ") + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str());
}

} // namespace quotcone
