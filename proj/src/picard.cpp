#include "quotcone/picard.hpp"

#include <cstdlib>
#include <numeric>

namespace quotcone {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(std::llabs(a), std::llabs(b)); }

} // namespace

int ceil_div(int a, int b) { return (a + b - 1) / b; }

std::vector<int> balanced_partition(int total, int parts) {
    if (parts <= 0) return {};
    std::vector<int> out(static_cast<std::size_t>(parts), total / parts);
    const int extra = total % parts;
    for (int i = parts - extra; i < parts; ++i) ++out[static_cast<std::size_t>(i)];
    return out;
}

QuotParams make_params(int n, int r, int d) {
    if (n < 2) fail(ErrorKind::ParamError, "n must be at least 2");
    if (r < 0 || r > n - 2) fail(ErrorKind::ParamError, "r must lie in [0, n-2]");
    if (d < 1) fail(ErrorKind::ParamError, "d must be at least 1");
    QuotParams p;
    p.n = n;
    p.r = r;
    p.d = d;
    p.k = n - r;
    p.d1 = d / p.k;
    if (d % p.k != 0) p.l1 = p.k * (p.d1 + 1) - d;
    p.m = balanced_partition(d, p.k);
    if (r > 0) {
        p.d2 = d / r;
        if (d % r != 0) p.l2 = r * (*p.d2 + 1) - d;
        p.nvec = balanced_partition(d, r);
    }
    return p;
}

std::int64_t DivisorClass::content() const { return gcd64(d, y); }

DivisorClass DivisorClass::primitive() const {
    const auto g = content();
    if (g == 0) return *this;
    return {d / g, y / g};
}

std::string DivisorClass::to_string() const { return "(" + std::to_string(d) + "," + std::to_string(y) + ")"; }

std::int64_t cross(DivisorClass a, DivisorClass b) { return a.d * b.y - a.y * b.d; }

bool Slope::operator<(const Slope& other) const {
    if (infinite) return false;
    if (other.infinite) return true;
    return num * other.den < other.num * den;
}

std::string Slope::to_string() const {
    if (infinite) return "inf";
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Slope slope_of(DivisorClass ray) {
    if (ray.is_zero()) fail(ErrorKind::DegenerateCone, "slope of the zero ray");
    if (ray.d == 0) return {true, 0, 1};
    std::int64_t num = ray.y, den = ray.d;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const auto g = gcd64(num, den);
    return {false, num / g, den / g};
}

Cone2 Cone2::spanned_by(DivisorClass a, DivisorClass b) {
    if (a.is_zero() || b.is_zero()) fail(ErrorKind::DegenerateCone, "zero ray");
    a = a.primitive();
    b = b.primitive();
    const auto c = cross(a, b);
    if (c == 0) fail(ErrorKind::DegenerateCone, "parallel rays " + a.to_string() + " and " + b.to_string());
    return c > 0 ? Cone2(a, b) : Cone2(b, a);
}

bool cone_contains(const Cone2& cone, DivisorClass x) {
    return cross(cone.first(), x) >= 0 && cross(x, cone.second()) >= 0;
}

bool cone_subset(const Cone2& inner, const Cone2& outer) {
    return cone_contains(outer, inner.first()) && cone_contains(outer, inner.second());
}

std::pair<Slope, Slope> boundary_slopes(const Cone2& cone) {
    Slope a = slope_of(cone.first()), b = slope_of(cone.second());
    if (b < a) std::swap(a, b);
    return {a, b};
}

Cone2 nef_cone(const QuotParams& p) { return Cone2::spanned_by(class_Y(), {-1, 2 * p.d}); }

std::optional<DivisorClass> Generator::divisor_class() const {
    if (empty) return DivisorClass{};
    if (!mult) return std::nullopt;
    return *mult * ray;
}

Generator unbalanced_generator(const QuotParams& p) {
    Generator g;
    g.ray = {-1, p.d + ceil_div(p.d, p.k)};
    if (!p.k_divides_d()) {
        if (p.d1 == 0)
            fail(ErrorKind::UnsupportedRegime, "k does not divide d and d < k (d1 = 0): the D_unb constant vanishes");
        g.mult = static_cast<std::int64_t>(p.d1) * (*p.l1 + 1);
    } else if (p.r != 0) {
        g.mult = 1;
    }
    return g;
}

Generator degenerate_generator(const QuotParams& p) {
    Generator g;
    if (p.r == 0) {
        g.ray = class_Y();
        g.mult = 2 * (p.d - 1);
        g.empty = p.d == 1;
        return g;
    }
    g.ray = {1, -p.d + ceil_div(p.d, p.r)};
    g.mult = p.r_divides_d() ? 1 : static_cast<std::int64_t>(*p.d2) * (*p.l2 + 1);
    // d < r forces d2 = 0 and with it a zero multiplier.
    g.empty = *g.mult == 0;
    return g;
}

EffectiveCone effective_cone(const QuotParams& p) {
    Generator unb = unbalanced_generator(p);
    Generator deg = degenerate_generator(p);
    if (deg.empty)
        fail(ErrorKind::EmptyRay, p.r == 0 ? "D_deg = 2(d-1)Y vanishes for d = 1"
                                           : "D_deg multiplier d2 (l2 + 1) vanishes for d < r");
    std::optional<std::int64_t> c2;
    if (p.r > 0) c2 = deg.mult;
    return EffectiveCone{Cone2::spanned_by(unb.ray, deg.ray), unb, deg, unb.mult, c2};
}

DivisorClass stromme_to_DY(const QuotParams& p, DivisorClass uv) {
    // uv.d is the c1(B_{d-1}) coordinate, uv.y the c1(B_d) - c1(B_{d-1}) one.
    return {-uv.d, 2 * p.d * uv.d + uv.y};
}

DivisorClass DY_to_stromme(const QuotParams& p, DivisorClass dy) {
    const std::int64_t u = -dy.d;
    return {u, dy.y - 2 * p.d * u};
}

} // namespace quotcone
