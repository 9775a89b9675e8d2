#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quotcone/error.hpp"

namespace quotcone {

/// (n, r, d) for the Quot scheme of rank-r, degree-d quotients of O^n on P^1,
/// with the derived balanced-partition data.
struct QuotParams {
    int n = 0;
    int r = 0;
    int d = 0;
    int k = 0;                 ///< n - r, rank of the universal subsheaf
    int d1 = 0;                ///< floor(d / k)
    std::optional<int> l1;     ///< k(d1 + 1) - d, only when k does not divide d
    std::optional<int> d2;     ///< floor(d / r), only when r > 0
    std::optional<int> l2;     ///< r(d2 + 1) - d, only when r > 0 and r does not divide d
    std::vector<int> m;        ///< most balanced partition of d into k parts (nondecreasing)
    std::vector<int> nvec;     ///< most balanced partition of d into r parts (empty if r = 0)

    bool k_divides_d() const { return d % k == 0; }
    bool r_divides_d() const { return r > 0 && d % r == 0; }

    friend bool operator==(const QuotParams&, const QuotParams&) = default;
};

/// ParamError unless n >= 2, 0 <= r <= n - 2, d >= 1.
QuotParams make_params(int n, int r, int d);

/// Most balanced partition of `total` into `parts` parts, smaller parts first.
std::vector<int> balanced_partition(int total, int parts);

int ceil_div(int a, int b);

/// Integer class dCoef * D + yCoef * Y in Pic R = Z^2.
struct DivisorClass {
    std::int64_t d = 0;
    std::int64_t y = 0;

    bool is_zero() const { return d == 0 && y == 0; }
    /// gcd(|d|, |y|), 0 for the zero class.
    std::int64_t content() const;
    DivisorClass primitive() const;

    friend DivisorClass operator+(DivisorClass a, DivisorClass b) { return {a.d + b.d, a.y + b.y}; }
    friend DivisorClass operator-(DivisorClass a, DivisorClass b) { return {a.d - b.d, a.y - b.y}; }
    friend DivisorClass operator*(std::int64_t c, DivisorClass a) { return {c * a.d, c * a.y}; }
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

    std::string to_string() const;
};

/// a.d * b.y - a.y * b.d
std::int64_t cross(DivisorClass a, DivisorClass b);

inline DivisorClass class_D() { return {1, 0}; }
inline DivisorClass class_Y() { return {0, 1}; }

/// Slope yCoef / dCoef in lowest terms; dCoef = 0 is the vertical slope.
struct Slope {
    bool infinite = false;
    std::int64_t num = 0;
    std::int64_t den = 1;

    friend bool operator==(const Slope&, const Slope&) = default;
    bool operator<(const Slope& other) const;
    std::string to_string() const;
};

Slope slope_of(DivisorClass ray);

/// Strictly convex 2D cone spanned counterclockwise from first() to second().
class Cone2 {
public:
    /// Normalizes both rays to primitive vectors and orders them
    /// counterclockwise. DegenerateCone if a ray is zero or the two are parallel.
    static Cone2 spanned_by(DivisorClass a, DivisorClass b);

    DivisorClass first() const { return first_; }
    DivisorClass second() const { return second_; }

    friend bool operator==(const Cone2&, const Cone2&) = default;

private:
    Cone2(DivisorClass a, DivisorClass b) : first_(a), second_(b) {}

    DivisorClass first_;
    DivisorClass second_;
};

bool cone_contains(const Cone2& cone, DivisorClass x);
bool cone_subset(const Cone2& inner, const Cone2& outer);
/// Slopes of the two boundary rays, ascending, with the vertical slope last.
std::pair<Slope, Slope> boundary_slopes(const Cone2& cone);

Cone2 nef_cone(const QuotParams& p);

/// One generator of the effective cone: a primitive ray and the positive
/// integer multiplier giving the divisor class. `mult` empty means the
/// multiplier is an unknown positive integer.
struct Generator {
    DivisorClass ray;
    std::optional<std::int64_t> mult;
    bool empty = false; ///< the class is zero (r = 0, d = 1)

    std::optional<DivisorClass> divisor_class() const;
};

/// D_unb: ray (-1, d + ceil(d/k)) with c1 = 1 (k | d, r > 0), d1 (l1 + 1)
/// (k does not divide d), or unknown (r = 0, k | d). UnsupportedRegime when
/// k does not divide d and d1 = 0.
Generator unbalanced_generator(const QuotParams& p);

/// D_deg: ray (1, -d + ceil(d/r)) with c2 = 1 (r | d) or d2 (l2 + 1), or for
/// r = 0 the class 2(d-1) Y (ray Y, multiplier 2(d-1)). Flagged empty when
/// the class is zero: r = 0 with d = 1, or 0 < d < r.
Generator degenerate_generator(const QuotParams& p);

struct EffectiveCone {
    Cone2 cone;
    Generator unb;
    Generator deg;
    std::optional<std::int64_t> c1; ///< empty = unknown positive
    std::optional<std::int64_t> c2; ///< empty when r = 0
};

/// UnsupportedRegime as for unbalanced_generator, EmptyRay when D_deg is zero.
EffectiveCone effective_cone(const QuotParams& p);

/// Coordinates (u, v) in the basis c1(B_{d-1}), c1(B_d) - c1(B_{d-1}):
/// u (-1, 2d) + v (0, 1).
DivisorClass stromme_to_DY(const QuotParams& p, DivisorClass uv);
DivisorClass DY_to_stromme(const QuotParams& p, DivisorClass dy);

} // namespace quotcone
