#pragma once

#include <cstdint>
#include <random>

#include "quotcone/binary_form.hpp"
#include "quotcone/uni_poly.hpp"

namespace quotcone {

/// Integer box [-kRationalBox, kRationalBox] for random rationals.
inline constexpr long kRationalBox = 9;

/// Seed of trial `index` under `master`, independent of scheduling order.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// mt19937_64 with unbiased bounded draws, so streams are reproducible
/// across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    long uniform(long lo, long hi);
    /// True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::mt19937_64 engine_;
};

/// Uniform over F_p, or uniform integer in the box for the rationals.
Scalar random_scalar(const Field& field, Rng& rng);
Scalar random_nonzero_scalar(const Field& field, Rng& rng);
BinaryForm random_form(const Field& field, int degree, Rng& rng);
/// Degree <= bound, every coefficient drawn independently.
UniPoly random_param_poly(const Field& field, int bound, Rng& rng);

} // namespace quotcone
