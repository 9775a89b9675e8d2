#include "quotcone/random.hpp"

namespace quotcone {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(splitmix64(master) ^ (index * 0xd1b54a32d192ed03ULL + 1));
}

std::uint64_t Rng::below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
        v = engine_();
    } while (v >= limit);
    return v % bound;
}

long Rng::uniform(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Scalar random_scalar(const Field& field, Rng& rng) {
    if (field.is_prime()) return Scalar(field, static_cast<long>(rng.below(field.modulus())));
    return Scalar(field, rng.uniform(-kRationalBox, kRationalBox));
}

Scalar random_nonzero_scalar(const Field& field, Rng& rng) {
    while (true) {
        Scalar s = random_scalar(field, rng);
        if (!s.is_zero()) return s;
    }
}

BinaryForm random_form(const Field& field, int degree, Rng& rng) {
    std::vector<Scalar> cs;
    for (int t = 0; t <= degree; ++t) cs.push_back(random_scalar(field, rng));
    return BinaryForm(field, degree, std::move(cs));
}

UniPoly random_param_poly(const Field& field, int bound, Rng& rng) {
    std::vector<Scalar> cs;
    for (int t = 0; t <= bound; ++t) cs.push_back(random_scalar(field, rng));
    return UniPoly(field, std::move(cs));
}

} // namespace quotcone
