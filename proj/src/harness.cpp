#include "quotcone/harness.hpp"

#include <algorithm>

namespace quotcone {

namespace {

Field field_for_trial(std::size_t i, std::uint64_t prime) {
    return i % 2 == 0 ? Field::prime(prime) : Field::rational();
}

BinaryForm random_nonzero_form(const Field& field, int degree, Rng& rng) {
    while (true) {
        BinaryForm f = random_form(field, degree, rng);
        if (!f.is_zero()) return f;
    }
}

void record_failure(SuiteResult& res, std::string why, const PolyMatrix& phi) {
    res.failures.push_back(std::move(why));
    res.counterexamples.push_back(phi);
}

} // namespace

PolyMatrix random_poly_matrix(const Field& field, std::size_t n, const std::vector<int>& col_degs, Rng& rng,
                              std::uint64_t zero_num, std::uint64_t zero_den) {
    PolyMatrix m(field, n, col_degs);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < col_degs.size(); ++j) {
            BinaryForm f(field, col_degs[j]);
            for (int t = 0; t <= col_degs[j]; ++t) {
                if (zero_num > 0 && rng.chance(zero_num, zero_den)) continue;
                f.set_coeff(t, random_scalar(field, rng));
            }
            m.set(i, j, std::move(f));
        }
    }
    return m;
}

Matrix<Scalar> random_invertible(const Field& field, std::size_t n, Rng& rng) {
    while (true) {
        Matrix<Scalar> g(n, n, Scalar::zero(field));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) g(i, j) = random_scalar(field, rng);
        if (rank(g) == n) return g;
    }
}

PolyMatrix left_multiply(const Matrix<Scalar>& g, const PolyMatrix& phi) {
    if (g.rows() != phi.rows() || g.cols() != phi.rows()) fail(ErrorKind::ShapeError, "change of basis has the wrong size");
    PolyMatrix out(phi.field(), phi.rows(), phi.col_degs());
    for (std::size_t i = 0; i < phi.rows(); ++i) {
        for (std::size_t j = 0; j < phi.cols(); ++j) {
            BinaryForm acc(phi.field(), phi.col_degree(j));
            for (std::size_t l = 0; l < phi.rows(); ++l)
                if (!g(i, l).is_zero()) acc += phi.entry(l, j).scaled(g(i, l));
            out.set(i, j, std::move(acc));
        }
    }
    return out;
}

PolyMatrix twist_source(const PolyMatrix& phi, Rng& rng) {
    PolyMatrix out = phi;
    const std::size_t k = phi.cols();
    for (std::size_t j = 0; j < k; ++j) {
        const Scalar c = random_nonzero_scalar(phi.field(), rng);
        for (std::size_t i = 0; i < phi.rows(); ++i) out.set(i, j, out.entry(i, j).scaled(c));
    }
    if (k < 2) return out;
    for (std::size_t step = 0; step < 2 * k; ++step) {
        const auto src = static_cast<std::size_t>(rng.below(k));
        const auto dst = static_cast<std::size_t>(rng.below(k));
        const int gap = phi.col_degree(dst) - phi.col_degree(src);
        if (src == dst || gap < 0) continue;
        const BinaryForm h = random_form(phi.field(), gap, rng);
        for (std::size_t i = 0; i < phi.rows(); ++i) out.set(i, dst, out.entry(i, dst) + h * out.entry(i, src));
    }
    return out;
}

Prop41Instance sample_prop41_instance(std::uint64_t seed, const Field& field) {
    Rng rng(seed);
    const int d = 2 + static_cast<int>(rng.below(2));
    const int k = 2 + static_cast<int>(rng.below(2));
    const QuotParams p = make_params(k + d, d, d);
    const auto n = static_cast<std::size_t>(p.n);
    const auto mode = rng.below(3);
    while (true) {
        PolyMatrix phi(field, n, p.m);
        std::string name;
        if (mode == 0) {
            name = "balanced";
            phi = random_poly_matrix(field, n, p.m, rng);
        } else if (mode == 1) {
            name = "composition";
            std::vector<int> parts(static_cast<std::size_t>(k), 0);
            for (int u = 0; u < d; ++u) ++parts[rng.below(static_cast<std::uint64_t>(k))];
            phi = random_poly_matrix(field, n, parts, rng);
        } else {
            // A zero row puts a trivial summand in the quotient.
            name = "planted";
            PolyMatrix top = random_poly_matrix(field, n - 1, p.m, rng);
            PolyMatrix padded(field, n, p.m);
            for (std::size_t i = 0; i + 1 < n; ++i)
                for (std::size_t j = 0; j < top.cols(); ++j) padded.set(i, j, top.entry(i, j));
            phi = left_multiply(random_invertible(field, n, rng), padded);
        }
        if (is_generically_injective(phi) && is_locally_free(phi)) return {p, std::move(phi), std::move(name)};
    }
}

PlantedSplitting sample_planted_splitting(std::uint64_t seed, const Field& field) {
    Rng rng(seed);
    struct Block {
        int b;
        int t; ///< torsion folded into the block
    };
    std::vector<Block> free_blocks;
    const auto count = 1 + rng.below(3);
    for (std::uint64_t i = 0; i < count; ++i) {
        const int b = static_cast<int>(rng.below(4)) + (i == 0 ? 1 : 0);
        const int t = (b > 0 && rng.chance(1, 4)) ? 1 : 0;
        free_blocks.push_back({std::min(b, 3), t});
    }
    std::vector<int> torsion_blocks;
    for (auto i = rng.below(3); i > 0; --i) torsion_blocks.push_back(1 + static_cast<int>(rng.below(2)));

    std::size_t n = torsion_blocks.size();
    std::vector<int> col_degs;
    for (const auto& blk : free_blocks) {
        n += blk.b > 0 ? 2 : 1;
        if (blk.b > 0) col_degs.push_back(blk.b + blk.t);
    }
    for (int t : torsion_blocks) col_degs.push_back(t);

    PolyMatrix phi(field, n, col_degs);
    SplittingType expected;
    std::size_t row = 0, col = 0;
    for (const auto& blk : free_blocks) {
        expected.degrees.push_back(blk.b);
        if (blk.b == 0) {
            ++row;
            continue;
        }
        BinaryForm f(field, blk.b), g(field, blk.b);
        do {
            f = random_form(field, blk.b, rng);
            g = random_form(field, blk.b, rng);
        } while ((f.is_zero() && g.is_zero()) || bf_gcd(f, g).degree() != 0);
        if (blk.t > 0) {
            const BinaryForm h = random_nonzero_form(field, blk.t, rng);
            f = h * f;
            g = h * g;
            expected.torsion += blk.t;
        }
        phi.set(row, col, f);
        phi.set(row + 1, col, g);
        row += 2;
        ++col;
    }
    for (int t : torsion_blocks) {
        phi.set(row++, col++, random_nonzero_form(field, t, rng));
        expected.torsion += t;
    }
    std::sort(expected.degrees.begin(), expected.degrees.end());
    phi = left_multiply(random_invertible(field, n, rng), twist_source(phi, rng));
    return {std::move(phi), std::move(expected)};
}

PolyMatrix sample_conservation_matrix(std::uint64_t seed, const Field& field) {
    Rng rng(seed);
    while (true) {
        const auto n = static_cast<std::size_t>(1 + rng.below(6));
        const auto k = static_cast<std::size_t>(rng.below(n + 1));
        std::vector<int> degs;
        for (std::size_t j = 0; j < k; ++j) degs.push_back(static_cast<int>(rng.below(4)));
        PolyMatrix phi = random_poly_matrix(field, n, degs, rng, 3, 10);
        if (is_generically_injective(phi)) return phi;
    }
}

bool criterion_duality_holds(const PolyMatrix& phi) {
    const Scalar det = criterion_det(phi);
    const int r = static_cast<int>(phi.rows() - phi.cols());
    return det.is_zero() == (left_nullity(phi, phi.total_degree() / r - 1) > 0);
}

SuiteResult verify_prop41(std::size_t trials, std::uint64_t seed, const Field& field) {
    SuiteResult res;
    res.name = "prop41";
    for (std::size_t i = 0; i < trials; ++i) {
        const auto inst = sample_prop41_instance(derive_seed(seed, i), field);
        ++res.total;
        try {
            const bool unbalanced = is_unbalanced(quotient_splitting(inst.phi));
            const bool degenerate = scroll_degenerate(inst.phi);
            if (unbalanced == degenerate)
                ++res.passed;
            else
                record_failure(res, "trial " + std::to_string(i) + " (" + inst.mode + "): unbalanced=" +
                                        (unbalanced ? "true" : "false") + " degenerate=" +
                                        (degenerate ? "true" : "false"),
                               inst.phi);
        } catch (const Error& e) {
            record_failure(res, "trial " + std::to_string(i) + ": " + e.what(), inst.phi);
        }
    }
    return res;
}

SuiteResult verify_planted_splitting(std::size_t trials, std::uint64_t seed, std::uint64_t prime) {
    SuiteResult res;
    res.name = "splitting";
    for (std::size_t i = 0; i < trials; ++i) {
        const auto inst = sample_planted_splitting(derive_seed(seed, i), field_for_trial(i, prime));
        ++res.total;
        try {
            const SplittingType got = quotient_splitting(inst.phi);
            if (got == inst.expected)
                ++res.passed;
            else
                record_failure(res, "trial " + std::to_string(i) + ": recovered a different splitting type", inst.phi);
        } catch (const Error& e) {
            record_failure(res, "trial " + std::to_string(i) + ": " + e.what(), inst.phi);
        }
    }
    return res;
}

SuiteResult verify_conservation(std::size_t trials, std::uint64_t seed, std::uint64_t prime) {
    SuiteResult res;
    res.name = "conservation";
    for (std::size_t i = 0; i < trials; ++i) {
        const PolyMatrix phi = sample_conservation_matrix(derive_seed(seed, i), field_for_trial(i, prime));
        ++res.total;
        try {
            const SplittingType s = quotient_splitting(phi);
            int sum = s.torsion;
            for (int b : s.degrees) sum += b;
            const bool nonneg = std::all_of(s.degrees.begin(), s.degrees.end(), [](int b) { return b >= 0; });
            if (sum == phi.total_degree() && nonneg && s.degrees.size() == phi.rows() - phi.cols())
                ++res.passed;
            else
                record_failure(res, "trial " + std::to_string(i) + ": degree not conserved", phi);
        } catch (const Error& e) {
            record_failure(res, "trial " + std::to_string(i) + ": " + e.what(), phi);
        }
    }
    return res;
}

SuiteResult verify_criterion_duality(std::size_t prop41_trials, std::uint64_t prop41_seed, std::size_t planted_trials,
                                     std::uint64_t planted_seed, std::uint64_t prime) {
    SuiteResult res;
    res.name = "duality";
    auto check = [&](const PolyMatrix& phi, const std::string& label) {
        ++res.total;
        try {
            if (criterion_duality_holds(phi))
                ++res.passed;
            else
                record_failure(res, label + ": determinant and nullity disagree", phi);
        } catch (const Error& e) {
            record_failure(res, label + ": " + e.what(), phi);
        }
    };
    for (std::size_t i = 0; i < prop41_trials; ++i)
        check(sample_prop41_instance(derive_seed(prop41_seed, i), Field::prime(prime)).phi, "prop41 trial " + std::to_string(i));
    for (std::size_t i = 0; i < planted_trials; ++i) {
        const auto inst = sample_planted_splitting(derive_seed(planted_seed, i), field_for_trial(i, prime));
        const int r = static_cast<int>(inst.phi.rows() - inst.phi.cols());
        const int d = inst.phi.total_degree();
        if (r < 1 || d < 1 || d % r != 0) continue;
        check(inst.phi, "planted trial " + std::to_string(i));
    }
    return res;
}

} // namespace quotcone
