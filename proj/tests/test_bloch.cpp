#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "workbench/bloch.hpp"
#include "workbench/random.hpp"

using namespace workbench;
using namespace workbench::bloch;

namespace {

HoloPoly random_poly(Rng& rng, int deg, double scale = 1.0) {
    std::vector<cplx> c(static_cast<std::size_t>(deg + 1));
    for (auto& v : c) v = rng.complex(scale);
    return HoloPoly(c);
}

// Independent 1-D oracle: max over r in [0, 1] of (1 - r^2)^alpha * g(r) by
// golden-section search on a unimodal profile.
template <class F>
double golden_max(F f, double lo, double hi) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    for (int i = 0; i < 200; ++i) {
        const double c = b - phi * (b - a), d = a + phi * (b - a);
        if (f(c) > f(d)) b = d; else a = c;
    }
    return f(0.5 * (a + b));
}

}  // namespace

TEST(Seminorm, LinearAttainsAtCenter) {
    const auto r = bloch_seminorm(HoloPoly{0.0, 1.0}, 1.0);
    EXPECT_NEAR(r.seminorm, 1.0, 1e-12);
    EXPECT_NEAR(std::abs(r.argmax), 0.0, 1e-12);
    EXPECT_NEAR(r.norm, 1.0, 1e-12);
}

TEST(Seminorm, SquareMatchesCalculus) {
    const double oracle_value = golden_max([](double r) { return 2.0 * r * (1.0 - r * r); }, 0.0, 1.0);
    const auto rep = bloch_seminorm(HoloPoly{0.0, 0.0, 1.0}, 1.0);
    EXPECT_NEAR(rep.seminorm, oracle_value, 1e-6);
    EXPECT_NEAR(rep.seminorm, 4.0 / (3.0 * std::sqrt(3.0)), 1e-6);
    EXPECT_NEAR(std::abs(rep.argmax), 1.0 / std::sqrt(3.0), 1e-3);
    EXPECT_LT(rep.refinement_change, 1e-6);
}

TEST(Seminorm, ConstantHasZeroSeminorm) {
    const auto r = bloch_seminorm(HoloPoly{cplx{3.0, -4.0}}, 1.0);
    EXPECT_EQ(r.seminorm, 0.0);
    EXPECT_NEAR(r.norm, 5.0, 1e-12);
}

TEST(Seminorm, OtherWeights) {
    // f = z^3, alpha = 2: 3 r^2 (1 - r^2)^2 peaks at r^2 = 1/3 with value 4/9.
    EXPECT_NEAR(bloch_seminorm(HoloPoly{0.0, 0.0, 0.0, 1.0}, 2.0).seminorm, 4.0 / 9.0, 1e-6);
    const double o = golden_max([](double r) { return 2.0 * r * std::pow(1.0 - r * r, 0.5); }, 0.0, 1.0);
    EXPECT_NEAR(bloch_seminorm(HoloPoly{0.0, 0.0, 1.0}, 0.5).seminorm, o, 1e-6);
}

TEST(Seminorm, ReportInvariants) {
    Rng rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = random_poly(rng, 4);
        const auto r = bloch_seminorm(f, 1.0, SupGrid{32, 32});
        EXPECT_GE(r.seminorm, 0.0);
        EXPECT_GE(r.norm, std::abs(f(0.0)));
        EXPECT_LT(std::abs(r.argmax), 1.0);
    }
}

TEST(Seminorm, RejectsBadInput) {
    EXPECT_THROW(bloch_seminorm(HoloPoly{0.0, 1.0}, 0.0), std::invalid_argument);
    EXPECT_THROW(bloch_seminorm(HoloPoly{0.0, 1.0}, 1.0, SupGrid{0, 16}), std::invalid_argument);
    EXPECT_THROW(bloch_seminorm(HoloPoly{0.0, 1.0}, 1.0, SupGrid{16, 0}), std::invalid_argument);
}

TEST(Mobius, FixedValues) {
    Rng rng(22);
    for (int i = 0; i < 20; ++i) {
        const cplx a = rng.in_disc(0.99);
        EXPECT_NEAR(std::abs(mobius(a, 0.0) - a), 0.0, 1e-15);
        EXPECT_NEAR(std::abs(mobius(a, a)), 0.0, 1e-15);
    }
}

TEST(Mobius, Involution) {
    Rng rng(23);
    for (int i = 0; i < 100; ++i) {
        const cplx a = rng.in_disc(0.95), z = rng.in_disc(0.95);
        EXPECT_NEAR(std::abs(mobius(a, mobius(a, z)) - z), 0.0, 1e-12);
    }
}

TEST(Mobius, DomainErrors) {
    EXPECT_THROW(mobius(1.0, 0.0), std::domain_error);
    EXPECT_THROW(mobius(0.5, cplx{1.5, 0.0}), std::domain_error);
}

TEST(InvariantGradient, Examples) {
    EXPECT_NEAR(invariant_gradient_norm(HoloPoly{0.0, 1.0}, 0.0), 1.0, 1e-15);
    EXPECT_NEAR(invariant_gradient_norm(HoloPoly{0.0, 1.0}, 0.5), 0.75, 1e-15);
    EXPECT_THROW(invariant_gradient_norm(HoloPoly{0.0, 1.0}, 1.0), std::domain_error);
}

TEST(InvariantGradient, ChainRuleThroughMobius) {
    Rng rng(24);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = random_poly(rng, 5);
        const cplx z = rng.in_disc(0.9);
        // |(f o phi_z)'(0)| by a centred difference, step small against 1 - |z|.
        const double h = 1e-5;
        const cplx d = (f(mobius(z, cplx{h})) - f(mobius(z, cplx{-h}))) / (2.0 * h);
        EXPECT_NEAR(invariant_gradient_norm(f, z), std::abs(d), 1e-7 * std::max(1.0, std::abs(d)));
    }
}

TEST(LittleBloch, PolynomialsAndZero) {
    const std::vector<double> radii{0.9, 0.99, 0.999, 0.9999, 0.99999};
    EXPECT_TRUE(little_bloch_test(HoloPoly{1.0, -2.0, 0.5, 3.0}, radii, 1e-3));
    EXPECT_TRUE(little_bloch_test(HoloPoly{0.0}, radii, 1e-3));
}

TEST(LittleBloch, TruncatedLogarithm) {
    std::vector<cplx> c(41, cplx{0.0});
    for (int k = 1; k <= 40; ++k) c[static_cast<std::size_t>(k)] = 1.0 / k;
    const HoloPoly f(c);
    const std::vector<double> radii{0.9, 0.99, 0.999, 0.9999, 0.99999};
    const auto rep = little_bloch_report(f, radii, 1e-3);
    ASSERT_EQ(rep.ring_maxima.size(), radii.size());
    // At r = 0.9 the maximum sits at angle 0: (1 - r^2) sum r^{k-1}.
    double oracle_value = 0.0;
    for (int k = 1; k <= 40; ++k) oracle_value += std::pow(0.9, k - 1);
    EXPECT_NEAR(rep.ring_maxima[0], (1.0 - 0.81) * oracle_value, 1e-9);
    EXPECT_TRUE(rep.member);
    // The non-polynomial log would plateau at 1 near the boundary; a tight tolerance refuses.
    EXPECT_FALSE(little_bloch_test(f, {0.9, 0.99, 0.999}, 1e-3));
}

TEST(LittleBloch, RejectsBadRadii) {
    EXPECT_THROW(little_bloch_test(HoloPoly{0.0, 1.0}, {0.5, 0.4}, 1e-3), std::invalid_argument);
    EXPECT_THROW(little_bloch_test(HoloPoly{0.0, 1.0}, {0.5, 1.0}, 1e-3), std::invalid_argument);
}

TEST(Multiplier, Examples) {
    const auto set = multiplier_test_set();
    ASSERT_EQ(set.size(), 20u);
    EXPECT_NEAR(multiplier_norm_report(HoloPoly{1.0}, set, 1.0, SupGrid{32, 32}).ratio, 1.0, 1e-12);
    const double zr = bloch_norm(multiplier_apply(HoloPoly{0.0, 1.0}, HoloPoly{1.0}), 1.0) / bloch_norm(HoloPoly{1.0}, 1.0);
    EXPECT_NEAR(zr, 1.0, 1e-9);
}

TEST(Multiplier, HomogeneityAndAdditivity) {
    Rng rng(25);
    const SupGrid g{32, 32};
    for (int trial = 0; trial < 10; ++trial) {
        const auto phi = random_poly(rng, 3);
        const auto f = random_poly(rng, 3);
        const cplx a = rng.complex();
        const double lhs = bloch_norm(multiplier_apply(a * phi, f), 1.0, g);
        const double rhs = std::abs(a) * bloch_norm(multiplier_apply(phi, f), 1.0, g);
        EXPECT_NEAR(lhs, rhs, 1e-10 * std::max(1.0, rhs));
        const auto psi = random_poly(rng, 3);
        const auto sum = multiplier_apply(phi + psi, f);
        const auto split = multiplier_apply(phi, f) + multiplier_apply(psi, f);
        for (int k = 0; k <= sum.degree(); ++k) EXPECT_NEAR(std::abs(sum[k] - split[k]), 0.0, 1e-12);
        EXPECT_NEAR(bloch_norm(sum, 1.0, g), bloch_norm(split, 1.0, g), 1e-10);
    }
}

TEST(Multiplier, LeibnizCoefficientwise) {
    Rng rng(26);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = random_poly(rng, 6), g = random_poly(rng, 5);
        const auto lhs = (f * g).derivative();
        const auto rhs = f.derivative() * g + f * g.derivative();
        for (int k = 0; k <= lhs.degree(); ++k) EXPECT_NEAR(std::abs(lhs[k] - rhs[k]), 0.0, 1e-12);
    }
}

TEST(ProductBound, RandomPairs) {
    Rng rng(27);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = random_poly(rng, 4), g = random_poly(rng, 4);
        const auto r = product_bound_check(f, g, 1.0, SupGrid{32, 32});
        EXPECT_TRUE(r.holds) << r.lhs << " " << r.rhs;
    }
}

TEST(BoundarySup, MaximumPrinciple) {
    EXPECT_NEAR(boundary_sup(HoloPoly{1.0, 1.0}), 2.0, 1e-12);
    EXPECT_NEAR(boundary_sup(HoloPoly{0.0, 0.0, 0.0, cplx{0.0, -2.0}}), 2.0, 1e-12);
}
