#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "workbench/numcore.hpp"
#include "workbench/random.hpp"

using namespace workbench;
using namespace workbench::numcore;

TEST(Eval, LinearMonomial) { EXPECT_EQ(eval(HoloPoly{0.0, 1.0}, 0.5), cplx(0.5)); }

TEST(Eval, Constant) {
    for (cplx z : {cplx{0.0}, cplx{0.3, -0.7}, cplx{-1.0}}) EXPECT_EQ(eval(HoloPoly{1.0}, z), cplx(1.0));
}

TEST(Eval, SquareAtHalfI) {
    const cplx z{0.0, 0.5};
    const cplx expected = z * z;  // direct squaring
    EXPECT_NEAR(std::abs(eval(HoloPoly{0.0, 0.0, 1.0}, z) - expected), 0.0, 1e-15);
    EXPECT_NEAR(eval(HoloPoly{0.0, 0.0, 1.0}, z).real(), -0.25, 1e-15);
}

TEST(HoloPolyType, DegreeAndCenterValue) {
    const HoloPoly p{cplx{0.25, -1.0}, 2.0, 0.0, 3.0};
    EXPECT_EQ(p.degree(), 3);
    EXPECT_EQ(p(0.0), cplx(0.25, -1.0));
    EXPECT_EQ(p[7], cplx(0.0));
}

TEST(HoloPolyType, AlgebraMatchesPointwise) {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<cplx> a(5), b(4);
        for (auto& c : a) c = rng.complex();
        for (auto& c : b) c = rng.complex();
        const HoloPoly p(a), q(b);
        const cplx z = rng.in_disc(1.0);
        const cplx sum = p(z) + q(z);
        const cplx prod = p(z) * q(z);
        EXPECT_LE(std::abs((p + q)(z) - sum), 1e-12 * std::max(1.0, std::abs(sum)));
        EXPECT_LE(std::abs((p * q)(z) - prod), 1e-12 * std::max(1.0, std::abs(prod)));
    }
}

TEST(HoloPolyType, Derivative) {
    const HoloPoly p{1.0, 2.0, 3.0};
    EXPECT_EQ(p.derivative(), (HoloPoly{2.0, 6.0}));
    EXPECT_EQ(HoloPoly{5.0}.derivative(), HoloPoly{0.0});
}

TEST(Quadrature, UnitMass) {
    const auto q = build_disc_quadrature(0.0, 16, 32);
    double s = 0.0;
    for (double w : q.weights) s += w;
    EXPECT_NEAR(s, 1.0, 1e-12);
}

TEST(Quadrature, SecondMomentAlphaZero) {
    const auto q = build_disc_quadrature(0.0, 16, 32);
    const auto f = sample(q, [](cplx z) { return std::norm(z); });
    const double oracle_value = oracle::simpson([](double r) { return 2.0 * r * r * r; }, 0.0, 1.0);
    EXPECT_NEAR(integrate(f, q).real(), oracle_value, 1e-10);
    EXPECT_NEAR(oracle_value, 0.5, 1e-12);
}

TEST(Quadrature, NormalizerAlphaOne) {
    // c_alpha = Gamma(n + alpha + 1) / (n! Gamma(alpha + 1)) at n = 1.
    EXPECT_NEAR(weight_normalizer(1.0), std::tgamma(3.0) / std::tgamma(2.0), 1e-14);
    EXPECT_NEAR(weight_normalizer(1.0), 2.0, 1e-14);
}

TEST(Quadrature, RejectsBadParameters) {
    EXPECT_THROW(build_disc_quadrature(-0.5, 16, 32), std::invalid_argument);
    EXPECT_THROW(build_disc_quadrature(0.0, 3, 32), std::invalid_argument);
    EXPECT_THROW(build_disc_quadrature(0.0, 16, 7), std::invalid_argument);
}

class QuadratureMoments : public ::testing::TestWithParam<double> {};

TEST_P(QuadratureMoments, MatchRadialOracle) {
    const double alpha = GetParam();
    const auto q = build_disc_quadrature(alpha, 32, 64);
    double mass = 0.0;
    for (double w : q.weights) mass += w;
    EXPECT_NEAR(mass, 1.0, 1e-10);
    for (int k = 0; k <= q.max_cutoff(); ++k) {
        const auto f = sample(q, [k](cplx z) { return std::pow(std::norm(z), k); });
        EXPECT_NEAR(integrate(f, q).real(), oracle::radial_moment(alpha, k), 1e-10) << "k=" << k;
        EXPECT_NEAR(weighted_moment(alpha, k), oracle::radial_moment(alpha, k), 1e-10);
    }
}

INSTANTIATE_TEST_SUITE_P(IntegerWeights, QuadratureMoments, ::testing::Values(0.0, 1.0, 2.0, 3.0));

TEST(Quadrature, MonomialExactness) {
    const auto q = build_disc_quadrature(0.0, 32, 64);
    const int n = q.max_cutoff();
    for (int j = 0; j <= n; ++j)
        for (int k = 0; k <= n; ++k) {
            const auto f = sample(q, [j, k](cplx z) { return std::pow(z, j) * std::pow(std::conj(z), k); });
            const double expected = j == k ? 1.0 / (j + 1) : 0.0;
            EXPECT_NEAR(std::abs(integrate(f, q) - expected), 0.0, 1e-10) << j << "," << k;
        }
}

TEST(InnerProduct, Examples) {
    const auto q = build_disc_quadrature(0.0, 16, 64);
    const auto one = sample(q, [](cplx) { return cplx{1.0}; });
    EXPECT_NEAR(std::abs(inner_product(one, one, q) - 1.0), 0.0, 1e-12);
    for (int k = 0; k <= 8; ++k) {
        const auto zk = sample(q, [k](cplx z) { return std::pow(z, k); });
        EXPECT_NEAR(std::abs(inner_product(zk, zk, q) - oracle::radial_moment(0.0, k)), 0.0, 1e-10);
    }
    const auto z1 = sample(q, [](cplx z) { return z; });
    const auto z2 = sample(q, [](cplx z) { return z * z; });
    EXPECT_NEAR(std::abs(inner_product(z1, z2, q)), 0.0, 1e-12);
}

TEST(InnerProduct, ExactConjugateSymmetry) {
    const auto q = build_disc_quadrature(0.0, 8, 16);
    Rng rng(3);
    std::vector<cplx> f(q.size()), g(q.size());
    for (auto& v : f) v = rng.complex();
    for (auto& v : g) v = rng.complex();
    EXPECT_EQ(inner_product(f, g, q), std::conj(inner_product(g, f, q)));
}

TEST(InnerProduct, LengthMismatch) {
    const auto q = build_disc_quadrature(0.0, 8, 16);
    std::vector<cplx> f(q.size()), g(q.size() - 1);
    EXPECT_THROW(inner_product(f, g, q), std::invalid_argument);
}

TEST(BoundaryFourier, SingleMode) {
    const auto b = BoundaryGrid::sample([](cplx x) { return x; }, 64);
    const auto c = boundary_fourier(b);
    EXPECT_EQ(c.lo(), -31);
    EXPECT_EQ(c.hi(), 32);
    for (int k = c.lo(); k <= c.hi(); ++k) EXPECT_NEAR(std::abs(c.at(k) - (k == 1 ? 1.0 : 0.0)), 0.0, 1e-12) << k;
}

TEST(BoundaryFourier, ConjugateMode) {
    const auto c = boundary_fourier(BoundaryGrid::sample([](cplx x) { return std::conj(x); }, 32));
    EXPECT_NEAR(std::abs(c.at(-1) - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(c.at(1)), 0.0, 1e-12);
}

TEST(BoundaryFourier, MatchesDirectSum) {
    const auto b = BoundaryGrid::sample([](cplx x) { return 2.0 + 3.0 * x * x; }, 16);
    const auto c = boundary_fourier(b);
    for (int k = c.lo(); k <= c.hi(); ++k) EXPECT_NEAR(std::abs(c.at(k) - oracle::direct_dft(b.samples(), k)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(c.at(0) - 2.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(c.at(2) - 3.0), 0.0, 1e-12);
}

TEST(BoundaryFourier, RejectsNonPowerOfTwo) {
    EXPECT_THROW(BoundaryGrid(std::vector<cplx>(12)), std::invalid_argument);
    EXPECT_THROW(BoundaryGrid::sample([](cplx x) { return x; }, 0), std::invalid_argument);
}

TEST(BoundaryFourier, SingleBinForEveryLowMode) {
    constexpr std::size_t m = 32;
    for (int k = 0; k < static_cast<int>(m / 2); ++k) {
        const auto c = boundary_fourier(BoundaryGrid::sample([k](cplx x) { return std::pow(x, k); }, m));
        for (int j = c.lo(); j <= c.hi(); ++j) EXPECT_NEAR(std::abs(c.at(j) - (j == k ? 1.0 : 0.0)), 0.0, 1e-12);
    }
}

TEST(BoundaryFourier, InversionAndParseval) {
    Rng rng(11);
    for (std::size_t m : {8u, 64u, 256u}) {
        std::vector<cplx> s(m);
        for (auto& v : s) v = rng.complex();
        const BoundaryGrid b(s);
        const auto c = boundary_fourier(b);
        const auto back = synthesize(c, m);
        EXPECT_LE(oracle::max_abs_diff(back.samples(), s), 1e-12);
        double lhs = 0.0, rhs = 0.0;
        for (const auto& v : s) lhs += std::norm(v) / static_cast<double>(m);
        for (const auto& v : c.values()) rhs += std::norm(v);
        EXPECT_NEAR(lhs, rhs, 1e-10);
    }
}

TEST(FourierCoeffsType, AccessAndRange) {
    const auto c = FourierCoeffs::from_terms({{-1, 2.0}, {3, cplx{0.0, 1.0}}}, 3);
    EXPECT_EQ(c.lo(), -3);
    EXPECT_EQ(c.hi(), 3);
    EXPECT_EQ(c.at(-1), cplx(2.0));
    EXPECT_EQ(c.get(10), cplx(0.0));
    EXPECT_THROW(c.at(4), std::out_of_range);
    EXPECT_THROW(FourierCoeffs::from_terms({{5, 1.0}}, 3), std::invalid_argument);
}

TEST(CirclePoint, QuarterPointsExact) {
    EXPECT_EQ(circle_point(0, 8), cplx(1.0, 0.0));
    EXPECT_EQ(circle_point(2, 8), cplx(0.0, 1.0));
    EXPECT_EQ(circle_point(4, 8), cplx(-1.0, 0.0));
    EXPECT_EQ(circle_point(6, 8), cplx(0.0, -1.0));
}
