#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "workbench/bergman.hpp"
#include "workbench/random.hpp"

using namespace workbench;
using namespace workbench::bergman;
using numcore::build_disc_quadrature;
using numcore::sample;

namespace {

const DiscQuadrature& grid() {
    static const DiscQuadrature q = build_disc_quadrature(0.0, 64, 256);
    return q;
}

// Random symbol sum_{a,b <= deg} c_ab z^a conj(z)^b.
std::vector<cplx> random_symbol(Rng& rng, const DiscQuadrature& q, int deg) {
    std::vector<cplx> c;
    for (int a = 0; a <= deg; ++a)
        for (int b = 0; b <= deg; ++b) c.push_back(rng.complex());
    return sample(q, [&](cplx z) {
        cplx acc{0.0};
        std::size_t i = 0;
        for (int a = 0; a <= deg; ++a)
            for (int b = 0; b <= deg; ++b) acc += c[i++] * std::pow(z, a) * std::pow(std::conj(z), b);
        return acc;
    });
}

std::vector<cplx> conj_all(std::vector<cplx> v) {
    for (auto& x : v) x = std::conj(x);
    return v;
}

}  // namespace

TEST(Kernel, Examples) {
    Rng rng(1);
    for (int i = 0; i < 20; ++i) EXPECT_EQ(bergman_kernel(0.0, rng.in_disc(0.99)), cplx(1.0));
    EXPECT_NEAR(std::abs(bergman_kernel(0.5, 0.5) - 16.0 / 9.0), 0.0, 1e-15);
    const cplx z{0.0, 0.3}, u{0.4, 0.0};
    cplx series{0.0};
    for (int k = 0; k < 60; ++k) series += static_cast<double>(k + 1) * std::pow(z * std::conj(u), k);
    EXPECT_NEAR(std::abs(bergman_kernel(z, u) - series), 0.0, 1e-9);
}

TEST(Kernel, PoleRejected) {
    EXPECT_THROW(bergman_kernel(1.0, 1.0), std::domain_error);
    EXPECT_THROW(bergman_kernel(cplx{0.0, 1.0}, cplx{0.0, 1.0}), std::domain_error);
}

TEST(Norm, Examples) {
    const auto& q = grid();
    for (double p : {0.5, 1.0, 2.0, 4.0}) {
        const auto c = sample(q, [](cplx) { return cplx{0.0, -3.0}; });
        EXPECT_NEAR(bergman_norm(c, p, q), 3.0, 1e-12);
    }
    EXPECT_NEAR(bergman_norm(sample(q, [](cplx z) { return z; }), 2.0, q), std::sqrt(oracle::radial_moment(0.0, 1)), 1e-8);
    EXPECT_NEAR(bergman_norm(sample(q, [](cplx z) { return z * z * z; }), 2.0, q), 0.5, 1e-8);
}

TEST(Norm, IteratedMatchesDirect) {
    const auto& q = grid();
    Rng rng(2);
    const auto f = random_symbol(rng, q, 3);
    for (double p : {1.0, 2.0, 3.0}) EXPECT_NEAR(bergman_norm_iterated(f, p, q), bergman_norm(f, p, q), 1e-12);
}

TEST(Norm, LiteralReadingDiffersAwayFromPOne) {
    const auto& q = grid();
    const auto f = sample(q, [](cplx z) { return z; });
    EXPECT_NEAR(bergman_norm_literal(f, 1.0, q), bergman_norm(f, 1.0, q), 1e-12);
    // sum rho_i r_i = int r dA = 2/3, raised to 1/2.
    EXPECT_NEAR(bergman_norm_literal(f, 2.0, q), std::sqrt(2.0 / 3.0), 1e-10);
}

TEST(Norm, RejectsBadExponent) {
    const auto& q = grid();
    const auto f = sample(q, [](cplx z) { return z; });
    EXPECT_THROW(bergman_norm(f, 0.0, q), std::invalid_argument);
    EXPECT_THROW(bergman_norm(f, -1.0, q), std::invalid_argument);
}

TEST(Projection, Examples) {
    const auto& q = grid();
    const auto p2 = bergman_project(sample(q, [](cplx z) { return z * z; }), q, 8);
    for (int k = 0; k <= 8; ++k) EXPECT_NEAR(std::abs(p2[k] - (k == 2 ? 1.0 : 0.0)), 0.0, 1e-9);
    const auto pc = bergman_project(sample(q, [](cplx z) { return std::conj(z); }), q, 8);
    for (int k = 0; k <= 8; ++k) EXPECT_NEAR(std::abs(pc[k]), 0.0, 1e-9);
    // (k+1) int |u|^2 conj(u)^k dA: only k = 0 survives, value int |u|^2 dA.
    const auto pr = bergman_project(sample(q, [](cplx z) { return std::norm(z); }), q, 8);
    EXPECT_NEAR(std::abs(pr[0] - oracle::radial_moment(0.0, 1)), 0.0, 1e-9);
    for (int k = 1; k <= 8; ++k) EXPECT_NEAR(std::abs(pr[k]), 0.0, 1e-9);
}

TEST(Projection, FixesHolomorphicAndIdempotent) {
    const auto& q = grid();
    Rng rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<cplx> c(17);
        for (auto& v : c) v = rng.complex();
        const HoloPoly f(c);
        const auto once = bergman_project(sample(q, [&](cplx z) { return f(z); }), q, 16);
        const auto twice = bergman_project(sample(q, [&](cplx z) { return once(z); }), q, 16);
        for (int k = 0; k <= 16; ++k) {
            EXPECT_NEAR(std::abs(once[k] - c[static_cast<std::size_t>(k)]), 0.0, 1e-9);
            EXPECT_NEAR(std::abs(twice[k] - once[k]), 0.0, 1e-9);
        }
    }
}

TEST(Projection, CutoffBeyondGridRejected) {
    const auto q = build_disc_quadrature(0.0, 8, 16);
    const auto f = sample(q, [](cplx z) { return z; });
    EXPECT_THROW(bergman_project(f, q, q.max_cutoff() + 1), std::invalid_argument);
    EXPECT_THROW(toeplitz_matrix(f, q, q.max_cutoff() + 1), std::invalid_argument);
}

TEST(Projection, WeightedAlphaReproduces) {
    const auto q = build_disc_quadrature(2.0, 32, 128);
    const HoloPoly f{1.0, cplx{0.0, 2.0}, -0.5, 0.25};
    const auto p = bergman_project(sample(q, [&](cplx z) { return f(z); }), q, 6);
    for (int k = 0; k <= 6; ++k) EXPECT_NEAR(std::abs(p[k] - f[k]), 0.0, 1e-9);
}

TEST(Toeplitz, UnitSymbolIsIdentity) {
    const auto& q = grid();
    const auto m = toeplitz_matrix(sample(q, [](cplx) { return cplx{1.0}; }), q, 16);
    EXPECT_LE((m.entries() - Eigen::MatrixXcd::Identity(17, 17)).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Toeplitz, ShiftSymbol) {
    const auto& q = grid();
    const auto m = toeplitz_matrix(sample(q, [](cplx z) { return z; }), q, 8);
    for (int j = 0; j <= 8; ++j)
        for (int k = 0; k <= 8; ++k) {
            // sqrt(j+1) sqrt(k+1) int |u|^{2k+2} dA on the subdiagonal.
            const double expected = j == k + 1 ? std::sqrt((k + 1.0) * (k + 2.0)) * oracle::radial_moment(0.0, k + 1) : 0.0;
            EXPECT_NEAR(std::abs(m(j, k) - expected), 0.0, 1e-9) << j << "," << k;
        }
    const auto mc = toeplitz_matrix(sample(q, [](cplx z) { return std::conj(z); }), q, 8);
    EXPECT_LE((mc.entries() - m.entries().adjoint()).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_NEAR(m(1, 0).real(), std::sqrt(0.5), 1e-9);
}

TEST(Toeplitz, AdjointEntries) {
    Eigen::MatrixXcd e(2, 2);
    e << cplx{1, 2}, cplx{3, 4}, cplx{5, 6}, cplx{7, 8};
    const OperatorMatrix m(e);
    EXPECT_EQ(m.adjoint()(0, 1), std::conj(e(1, 0)));
    EXPECT_TRUE(m.all_finite());
}

TEST(Toeplitz, Linearity) {
    const auto& q = grid();
    Rng rng(4);
    for (int trial = 0; trial < 5; ++trial) {
        const auto phi = random_symbol(rng, q, 2);
        const auto psi = random_symbol(rng, q, 2);
        const cplx x = rng.complex(), y = rng.complex();
        std::vector<cplx> comb(phi.size());
        for (std::size_t i = 0; i < comb.size(); ++i) comb[i] = x * phi[i] + y * psi[i];
        const auto lhs = toeplitz_matrix(comb, q, 16).entries();
        const Eigen::MatrixXcd rhs = x * toeplitz_matrix(phi, q, 16).entries() + y * toeplitz_matrix(psi, q, 16).entries();
        EXPECT_LE((lhs - rhs).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(Toeplitz, Adjoint) {
    const auto& q = grid();
    Rng rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        const auto phi = random_symbol(rng, q, 3);
        const auto a = toeplitz_matrix(conj_all(phi), q, 16).entries();
        const auto b = toeplitz_matrix(phi, q, 16).adjoint().entries();
        EXPECT_LE((a - b).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(Toeplitz, Positivity) {
    const auto& q = grid();
    Rng rng(6);
    for (int trial = 0; trial < 10; ++trial) {
        const HoloPoly h{rng.complex(), rng.complex(), rng.complex()};
        const auto phi = sample(q, [&](cplx z) { return cplx{std::norm(h(z))}; });
        EXPECT_GE(min_hermitian_eigenvalue(toeplitz_matrix(phi, q, 16)), -1e-8);
    }
}

TEST(Toeplitz, HolomorphicMultiplicativityOnLeadingBlock) {
    const auto& q = grid();
    Rng rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        const HoloPoly f{rng.complex(), rng.complex(), rng.complex()};
        const HoloPoly g{rng.complex(), rng.complex()};
        const int d = f.degree() + g.degree();
        const auto tf = toeplitz_matrix(sample(q, [&](cplx z) { return f(z); }), q, 16).entries();
        const auto tg = toeplitz_matrix(sample(q, [&](cplx z) { return g(z); }), q, 16).entries();
        const auto tgf = toeplitz_matrix(sample(q, [&](cplx z) { return g(z) * f(z); }), q, 16).entries();
        EXPECT_LE(leading_block_deviation(tg * tf, tgf, 17 - d), 1e-9);
        const auto tcf = toeplitz_matrix(sample(q, [&](cplx z) { return std::conj(f(z)); }), q, 16).entries();
        const auto tcfg = toeplitz_matrix(sample(q, [&](cplx z) { return std::conj(f(z)) * g(z); }), q, 16).entries();
        EXPECT_LE(leading_block_deviation(tcf * tg, tcfg, 17 - d), 1e-9);
    }
}

TEST(Toeplitz, TruncationBandIsReal) {
    // Outside the leading block the finite sections genuinely disagree.
    const auto& q = grid();
    const auto tz = toeplitz_matrix(sample(q, [](cplx z) { return z; }), q, 8).entries();
    const auto tzc = toeplitz_matrix(sample(q, [](cplx z) { return std::conj(z); }), q, 8).entries();
    const auto t1 = toeplitz_matrix(sample(q, [](cplx z) { return std::norm(z); }), q, 8).entries();
    EXPECT_GT(std::abs((tzc * tz)(8, 8) - t1(8, 8)), 1e-3);
}

TEST(CircleConvolution, Examples) {
    using numcore::BoundaryGrid;
    const auto one = BoundaryGrid::sample([](cplx) { return cplx{1.0}; }, 64);
    const auto c = circle_convolution(one, one);
    for (std::size_t j = 0; j < c.size(); ++j) EXPECT_NEAR(std::abs(c[j] - 1.0), 0.0, 1e-12);
    const auto z = BoundaryGrid::sample([](cplx x) { return x; }, 64);
    const auto zz = circle_convolution(z, z);
    EXPECT_LE(oracle::max_abs_diff(zz.samples(), oracle::direct_convolution(z.samples(), z.samples())), 1e-12);
    const auto hat = numcore::boundary_fourier(zz);
    for (int k = hat.lo(); k <= hat.hi(); ++k) EXPECT_NEAR(std::abs(hat.at(k) - (k == 1 ? 1.0 : 0.0)), 0.0, 1e-12);
}

TEST(CircleConvolution, MatchesDirectOnRandomTrigPolynomials) {
    using numcore::BoundaryGrid;
    Rng rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<cplx> a(9), b(9);
        for (auto& v : a) v = rng.complex();
        for (auto& v : b) v = rng.complex();
        auto trig = [](const std::vector<cplx>& c) {
            return [c](cplx x) {
                cplx acc{0.0};
                for (int k = -4; k <= 4; ++k) acc += c[static_cast<std::size_t>(k + 4)] * std::pow(x, k);
                return acc;
            };
        };
        const auto f = BoundaryGrid::sample(trig(a), 32);
        const auto g = BoundaryGrid::sample(trig(b), 32);
        const auto fg = circle_convolution(f, g);
        EXPECT_LE(oracle::max_abs_diff(fg.samples(), oracle::direct_convolution(f.samples(), g.samples())), 1e-9);
        const auto hf = numcore::boundary_fourier(f), hg = numcore::boundary_fourier(g), hfg = numcore::boundary_fourier(fg);
        for (int k = hf.lo(); k <= hf.hi(); ++k) EXPECT_NEAR(std::abs(hfg.at(k) - hf.at(k) * hg.at(k)), 0.0, 1e-10);
    }
}

TEST(CircleConvolution, SizeMismatch) {
    using numcore::BoundaryGrid;
    EXPECT_THROW(circle_convolution(BoundaryGrid(std::vector<cplx>(8)), BoundaryGrid(std::vector<cplx>(16))),
                 std::invalid_argument);
}

TEST(Submultiplicative, ConstantsGiveEquality) {
    const auto& q = grid();
    const auto one = sample(q, [](cplx) { return cplx{1.0}; });
    const auto r = check_convolution_submultiplicative(one, one, 2.0, q);
    EXPECT_NEAR(r.lhs, 1.0, 1e-12);
    EXPECT_NEAR(r.rhs, 1.0, 1e-12);
    EXPECT_TRUE(r.holds);
}

TEST(Submultiplicative, AngularTrigPolynomialsHold) {
    const auto& q = grid();
    Rng rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<cplx> a(7), b(7);
        for (auto& v : a) v = rng.complex();
        for (auto& v : b) v = rng.complex();
        auto angular = [](const std::vector<cplx>& c) {
            return [c](cplx z) {
                const cplx u = z / std::abs(z);
                cplx acc{0.0};
                for (int k = -3; k <= 3; ++k) acc += c[static_cast<std::size_t>(k + 3)] * std::pow(u, k);
                return acc;
            };
        };
        const auto f = sample(q, angular(a));
        const auto g = sample(q, angular(b));
        for (double p : {1.0, 2.0, 4.0}) EXPECT_TRUE(check_convolution_submultiplicative(f, g, p, q).holds) << p;
    }
}

TEST(Submultiplicative, RadialProfileBreaksTheInequality) {
    // f = g = z: the ring-wise convolution is r^2 e^{i theta}, whose A^2 norm
    // is sqrt(1/3), above ||z||^2 = 1/2.
    const auto& q = grid();
    const auto z = sample(q, [](cplx w) { return w; });
    const auto r = check_convolution_submultiplicative(z, z, 2.0, q);
    EXPECT_NEAR(r.lhs, std::sqrt(oracle::radial_moment(0.0, 2)), 1e-10);
    EXPECT_NEAR(r.rhs, 0.5, 1e-10);
    EXPECT_FALSE(r.holds);
}
