#include "workbench/cli/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <stdexcept>

#include "workbench/bergman.hpp"
#include "workbench/bloch.hpp"
#include "workbench/colombeau.hpp"
#include "workbench/gelfand.hpp"
#include "workbench/group_library.hpp"
#include "workbench/hardy.hpp"
#include "workbench/liefields.hpp"
#include "workbench/random.hpp"

namespace workbench::cli {

namespace {

using numcore::HoloPoly;

// Distinct streams per property so that adding a property never shifts
// the random inputs of another.
Rng stream(std::uint64_t seed, std::uint64_t tag) { return Rng(seed * 0x9E3779B97F4A7C15ULL + tag); }

class Builder {
 public:
    explicit Builder(SuiteReport& r) : r_(r) {}

    // value <= tol
    Property& at_most(const std::string& name, double value, double tol, int criterion = 0) {
        return add(name, value <= tol, value, tol, "<=", criterion);
    }
    // value >= tol
    Property& at_least(const std::string& name, double value, double tol, int criterion = 0) {
        return add(name, value >= tol, value, tol, ">=", criterion);
    }
    Property& check(const std::string& name, bool holds, int criterion = 0) {
        return add(name, holds, holds ? 1.0 : 0.0, 1.0, "==", criterion);
    }
    Property& observe(const std::string& name, bool holds, double value, double tol, const std::string& cmp) {
        Property& p = add(name, holds, value, tol, cmp, 0);
        p.gating = false;
        return p;
    }

 private:
    Property& add(const std::string& name, bool holds, double value, double tol, const std::string& cmp, int criterion) {
        Property p;
        p.name = name;
        p.holds = holds && std::isfinite(value);
        p.value = value;
        p.tolerance = tol;
        p.comparison = cmp;
        p.criterion = criterion;
        p.data = Json::object();
        r_.properties.push_back(std::move(p));
        return r_.properties.back();
    }

    SuiteReport& r_;
};

HoloPoly random_poly(Rng& rng, int deg, double scale = 1.0) {
    std::vector<cplx> c(static_cast<std::size_t>(deg + 1));
    for (auto& v : c) v = rng.complex(scale);
    return HoloPoly(c);
}

double max_abs(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// ---------------------------------------------------------------- bergman

void bergman_suite(SuiteReport& rep) {
    using namespace bergman;
    Builder b(rep);
    const int n_rad = 64, n_ang = 256, cutoff = 16;
    const auto q = numcore::build_disc_quadrature(0.0, n_rad, n_ang);
    rep.config["grid"] = {{"alpha", 0.0}, {"n_rad", n_rad}, {"n_ang", n_ang}};
    rep.config["cutoff"] = cutoff;
    auto sample = [&](const std::function<cplx(cplx)>& f) { return numcore::sample(q, f); };

    {
        double err = 0.0;
        for (int k = 0; k <= cutoff; ++k) {
            const auto p = bergman_project(sample([k](cplx z) { return std::pow(z, k); }), q, cutoff);
            for (int j = 0; j <= cutoff; ++j) err = std::max(err, std::abs(p[j] - (j == k ? 1.0 : 0.0)));
        }
        Rng rng = stream(rep.seed, 101);
        for (int t = 0; t < 10; ++t) {
            const auto f = random_poly(rng, cutoff);
            const auto p = bergman_project(sample([&](cplx z) { return f(z); }), q, cutoff);
            for (int j = 0; j <= cutoff; ++j) err = std::max(err, std::abs(p[j] - f[j]));
        }
        b.at_most("projection_fixes_holomorphic", err, 1e-9, 1).data = {{"max_degree", cutoff}, {"random_polys", 10}};
    }
    {
        double err = 0.0;
        for (int k = 1; k <= 8; ++k) {
            const auto p = bergman_project(sample([k](cplx z) { return std::pow(std::conj(z), k); }), q, cutoff);
            for (int j = 0; j <= cutoff; ++j) err = std::max(err, std::abs(p[j]));
        }
        b.at_most("projection_annihilates_conj_powers", err, 1e-9, 1).data = {{"powers", "1..8"}};
    }
    {
        Rng rng = stream(rep.seed, 102);
        double err = 0.0;
        for (int t = 0; t < 5; ++t) {
            std::vector<cplx> c(9);
            for (auto& v : c) v = rng.complex();
            const auto phi = sample([&](cplx z) {
                return c[0] + c[1] * z + c[2] * std::conj(z) + c[3] * std::norm(z) + c[4] * z * z +
                       c[5] * std::conj(z * z) + c[6] * z * std::norm(z) + c[7] * std::conj(z) * std::norm(z) + c[8];
            });
            const auto once = bergman_project(phi, q, cutoff);
            const auto twice = bergman_project(sample([&](cplx z) { return once(z); }), q, cutoff);
            for (int j = 0; j <= cutoff; ++j) err = std::max(err, std::abs(twice[j] - once[j]));
        }
        b.at_most("projection_idempotent", err, 1e-9);
    }
    {
        const cplx z{0.0, 0.3}, u{0.4, 0.0};
        cplx series{0.0};
        for (int k = 0; k < 60; ++k) series += static_cast<double>(k + 1) * std::pow(z * std::conj(u), k);
        b.at_most("kernel_series_expansion", std::abs(bergman_kernel(z, u) - series), 1e-9);
        b.at_most("kernel_center_value", std::abs(bergman_kernel(0.5, 0.5) - 16.0 / 9.0), 1e-14);
    }
    {
        const auto t1 = toeplitz_matrix(sample([](cplx) { return cplx{1.0}; }), q, cutoff);
        b.at_most("toeplitz_unit_symbol_identity", max_abs(t1.entries() - Eigen::MatrixXcd::Identity(cutoff + 1, cutoff + 1)),
                  1e-10);
        const auto tz = toeplitz_matrix(sample([](cplx z) { return z; }), q, cutoff);
        double err = 0.0;
        for (int j = 0; j <= cutoff; ++j)
            for (int k = 0; k <= cutoff; ++k)
                err = std::max(err, std::abs(tz(j, k) - (j == k + 1 ? std::sqrt((k + 1.0) / (k + 2.0)) : 0.0)));
        b.at_most("toeplitz_shift_subdiagonal", err, 1e-9);
    }

    // Random symbols sum_{a,b<=2} c_ab z^a conj(z)^b.
    auto random_symbol = [&](Rng& rng) {
        std::vector<cplx> c(9);
        for (auto& v : c) v = rng.complex();
        return sample([c](cplx z) {
            cplx acc{0.0};
            for (int a = 0; a <= 2; ++a)
                for (int bb = 0; bb <= 2; ++bb)
                    acc += c[static_cast<std::size_t>(3 * a + bb)] * std::pow(z, a) * std::pow(std::conj(z), bb);
            return acc;
        });
    };
    {
        Rng rng = stream(rep.seed, 103);
        double err = 0.0;
        for (int t = 0; t < 10; ++t) {
            const auto phi = random_symbol(rng), psi = random_symbol(rng);
            const cplx x = rng.complex(), y = rng.complex();
            std::vector<cplx> comb(phi.size());
            for (std::size_t i = 0; i < comb.size(); ++i) comb[i] = x * phi[i] + y * psi[i];
            const Eigen::MatrixXcd rhs =
                x * toeplitz_matrix(phi, q, cutoff).entries() + y * toeplitz_matrix(psi, q, cutoff).entries();
            err = std::max(err, max_abs(toeplitz_matrix(comb, q, cutoff).entries() - rhs));
        }
        b.at_most("toeplitz_linearity", err, 1e-10, 2).data = {{"trials", 10}};
    }
    {
        Rng rng = stream(rep.seed, 104);
        double err = 0.0;
        for (int t = 0; t < 10; ++t) {
            auto phi = random_symbol(rng);
            const auto m = toeplitz_matrix(phi, q, cutoff);
            for (auto& v : phi) v = std::conj(v);
            err = std::max(err, max_abs(toeplitz_matrix(phi, q, cutoff).entries() - m.adjoint().entries()));
        }
        b.at_most("toeplitz_adjoint", err, 1e-10, 2).data = {{"trials", 10}};
    }
    {
        Rng rng = stream(rep.seed, 105);
        double worst = std::numeric_limits<double>::infinity();
        std::vector<std::function<cplx(cplx)>> symbols{[](cplx z) { return cplx{std::norm(z)}; },
                                                       [](cplx z) { return cplx{1.0 + z.real()}; }};
        while (symbols.size() < 10) {
            const auto h = random_poly(rng, 2);
            symbols.push_back([h](cplx z) { return cplx{std::norm(h(z))}; });
        }
        for (const auto& s : symbols) worst = std::min(worst, min_hermitian_eigenvalue(toeplitz_matrix(sample(s), q, cutoff)));
        b.at_least("toeplitz_positivity", worst, -1e-8, 2).data = {{"symbols", symbols.size()}};
    }
    {
        Rng rng = stream(rep.seed, 106);
        double err4 = 0.0, err5 = 0.0;
        for (int t = 0; t < 10; ++t) {
            const auto f = random_poly(rng, 3), g = random_poly(rng, 2);
            const int block = cutoff + 1 - (f.degree() + g.degree());
            const auto tf = toeplitz_matrix(sample([&](cplx z) { return f(z); }), q, cutoff).entries();
            const auto tg = toeplitz_matrix(sample([&](cplx z) { return g(z); }), q, cutoff).entries();
            const auto tgf = toeplitz_matrix(sample([&](cplx z) { return g(z) * f(z); }), q, cutoff).entries();
            err4 = std::max(err4, leading_block_deviation(tg * tf, tgf, block));
            const auto tcf = toeplitz_matrix(sample([&](cplx z) { return std::conj(f(z)); }), q, cutoff).entries();
            const auto tcfg = toeplitz_matrix(sample([&](cplx z) { return std::conj(f(z)) * g(z); }), q, cutoff).entries();
            err5 = std::max(err5, leading_block_deviation(tcf * tg, tcfg, block));
        }
        b.at_most("toeplitz_holomorphic_multiplicativity", err4, 1e-9, 2).data = {{"trials", 10}, {"deg_f", 3}, {"deg_g", 2}};
        b.at_most("toeplitz_conjugate_product", err5, 1e-9, 2).data = {{"trials", 10}};
    }
    {
        // FFT route against the O(M^2) definition.
        Rng rng = stream(rep.seed, 107);
        double err = 0.0;
        const std::size_t m = 64;
        for (int t = 0; t < 20; ++t) {
            std::vector<cplx> f(m), g(m);
            for (auto& v : f) v = rng.complex();
            for (auto& v : g) v = rng.complex();
            const auto c = circle_convolution(numcore::BoundaryGrid(f), numcore::BoundaryGrid(g));
            for (std::size_t a = 0; a < m; ++a) {
                cplx direct{0.0};
                for (std::size_t l = 0; l < m; ++l) direct += f[l] * g[(a + m - l) % m];
                err = std::max(err, std::abs(c[a] - direct / static_cast<double>(m)));
            }
        }
        b.at_most("circle_convolution_matches_direct", err, 1e-9);
    }

    // Angular trigonometric polynomials, constant along radii.
    auto trig = [&](Rng& rng, bool harmonic) {
        std::vector<cplx> c(9);
        for (auto& v : c) v = rng.complex();
        return sample([c, harmonic](cplx z) {
            const double r = std::abs(z);
            const cplx u = z / r;
            cplx acc{0.0};
            for (int k = -4; k <= 4; ++k)
                acc += c[static_cast<std::size_t>(k + 4)] * std::pow(u, k) * (harmonic ? std::pow(r, std::abs(k)) : 1.0);
            return acc;
        });
    };
    {
        Rng rng = stream(rep.seed, 108);
        int failures = 0, literal_failures = 0;
        double worst = -std::numeric_limits<double>::infinity();
        for (int t = 0; t < 100; ++t) {
            const auto f = trig(rng, false), g = trig(rng, false);
            for (double p : {1.0, 2.0, 4.0}) {
                const auto r = check_convolution_submultiplicative(f, g, p, q);
                worst = std::max(worst, r.lhs - r.rhs);
                failures += r.holds ? 0 : 1;
                literal_failures += r.holds_literal ? 0 : 1;
            }
        }
        auto& p = b.at_most("convolution_submultiplicative", worst, 1e-9, 3);
        p.data = {{"pairs", 100}, {"p", {1, 2, 4}}, {"failures", failures}, {"max_lhs_minus_rhs", worst}};
        b.observe("convolution_literal_norm_reading", literal_failures == 0, literal_failures, 0, "==").data = {
            {"failures", literal_failures}, {"cases", 300}};
    }
    {
        Rng rng = stream(rep.seed, 109);
        int failures = 0;
        for (int t = 0; t < 100; ++t) {
            const auto f = trig(rng, true), g = trig(rng, true);
            for (double p : {1.0, 2.0, 4.0}) failures += check_convolution_submultiplicative(f, g, p, q).holds ? 0 : 1;
        }
        b.observe("convolution_harmonic_extensions", failures == 0, failures, 0, "==").data = {{"failures", failures},
                                                                                              {"cases", 300}};
        const auto z = sample([](cplx w) { return w; });
        const auto r = check_convolution_submultiplicative(z, z, 2.0, q);
        b.observe("convolution_example_z_times_z", r.holds, r.lhs, r.rhs, "<=").data = {{"lhs", r.lhs}, {"rhs", r.rhs}};
    }

    CsvArtifact csv;
    csv.file = "suite_bergman_toeplitz_z.csv";
    csv.matrix = true;
    csv.entries = toeplitz_matrix(sample([](cplx z) { return z; }), q, 8).entries();
    csv.params = {{"symbol", "z"}, {"cutoff", 8}};
    rep.csvs.push_back(std::move(csv));
}

// ---------------------------------------------------------------- bloch

void bloch_suite(SuiteReport& rep) {
    using namespace bloch;
    Builder b(rep);
    const SupGrid sweep{32, 32};
    rep.config["sup_grid"] = {{"n_rad", SupGrid{}.n_rad}, {"n_ang", SupGrid{}.n_ang}};
    rep.config["sweep_grid"] = {{"n_rad", sweep.n_rad}, {"n_ang", sweep.n_ang}};

    {
        const auto r = bloch_seminorm(HoloPoly{0.0, 0.0, 1.0}, 1.0);
        auto& p = b.at_most("seminorm_z_squared", std::abs(r.seminorm - 4.0 / (3.0 * std::sqrt(3.0))), 1e-6, 4);
        p.data = {{"seminorm", r.seminorm}, {"argmax", format_complex(r.argmax)}, {"refinement_change", r.refinement_change}};
        const auto rz = bloch_seminorm(HoloPoly{0.0, 1.0}, 1.0);
        b.at_most("seminorm_z", std::abs(rz.seminorm - 1.0) + std::abs(rz.argmax), 1e-12);
        b.at_most("seminorm_constant", bloch_seminorm(HoloPoly{cplx{3.0, 4.0}}, 1.0).seminorm, 0.0);
    }
    {
        Rng rng = stream(rep.seed, 201);
        double inv = 0.0, fixed = 0.0;
        for (int t = 0; t < 100; ++t) {
            const cplx a = rng.in_disc(0.95), z = rng.in_disc(0.95);
            inv = std::max(inv, std::abs(mobius(a, mobius(a, z)) - z));
            fixed = std::max({fixed, std::abs(mobius(a, 0.0) - a), std::abs(mobius(a, a))});
        }
        b.at_most("mobius_involution", inv, 1e-12, 4).data = {{"pairs", 100}};
        b.at_most("mobius_swaps_zero_and_a", fixed, 1e-15);
    }
    {
        Rng rng = stream(rep.seed, 202);
        double err = 0.0;
        for (int t = 0; t < 20; ++t) {
            const auto f = random_poly(rng, 5);
            const cplx z = rng.in_disc(0.9);
            const double h = 1e-5;
            const cplx d = (f(mobius(z, cplx{h})) - f(mobius(z, cplx{-h}))) / (2.0 * h);
            err = std::max(err, std::abs(invariant_gradient_norm(f, z) - std::abs(d)) / std::max(1.0, std::abs(d)));
        }
        b.at_most("invariant_gradient_chain_rule", err, 1e-7);
    }
    {
        Rng rng = stream(rep.seed, 203);
        double worst = -std::numeric_limits<double>::infinity();
        for (int t = 0; t < 50; ++t) {
            const auto f = random_poly(rng, 4), g = random_poly(rng, 4);
            const auto r = product_bound_check(f, g, 1.0, sweep);
            worst = std::max(worst, r.lhs - r.rhs);
        }
        b.at_most("product_bound", worst, 1e-8, 4).data = {{"pairs", 50}, {"max_lhs_minus_rhs", worst}};
    }
    {
        Rng rng = stream(rep.seed, 204);
        double hom = 0.0, add = 0.0, leib = 0.0;
        for (int t = 0; t < 10; ++t) {
            const auto phi = random_poly(rng, 3), psi = random_poly(rng, 3), f = random_poly(rng, 3);
            const cplx a = rng.complex();
            const double base = bloch_norm(multiplier_apply(phi, f), 1.0, sweep);
            hom = std::max(hom, std::abs(bloch_norm(multiplier_apply(a * phi, f), 1.0, sweep) - std::abs(a) * base) /
                                    std::max(1.0, base));
            const auto diff = multiplier_apply(phi + psi, f) - (multiplier_apply(phi, f) + multiplier_apply(psi, f));
            add = std::max(add, bloch_norm(diff, 1.0, sweep));
            const auto lhs = (f * phi).derivative();
            const auto rhs = f.derivative() * phi + f * phi.derivative();
            for (int k = 0; k <= lhs.degree(); ++k) leib = std::max(leib, std::abs(lhs[k] - rhs[k]));
        }
        b.at_most("multiplier_homogeneity", hom, 1e-10);
        b.at_most("multiplier_additivity", add, 1e-10);
        b.at_most("leibniz_rule", leib, 1e-12);
    }
    const auto set = multiplier_test_set();
    {
        const auto r = multiplier_norm_report(HoloPoly{1.0}, set, 1.0, sweep);
        b.at_most("identity_multiplier_ratio", std::abs(r.ratio - 1.0), 1e-12);
        const double zr = bloch_norm(HoloPoly{0.0, 1.0}, 1.0) / bloch_norm(HoloPoly{1.0}, 1.0);
        b.at_most("multiplier_z_on_one", std::abs(zr - 1.0), 1e-9);
    }
    {
        // ||M_{phi1 phi2}|| against ||phi1||_inf ||phi2||_inf on the fixed test set.
        Json cases = Json::array();
        double worst = 0.0;
        const std::vector<std::pair<HoloPoly, HoloPoly>> pairs{{HoloPoly{0.0, 1.0}, HoloPoly{1.0}},
                                                               {HoloPoly{0.0, 1.0}, HoloPoly{0.0, 1.0}},
                                                               {HoloPoly::monomial(2), HoloPoly::monomial(3)},
                                                               {HoloPoly{0.5, 0.5}, HoloPoly{0.0, 1.0}}};
        for (const auto& [p1, p2] : pairs) {
            const auto r = multiplier_norm_report(p1 * p2, set, 1.0, sweep);
            const double bound = boundary_sup(p1) * boundary_sup(p2);
            worst = std::max(worst, r.ratio / bound);
            cases.push_back({{"ratio", r.ratio}, {"sup_product", bound}, {"worst_index", r.worst_index}});
        }
        b.observe("multiplier_sup_norm_bound", worst <= 1.0 + 1e-9, worst, 1.0, "<=").data = {{"cases", cases}};
    }
    {
        const std::vector<double> radii{0.9, 0.99, 0.999, 0.9999, 0.99999};
        b.check("little_bloch_polynomial", little_bloch_test(HoloPoly{1.0, -2.0, 0.5, 3.0}, radii, 1e-3) &&
                                               little_bloch_test(HoloPoly{0.0}, radii, 1e-3));
        std::vector<cplx> c(41, cplx{0.0});
        for (int k = 1; k <= 40; ++k) c[static_cast<std::size_t>(k)] = 1.0 / k;
        const auto lr = little_bloch_report(HoloPoly(c), radii, 1e-3);
        auto& p = b.check("little_bloch_truncated_log", lr.member);
        p.data = {{"radii", radii}, {"ring_maxima", lr.ring_maxima}, {"tol", 1e-3}};
        CsvArtifact csv;
        csv.file = "suite_bloch_truncated_log.csv";
        csv.params = {{"f", "sum_{k=1..40} z^k / k"}, {"n_ang", 256}};
        csv.table.columns = {"radius", "ring_max"};
        for (std::size_t i = 0; i < radii.size(); ++i) csv.table.rows.push_back({radii[i], lr.ring_maxima[i]});
        rep.csvs.push_back(std::move(csv));
    }
}

// ---------------------------------------------------------------- hardy

void hardy_suite(SuiteReport& rep) {
    using namespace hardy;
    Builder b(rep);
    rep.config["radius_ladder"] = default_radius_ladder();
    rep.config["boundary_points"] = 256;
    rep.config["norm_angles"] = 1024;

    {
        double err = 0.0;
        for (int k : {1, 3, 7}) err = std::max(err, std::abs(hardy_norm(HoloPoly::monomial(k), 2.0, {0.999}) - std::pow(0.999, k)));
        b.at_most("norm_monomial", err, 1e-12);
    }
    {
        Rng rng = stream(rep.seed, 301);
        double err = 0.0;
        for (int t = 0; t < 20; ++t) {
            const auto f = random_poly(rng, 12);
            for (double r : default_radius_ladder()) err = std::max(err, std::abs(hardy_norm(f, 2.0, {r}) - parseval_mean(f, r)));
        }
        b.at_most("parseval_cross_check", err, 1e-10, 5).data = {{"polys", 20}, {"degree", 12}};
    }
    {
        Rng rng = stream(rep.seed, 302);
        double err = 0.0, min_p = std::numeric_limits<double>::infinity();
        for (int t = 0; t < 50; ++t) {
            const cplx z = rng.in_disc(0.9);
            double mean = 0.0;
            for (int j = 0; j < 256; ++j) {
                const double p = poisson_kernel(z, numcore::circle_point(static_cast<std::size_t>(j), 256));
                min_p = std::min(min_p, p);
                mean += p;
            }
            err = std::max(err, std::abs(mean / 256.0 - 1.0));
        }
        b.at_most("poisson_mean_one", err, 1e-10, 5).data = {{"points", 50}};
        b.at_least("poisson_positive", min_p, std::numeric_limits<double>::min(), 5);
        b.at_most("poisson_center_value", std::abs(poisson_kernel(0.5, 1.0) - 3.0), 1e-14);
    }
    {
        Rng rng = stream(rep.seed, 303);
        double err_s = 0.0, err_p = 0.0;
        for (int t = 0; t < 20; ++t) {
            const auto f = random_poly(rng, 8);
            const cplx z = rng.in_disc(0.9);
            err_s = std::max(err_s, std::abs(szego_reproduce(f, z) - f(z)));
            err_p = std::max(err_p, std::abs(poisson_reproduce(f, z) - f(z)));
        }
        b.at_most("szego_reproduces", err_s, 1e-8, 5).data = {{"points", 20}, {"degree", 8}};
        b.at_most("poisson_reproduces", err_p, 1e-8, 5).data = {{"points", 20}, {"degree", 8}};
    }
    {
        Rng rng = stream(rep.seed, 304);
        double worst = -std::numeric_limits<double>::infinity();
        for (int t = 0; t < 20; ++t) {
            const auto f = random_poly(rng, 6);
            const auto r = subharmonic_check(f, rng.in_disc(0.9), 1.0 + static_cast<double>(t % 3));
            worst = std::max(worst, r.lhs - r.rhs);
        }
        b.at_most("subharmonic_inequality", worst, 1e-8);
    }
    auto random_symbol = [](Rng& rng, int lo, int hi) {
        std::vector<cplx> v(static_cast<std::size_t>(hi - lo + 1));
        for (auto& x : v) x = rng.complex();
        return FourierCoeffs(lo, v);
    };
    const int n = 12;
    {
        Rng rng = stream(rep.seed, 305);
        double lin = 0.0, adj = 0.0, herm = 0.0;
        for (int t = 0; t < 10; ++t) {
            const auto f = random_symbol(rng, -n, n), g = random_symbol(rng, -n, n);
            const cplx x = rng.complex(), y = rng.complex();
            const Eigen::MatrixXcd rhs = x * hardy_toeplitz(f, n).entries() + y * hardy_toeplitz(g, n).entries();
            lin = std::max(lin, max_abs(hardy_toeplitz(symbol_combination(x, f, y, g), n).entries() - rhs));
            adj = std::max(adj, max_abs(hardy_toeplitz(conj_symbol(f), n).entries() - hardy_toeplitz(f, n).adjoint().entries()));
            const auto t_real = hardy_toeplitz(symbol_combination(0.5, f, 0.5, conj_symbol(f)), n).entries();
            herm = std::max(herm, max_abs(t_real - t_real.adjoint()));
        }
        b.at_most("toeplitz_linearity", lin, 1e-12, 5);
        b.at_most("toeplitz_adjoint", adj, 0.0, 5);
        b.at_most("toeplitz_real_symbol_hermitian", herm, 1e-12);
    }
    {
        Rng rng = stream(rep.seed, 306);
        double err = 0.0, err_conj = 0.0;
        for (int t = 0; t < 10; ++t) {
            const auto f = random_symbol(rng, 0, 3), g = random_symbol(rng, 0, 2);
            const auto gf = symbol_product(g, f);
            const int d = highest_mode(gf);
            const FourierCoeffs zero(-(n + d), std::vector<cplx>(static_cast<std::size_t>(2 * (n + d) + 1)));
            auto widen = [&](const FourierCoeffs& c) { return symbol_combination(1.0, c, 0.0, zero); };
            const Eigen::MatrixXcd prod = hardy_toeplitz(widen(g), n).entries() * hardy_toeplitz(widen(f), n).entries();
            err = std::max(err, max_abs((prod - hardy_toeplitz(widen(gf), n).entries()).topLeftCorner(n + 1 - d, n + 1 - d)));
            const auto cf = conj_symbol(f);
            const Eigen::MatrixXcd prod2 = hardy_toeplitz(widen(cf), n).entries() * hardy_toeplitz(widen(g), n).entries();
            err_conj = std::max(err_conj, max_abs((prod2 - hardy_toeplitz(widen(symbol_product(cf, g)), n).entries())
                                                      .topLeftCorner(n + 1 - d, n + 1 - d)));
        }
        b.at_most("toeplitz_analytic_product", err, 1e-10, 5).data = {{"trials", 10}, {"cutoff", n}};
        b.at_most("toeplitz_coanalytic_product", err_conj, 1e-10, 5).data = {{"trials", 10}, {"cutoff", n}};
    }
    {
        using numcore::BoundaryGrid;
        const bool a = disc_algebra_membership(BoundaryGrid::sample([](cplx x) { return x * x * x; }, 64), 1e-10);
        const bool c = disc_algebra_membership(BoundaryGrid::sample([](cplx x) { return std::conj(x); }, 64), 1e-10);
        const auto r = disc_algebra_report(BoundaryGrid::sample([](cplx x) { return x + 0.5 * std::conj(x) * std::conj(x); }, 64),
                                           1e-10);
        b.check("disc_algebra_examples", a && !c && !r.member && r.witness == -2).data = {{"witness", r.witness}};
    }
    CsvArtifact csv;
    csv.file = "suite_hardy_toeplitz_shift_sum.csv";
    csv.matrix = true;
    csv.entries = hardy_toeplitz(FourierCoeffs::from_terms({{1, 1.0}, {-1, 1.0}}, 6), 6).entries();
    csv.params = {{"symbol", "xi + 1/xi"}, {"n", 6}};
    rep.csvs.push_back(std::move(csv));
}

// ---------------------------------------------------------------- gelfand

void gelfand_suite(SuiteReport& rep) {
    using namespace gelfand;
    Builder b(rep);
    rep.config["spherical_seed"] = rep.seed;

    const auto s3 = symmetric_group_3();
    const SubgroupK k3(s3, {0, 3});
    {
        const auto r = is_gelfand_pair(s3, k3);
        b.check("s3_transposition_is_gelfand", r.gelfand && r.n_cosets == 2, 6).data = {{"n_cosets", r.n_cosets}};
    }
    {
        struct Case {
            std::string name;
            FiniteGroup g;
            std::vector<int> k;
        };
        const std::vector<Case> cases{{"s3/<(12)>", s3, {0, 3}},
                                      {"z4/{e}", cyclic_group(4), {0}},
                                      {"z6/{e}", cyclic_group(6), {0}},
                                      {"d4/{0,2}", dihedral_group(4), {0, 2}}};
        double defect = 0.0;
        bool counts = true;
        Json listing = Json::array();
        for (const auto& c : cases) {
            const SubgroupK k(c.g, c.k);
            const auto phis = spherical_functions(c.g, k, rep.seed);
            counts = counts && static_cast<int>(phis.size()) == double_cosets(c.g, k).size();
            Json fns = Json::array();
            for (const auto& phi : phis) {
                defect = std::max({defect, multiplicativity_defect(phi, c.g, k), std::abs(phi[0] - 1.0)});
                fns.push_back(complex_list_json(phi));
            }
            listing.push_back({{"pair", c.name}, {"functions", fns}});
        }
        b.at_most("spherical_multiplicativity", defect, 1e-10, 6).data = {{"pairs", listing}};
        b.check("spherical_count_equals_double_cosets", counts);
    }
    {
        const auto q8 = quaternion_group();
        const auto r = is_gelfand_pair(q8, SubgroupK::trivial(q8));
        bool witnessed = false;
        if (!r.gelfand && r.witness_i >= 0 && r.witness_j >= 0) {
            const auto basis = double_cosets(q8, SubgroupK::trivial(q8));
            const auto ei = basis_function(basis, r.witness_i, q8), ej = basis_function(basis, r.witness_j, q8);
            const auto a = convolve(ei, ej, q8), c = convolve(ej, ei, q8);
            for (std::size_t x = 0; x < a.size(); ++x) witnessed = witnessed || std::abs(a[x] - c[x]) > 0.5;
        }
        b.check("q8_trivial_rejected_with_witness", !r.gelfand && witnessed, 6).data = {
            {"witness", {r.witness_i, r.witness_j}}, {"max_commutator", r.max_commutator}};
    }
    {
        bool all = true;
        for (int n = 2; n <= 8; ++n) all = all && is_gelfand_pair(cyclic_group(n), SubgroupK::trivial(cyclic_group(n))).gelfand;
        b.check("abelian_trivial_subgroup_gelfand", all);
    }
    {
        Rng rng = stream(rep.seed, 401);
        const std::vector<double> one(6, 1.0);
        double worst = -std::numeric_limits<double>::infinity();
        for (int t = 0; t < 200; ++t) {
            GroupFunction f1(6), f2(6);
            for (auto& v : f1) v = rng.complex();
            for (auto& v : f2) v = rng.complex();
            worst = std::max(worst, phi_seminorm(convolve(f1, f2, s3), one, s3) - phi_seminorm(f1, one, s3) * phi_seminorm(f2, one, s3));
        }
        b.at_most("phi_seminorm_submultiplicative", worst, 1e-12, 6).data = {{"pairs", 200}, {"phi", "1"}};
    }
    {
        double res = 0.0;
        res = std::max(res, closure_residual(s3, k3));
        res = std::max(res, closure_residual(symmetric_group_4(), SubgroupK(symmetric_group_4(), {0, 1})));
        res = std::max(res, closure_residual(dihedral_group(4), SubgroupK(dihedral_group(4), {0, 2})));
        b.at_most("double_coset_algebra_closed", res, 1e-12);
    }
    {
        Rng rng = stream(rep.seed, 402);
        const auto d4 = dihedral_group(4);
        const SubgroupK k(d4, {0, 2});
        double ident = 0.0, assoc = 0.0, idem = 0.0;
        auto diff = [](const GroupFunction& a, const GroupFunction& c) {
            double m = 0.0;
            for (std::size_t x = 0; x < a.size(); ++x) m = std::max(m, std::abs(a[x] - c[x]));
            return m;
        };
        auto rnd = [&] {
            GroupFunction f(8);
            for (auto& v : f) v = rng.complex();
            return f;
        };
        for (int t = 0; t < 20; ++t) {
            const auto phi1 = biinvariant_project(rnd(), d4, k);
            const auto phi2 = rnd(), phi3 = rnd();
            ident = std::max(ident, diff(biinvariant_project(convolve(phi2, phi1, d4), d4, k),
                                         convolve(biinvariant_project(phi2, d4, k), phi1, d4)));
            ident = std::max(ident, diff(biinvariant_project(convolve(phi1, phi2, d4), d4, k),
                                         convolve(phi1, biinvariant_project(phi2, d4, k), d4)));
            assoc = std::max(assoc, diff(convolve(convolve(phi1, phi2, d4), phi3, d4), convolve(phi1, convolve(phi2, phi3, d4), d4)));
            const auto p = biinvariant_project(phi2, d4, k);
            idem = std::max(idem, diff(biinvariant_project(p, d4, k), p));
        }
        b.at_most("projection_convolution_identities", ident, 1e-12);
        b.at_most("convolution_associative", assoc, 1e-12);
        b.at_most("projection_idempotent", idem, 0.0);
    }
}

// ---------------------------------------------------------------- lie

void lie_suite(SuiteReport& rep) {
    using namespace liefields;
    Builder b(rep);
    rep.config["sweep"] = {{"pairs", 50}, {"max_degree", 2}, {"max_dim", 2}, {"max_coeff", 3}};
    rep.config["flow"] = {{"ts", {0.1, 0.05, 0.025}}, {"steps", 64}};

    {
        Rng rng = stream(rep.seed, 501);
        bool anti = true, self = true, jac = true, lemma = true, bilinear = true;
        for (int t = 0; t < 50; ++t) {
            const int d = 1 + static_cast<int>(rng.integer(0, 1));
            const auto x = random_field(rng, d, 2), y = random_field(rng, d, 2), z = random_field(rng, d, 2);
            anti = anti && (lie_bracket(x, y) + lie_bracket(y, x)).is_zero();
            self = self && lie_bracket(x, x).is_zero();
            jac = jac && jacobi_sum(x, y, z).is_zero();
            lemma = lemma && check_lemma64(x, y).exact;
            const double a = static_cast<double>(rng.integer(-3, 3)), c = static_cast<double>(rng.integer(-3, 3));
            bilinear = bilinear && lie_bracket(a * x + c * y, z) == a * lie_bracket(x, z) + c * lie_bracket(y, z);
        }
        b.check("antisymmetry_exact", anti, 7);
        b.check("self_bracket_zero_exact", self, 7);
        b.check("jacobi_exact", jac, 7);
        b.check("lemma64_prolongation_exact", lemma, 7);
        b.check("bilinearity_exact", bilinear);
    }
    {
        Rng rng = stream(rep.seed, 502);
        bool jac = true;
        for (int t = 0; t < 20; ++t) {
            const int d = 1 + static_cast<int>(rng.integer(0, 2));
            jac = jac && jacobi_sum(random_field(rng, d, 3), random_field(rng, d, 3), random_field(rng, d, 3)).is_zero();
        }
        b.check("jacobi_exact_degree3", jac);
    }
    const auto c1 = MPoly::constant(1, 1.0);
    const PolyVectorField dx({c1}), xdx({MPoly::variable(1, 0)});
    {
        const PolyVectorField x({MPoly::variable(2, 1), MPoly(2)}), y({MPoly(2), MPoly::variable(2, 0)});
        const PolyVectorField sl2({MPoly::variable(2, 0) * -1.0, MPoly::variable(2, 1)});
        b.check("bracket_examples", lie_bracket(dx, xdx) == dx && lie_bracket(x, y) == sl2);
        const double zero[] = {0.0}, one[] = {1.0};
        const double err = std::max(std::abs(flow(dx, zero, 1.0).point[0] - 1.0), std::abs(flow(xdx, one, 1.0).point[0] - std::exp(1.0)));
        b.at_most("flow_examples", err, 1e-8);
    }
    {
        const double zero[] = {0.0}, origin[] = {0.0, 0.0}, pt[] = {0.5, -0.3};
        const PolyVectorField ddx({MPoly::constant(2, 1.0), MPoly(2)}), ddy({MPoly(2), MPoly::constant(2, 1.0)});
        const PolyVectorField x({MPoly::variable(2, 1), MPoly(2)}), y({MPoly(2), MPoly::variable(2, 0)});
        const auto r1 = flow_commutator_sweep(dx, xdx, zero);
        const auto r2 = flow_commutator_sweep(ddx, ddy, origin);
        const auto r3 = flow_commutator_sweep(x, y, pt);
        auto as_json = [](const FlowSweepReport& r) {
            return Json{{"errors", r.errors}, {"slope", r.slope}, {"exact", r.exact}, {"passes", r.passes}};
        };
        const double slope = std::min(r1.slope, r3.slope);
        auto& p = b.at_least("flow_commutator_slope", r2.exact ? slope : -1.0, 0.9, 7);
        p.data = {{"dx_xdx_at_0", as_json(r1)}, {"dx_dy_at_0", as_json(r2)}, {"sl2_at_(0.5,-0.3)", as_json(r3)}};
        CsvArtifact csv;
        csv.file = "suite_lie_flow_sweep.csv";
        csv.params = {{"x", "d/dx"}, {"y", "x d/dx"}, {"point", {0.0}}};
        csv.table.columns = {"t", "error"};
        for (std::size_t i = 0; i < r1.ts.size(); ++i) csv.table.rows.push_back({r1.ts[i], r1.errors[i]});
        csv.table.trailer.push_back("fit: slope=" + format_real(r1.slope));
        rep.csvs.push_back(std::move(csv));
    }
    {
        // Random fields: pre-asymptotic cancellations can flatten the fitted
        // slope on the fixed t ladder, so the fraction is reported only.
        Rng rng = stream(rep.seed, 503);
        int passed = 0;
        double min_slope = std::numeric_limits<double>::infinity();
        for (int t = 0; t < 50; ++t) {
            const auto x = random_field(rng, 2, 2), y = random_field(rng, 2, 2);
            const double p[] = {rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)};
            try {
                const auto r = flow_commutator_sweep(x, y, p);
                passed += r.passes ? 1 : 0;
                if (!r.exact) min_slope = std::min(min_slope, r.slope);
            } catch (const DivergenceError&) {
            }
        }
        b.observe("flow_commutator_slope_random_fields", passed == 50, passed, 50, ">=").data = {
            {"passed", passed}, {"trials", 50}, {"min_slope", std::isfinite(min_slope) ? Json(min_slope) : Json()}};
    }
}

// ---------------------------------------------------------------- colombeau

void colombeau_suite(SuiteReport& rep) {
    using namespace colombeau;
    Builder b(rep);
    const auto ladder = epsilon_ladder(12);
    const KGrid k;
    rep.config["ladder"] = {{"count", 12}, {"base", 2}};
    rep.config["compact"] = {{"lo", k.lo}, {"hi", k.hi}, {"n", k.n}};
    rep.config["noise_floor"] = 1e-12;
    rep.config["quadrature_nodes"] = 4096;

    std::vector<Mollifier> exact, even;
    for (int q : {0, 2, 4}) exact.push_back(build_exact_order_mollifier(q));
    for (int q : {0, 2, 4, 6}) even.push_back(build_mollifier(q));

    {
        double res = 0.0, mass = 0.0;
        for (const auto* family : {&exact, &even})
            for (const auto& m : *family) {
                mass = std::max(mass, std::abs(moment(m, 0) - 1.0));
                for (int a = 1; a <= m.q; ++a) res = std::max(res, std::abs(moment(m, a)));
            }
        b.at_most("mollifier_moments", res, 1e-9, 8);
        b.at_most("mollifier_mass", mass, 1e-10, 8);
    }
    auto ladder_csv = [&](const std::string& file, const Json& params, const EpsilonNet& net, const AsymptoticReport& r) {
        CsvArtifact csv;
        csv.file = file;
        csv.params = params;
        csv.table.columns = {"eps", "value"};
        for (std::size_t i = 0; i < net.epsilons.size(); ++i) csv.table.rows.push_back({net.epsilons[i], net.values[i]});
        csv.table.trailer.push_back("fit: slope=" + format_real(r.slope) + " class=" + to_string(r.classification) +
                                    " order=" + std::to_string(r.order));
        rep.csvs.push_back(std::move(csv));
    };
    const auto expf = [](double t) { return std::exp(t); };
    const auto absf = [](double t) { return std::abs(t); };
    {
        double dev = 0.0;
        Json slopes = Json::array();
        for (const auto& m : exact) {
            const auto net = taylor_defect(expf, m, ladder, k);
            const auto r = estimate_order(net);
            dev = std::max(dev, std::abs(r.slope - (m.q + 1)));
            slopes.push_back({{"q", m.q}, {"slope", r.slope}});
            ladder_csv("suite_colombeau_taylor_exp_q" + std::to_string(m.q) + ".csv",
                       {{"quantity", "taylor_defect"}, {"f", "exp"}, {"q", m.q}, {"kind", m.kind}}, net, r);
        }
        b.at_most("taylor_defect_exp_rate", dev, 0.2, 8).data = {{"mollifier", "exact"}, {"slopes", slopes}};
    }
    {
        Json slopes = Json::array();
        double dev = 0.0;
        for (std::size_t i = 0; i < 3; ++i) {
            const auto r = estimate_order(taylor_defect(expf, even[i], ladder, k));
            dev = std::max(dev, std::abs(r.slope - (even[i].q + 1)));
            slopes.push_back({{"q", even[i].q}, {"slope", r.slope}});
        }
        b.observe("taylor_defect_exp_rate_even_mollifier", dev <= 0.2, dev, 0.2, "<=").data = {{"slopes", slopes}};
    }
    {
        double margin = std::numeric_limits<double>::infinity();
        Json slopes = Json::array();
        for (const auto& m : exact) {
            const auto r = estimate_order(product_defect(expf, expf, m, ladder, k));
            margin = std::min(margin, r.slope - m.q);
            slopes.push_back({{"q", m.q}, {"slope", r.slope}});
        }
        b.at_least("product_defect_exp_rate", margin, 0.0, 8).data = {{"slopes", slopes}, {"value_is", "min(slope - q)"}};
    }
    {
        const auto net = product_defect(absf, absf, exact[1], ladder, k);
        const double smallest = *std::min_element(net.values.begin(), net.values.end());
        const auto r = estimate_order(net);
        b.at_least("product_defect_abs_nonzero", smallest, 1e-12, 8).data = {
            {"q", 2}, {"min_value", smallest}, {"slope", r.slope}};
        ladder_csv("suite_colombeau_product_abs_q2.csv",
                   {{"quantity", "product_defect"}, {"f", "abs"}, {"g", "abs"}, {"q", 2}, {"kind", "exact"}}, net, r);
    }
    {
        const double eps = 1.0 / 16;
        Json cases = Json::array();
        bool all = true;
        double worst = 0.0;
        for (const auto& m : exact) {
            for (const std::string name : {"indicator", "spike:0.00390625", "zero"}) {
                const auto f = catalog_function(name);
                const auto r = l1_embedding_bound(f.f, f.l1(k.lo - eps, k.hi + eps), m, eps, k);
                all = all && r.holds;
                if (r.l1_norm > 0.0) worst = std::max(worst, r.ratio / r.c);
                cases.push_back({{"q", m.q}, {"f", name}, {"sup", r.sup_value}, {"l1", r.l1_norm}, {"c", r.c}, {"ratio", r.ratio}});
            }
        }
        auto& p = b.at_most("l1_embedding_ratio", all ? worst : std::numeric_limits<double>::infinity(), 1.0 + 1e-9, 8);
        p.data = {{"eps", eps}, {"value_is", "max ratio / c"}, {"cases", cases}};
    }
    {
        double err = 0.0;
        const auto p = [](double t) { return 1.0 - 2.0 * t + 0.5 * t * t * t - t * t * t * t; };
        const auto r = regularize(p, even[2], 0.25, k);
        for (int i = 0; i < k.n; ++i) err = std::max(err, std::abs(r[static_cast<std::size_t>(i)] - p(k.point(i))));
        for (double v : regularize([](double) { return 1.0; }, even[0], 0.125, k)) err = std::max(err, std::abs(v - 1.0));
        b.at_most("regularize_fixes_low_degree_polynomials", err, 1e-9);
    }
    {
        const auto r = regularize([](double t) { return std::sin(t); }, even[1], 1.0 / 16, k);
        double worst = 0.0;
        for (int i = 0; i < k.n; ++i) worst = std::max(worst, std::abs(r[static_cast<std::size_t>(i)] - std::sin(k.point(i))));
        b.at_most("regularize_sin_regression", std::abs(worst - 1.604909e-08), 1e-12).data = {{"max_defect", worst}};
    }
    {
        const auto h = catalog_function("heaviside");
        const auto r = estimate_order(seminorm_net(h.f, even[0], ladder, 1, k));
        b.at_most("heaviside_derivative_rate", std::abs(r.slope + 1.0), 0.2).data = {
            {"slope", r.slope}, {"class", to_string(r.classification)}, {"order", r.order}};
        const auto ra = estimate_order(taylor_defect(absf, even[1], ladder, k));
        b.at_most("taylor_defect_abs_rate", std::abs(ra.slope - 1.0), 0.2).data = {{"slope", ra.slope}};
    }
    {
        EpsilonNet c;
        c.epsilons = epsilon_ladder(8);
        c.values.assign(8, 2.0);
        EpsilonNet p3 = c;
        for (std::size_t i = 0; i < p3.values.size(); ++i) p3.values[i] = std::pow(p3.epsilons[i], 3);
        const auto rc = estimate_order(c);
        const auto r3 = estimate_order(p3, 1e-30);
        b.check("order_classification_examples", rc.classification == OrderClass::moderate && rc.order == 0 &&
                                                     std::abs(r3.slope - 3.0) <= 0.01 && r3.classification == OrderClass::negligible);
    }
}

const std::vector<std::pair<std::string, void (*)(SuiteReport&)>>& registry() {
    static const std::vector<std::pair<std::string, void (*)(SuiteReport&)>> r{
        {"bergman", bergman_suite}, {"bloch", bloch_suite}, {"hardy", hardy_suite},
        {"gelfand", gelfand_suite}, {"lie", lie_suite},     {"colombeau", colombeau_suite}};
    return r;
}

Json property_json(const Property& p) {
    Json j;
    j["name"] = p.name;
    j["holds"] = p.holds;
    j["gating"] = p.gating;
    if (p.criterion) j["criterion"] = p.criterion;
    j["value"] = p.value;
    j["comparison"] = p.comparison;
    j["tolerance"] = p.tolerance;
    if (!p.data.empty()) j["data"] = p.data;
    return j;
}

}  // namespace

bool SuiteReport::passed() const {
    return std::all_of(properties.begin(), properties.end(), [](const Property& p) { return p.holds || !p.gating; });
}

Json SuiteReport::to_json() const {
    Json j;
    j["operation"] = "suite";
    j["module"] = module;
    j["config"] = config;
    Json props = Json::array();
    for (const auto& p : properties) props.push_back(property_json(p));
    j["properties"] = props;
    j["holds"] = passed();
    return j;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, fn] : registry()) n.push_back(name);
        return n;
    }();
    return names;
}

SuiteReport run_suite(const std::string& module, std::uint64_t seed) {
    for (const auto& [name, fn] : registry()) {
        if (name != module) continue;
        SuiteReport rep;
        rep.module = module;
        rep.seed = seed;
        rep.config["module"] = module;
        rep.config["seed"] = seed;
        const auto start = std::chrono::steady_clock::now();
        fn(rep);
        rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return rep;
    }
    throw std::invalid_argument("unknown suite '" + module + "'");
}

std::vector<SuiteReport> run_suites(const std::string& name, std::uint64_t seed, const std::filesystem::path& out_dir,
                                    std::ostream& log) {
    std::vector<std::string> modules;
    if (name == "all") modules = suite_names();
    else if (std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end()) modules = {name};
    else throw std::invalid_argument("unknown suite '" + name + "'");

    if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
    std::vector<SuiteReport> reports;
    for (const auto& m : modules) {
        SuiteReport rep = run_suite(m, seed);
        for (const auto& p : rep.properties) {
            char line[256];
            std::snprintf(line, sizeof line, "  %-4s %-44s value=%-12.4g %s %.3g%s\n", p.holds ? "PASS" : "FAIL", p.name.c_str(),
                          p.value, p.comparison.c_str(), p.tolerance, p.gating ? "" : "  (observation)");
            log << line;
        }
        char summary[160];
        std::snprintf(summary, sizeof summary, "suite %s: %s (%.2f s)\n", m.c_str(), rep.passed() ? "PASS" : "FAIL", rep.seconds);
        log << summary;
        if (!out_dir.empty()) {
            std::ofstream(out_dir / ("suite_" + m + ".json"), std::ios::binary) << dump(rep.to_json());
            for (const auto& csv : rep.csvs) {
                Json config = rep.config;
                if (!csv.params.is_null()) config["artifact"] = csv.params;
                std::ofstream out(out_dir / csv.file, std::ios::binary);
                if (csv.matrix) write_matrix_csv(out, csv.entries, config);
                else write_table_csv(out, csv.table, config);
            }
        }
        reports.push_back(std::move(rep));
    }
    return reports;
}

}  // namespace workbench::cli
