#include "workbench/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "workbench/parallel.hpp"

namespace workbench::bloch {

namespace {

struct SupPoint {
    double value = -1.0;
    double r = 0.0;
    double theta = 0.0;
};

double weighted_value(const HoloPoly& h, double alpha, double r, double theta) {
    const cplx z = std::polar(r, theta);
    return std::pow(1.0 - r * r, alpha) * std::abs(h(z));
}

void require_grid(SupGrid grid) {
    if (grid.n_rad < 1 || grid.n_ang < 1) throw std::invalid_argument("sup grid is empty");
}

SupPoint grid_search(const HoloPoly& h, double alpha, SupGrid grid) {
    require_grid(grid);
    std::vector<SupPoint> rings(static_cast<std::size_t>(grid.n_rad));
    parallel_for(rings.size(), [&](std::size_t i) {
        const double r = static_cast<double>(i) / grid.n_rad;
        SupPoint best;
        for (int j = 0; j < grid.n_ang; ++j) {
            const double theta = 2.0 * kPi * j / grid.n_ang;
            const double v = weighted_value(h, alpha, r, theta);
            if (v > best.value) best = {v, r, theta};
        }
        rings[i] = best;
    });
    SupPoint best;
    for (const auto& s : rings)
        if (s.value > best.value) best = s;
    return best;
}

// Compass search around a grid maximiser, halving the steps each round.
SupPoint polish(const HoloPoly& h, double alpha, SupPoint start, SupGrid grid) {
    const double r_max = std::nextafter(1.0, 0.0);
    double hr = 1.0 / grid.n_rad;
    double ht = 2.0 * kPi / grid.n_ang;
    SupPoint best = start;
    for (int round = 0; round < 60 && (hr > 1e-15 || ht > 1e-15); ++round) {
        SupPoint centre = best;
        for (int a = -2; a <= 2; ++a) {
            for (int b = -2; b <= 2; ++b) {
                const double r = std::clamp(centre.r + 0.5 * a * hr, 0.0, r_max);
                const double t = centre.theta + 0.5 * b * ht;
                const double v = weighted_value(h, alpha, r, t);
                if (v > best.value) best = {v, r, t};
            }
        }
        hr *= 0.5;
        ht *= 0.5;
    }
    return best;
}

SupPoint refined_sup(const HoloPoly& h, double alpha, SupGrid grid) {
    return polish(h, alpha, grid_search(h, alpha, grid), grid);
}

}  // namespace

BlochReport bloch_seminorm(const HoloPoly& f, double alpha, SupGrid grid) {
    if (!(alpha > 0.0)) throw std::invalid_argument("Bloch exponent alpha must be > 0");
    require_grid(grid);
    const HoloPoly df = f.derivative();

    SupPoint current = refined_sup(df, alpha, grid);
    double change = 0.0;
    for (int doubling = 0; doubling < 4; ++doubling) {
        const SupGrid finer{grid.n_rad * 2, grid.n_ang * 2};
        const SupPoint next = refined_sup(df, alpha, finer);
        change = std::abs(next.value - current.value);
        current = next.value >= current.value ? next : current;
        grid = finer;
        if (change < 1e-6) break;
    }

    BlochReport rep;
    rep.alpha = alpha;
    rep.seminorm = std::max(0.0, current.value);
    rep.norm = std::abs(f(0.0)) + rep.seminorm;
    rep.argmax = std::polar(current.r, current.theta);
    rep.grid = grid;
    rep.refinement_change = change;
    return rep;
}

double bloch_norm(const HoloPoly& f, double alpha, SupGrid grid) { return bloch_seminorm(f, alpha, grid).norm; }

double weighted_grid_sup(const HoloPoly& h, double alpha, SupGrid grid) {
    return std::max(0.0, grid_search(h, alpha, grid).value);
}

cplx mobius(cplx a, cplx z) {
    if (std::abs(a) >= 1.0) throw std::domain_error("Moebius parameter must lie in the open disc");
    if (std::abs(z) > 1.0 + 1e-12) throw std::domain_error("Moebius argument outside the closed disc");
    const cplx den = 1.0 - std::conj(a) * z;
    if (den == cplx{0.0}) throw std::domain_error("Moebius map evaluated at its pole");
    return (a - z) / den;
}

double invariant_gradient_norm(const HoloPoly& f, cplx z) {
    const double r2 = std::norm(z);
    if (r2 >= 1.0) throw std::domain_error("invariant gradient needs |z| < 1");
    return (1.0 - r2) * std::abs(f.derivative()(z));
}

LittleBlochReport little_bloch_report(const HoloPoly& f, const std::vector<double>& radii, double tol, int n_ang) {
    if (radii.empty()) throw std::invalid_argument("little Bloch test needs at least one radius");
    if (n_ang < 1) throw std::invalid_argument("little Bloch test needs angles");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (radii[i] < 0.0 || radii[i] >= 1.0) throw std::invalid_argument("radii must lie in [0, 1)");
        if (i > 0 && radii[i] <= radii[i - 1]) throw std::invalid_argument("radii must be strictly increasing");
    }
    const HoloPoly df = f.derivative();
    LittleBlochReport rep;
    for (double r : radii) {
        double m = 0.0;
        for (int j = 0; j < n_ang; ++j) m = std::max(m, (1.0 - r * r) * std::abs(df(std::polar(r, 2.0 * kPi * j / n_ang))));
        rep.ring_maxima.push_back(m);
    }
    const auto& m = rep.ring_maxima;
    bool tail_decreasing = true;
    const std::size_t first = m.size() >= 3 ? m.size() - 3 : 0;
    for (std::size_t i = first + 1; i < m.size(); ++i) tail_decreasing = tail_decreasing && m[i] <= m[i - 1];
    rep.member = m.back() < tol && tail_decreasing;
    return rep;
}

bool little_bloch_test(const HoloPoly& f, const std::vector<double>& radii, double tol) {
    return little_bloch_report(f, radii, tol).member;
}

HoloPoly multiplier_apply(const HoloPoly& phi, const HoloPoly& f) { return phi * f; }

MultiplierReport multiplier_norm_report(const HoloPoly& phi, const std::vector<HoloPoly>& test_set, double alpha,
                                        SupGrid grid) {
    MultiplierReport rep;
    for (std::size_t i = 0; i < test_set.size(); ++i) {
        const double denom = bloch_norm(test_set[i], alpha, grid);
        if (denom == 0.0) continue;
        const double ratio = bloch_norm(multiplier_apply(phi, test_set[i]), alpha, grid) / denom;
        if (ratio > rep.ratio || rep.worst_index < 0) {
            rep.ratio = ratio;
            rep.worst_index = static_cast<int>(i);
        }
    }
    return rep;
}

std::vector<HoloPoly> multiplier_test_set() {
    const cplx i{0.0, 1.0};
    return {
        HoloPoly{1.0},
        HoloPoly{0.0, 1.0},
        HoloPoly::monomial(2),
        HoloPoly::monomial(3),
        HoloPoly::monomial(5),
        HoloPoly::monomial(8),
        HoloPoly{1.0, 1.0},
        HoloPoly{1.0, -1.0},
        HoloPoly{0.0, 1.0, 1.0},
        HoloPoly{1.0, 0.5, 0.25},
        HoloPoly{2.0, 0.0, -1.0},
        HoloPoly{0.0, i, 0.0, 1.0},
        HoloPoly{1.0, 0.0, 0.0, 0.0, 0.5},
        HoloPoly{0.5, -0.5 * i, 0.25},
        HoloPoly{0.0, 1.0, -0.5, 1.0 / 3.0, -0.25},
        HoloPoly{1.0, 1.0, 1.0, 1.0, 1.0},
        HoloPoly{0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0},
        HoloPoly{3.0, -i, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.5},
        HoloPoly{0.1, 0.2, 0.3, 0.4},
        HoloPoly{cplx{1.0, 1.0}, cplx{0.0, -2.0}, cplx{0.5, 0.5}},
    };
}

double boundary_sup(const HoloPoly& p, int m) {
    if (m < 1) throw std::invalid_argument("boundary sup needs points");
    double s = 0.0;
    for (int j = 0; j < m; ++j)
        s = std::max(s, std::abs(p(numcore::circle_point(static_cast<std::size_t>(j), static_cast<std::size_t>(m)))));
    return s;
}

ProductBoundReport product_bound_check(const HoloPoly& f, const HoloPoly& g, double alpha, SupGrid grid) {
    if (!(alpha > 0.0)) throw std::invalid_argument("Bloch exponent alpha must be > 0");
    const HoloPoly fg = f * g;
    ProductBoundReport rep;
    rep.lhs = std::abs(fg(0.0)) + weighted_grid_sup(fg.derivative(), alpha, grid);
    rep.rhs = std::abs(f(0.0)) * std::abs(g(0.0)) + weighted_grid_sup(f.derivative() * g, alpha, grid) +
              weighted_grid_sup(f * g.derivative(), alpha, grid);
    rep.holds = rep.lhs <= rep.rhs + 1e-8;
    return rep;
}

}  // namespace workbench::bloch
