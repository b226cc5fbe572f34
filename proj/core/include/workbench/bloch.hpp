#pragma once

// alpha-Bloch seminorms on the unit disc, Moebius maps and pointwise
// multipliers. Complex dimension one throughout, so the radial derivative,
// the invariant gradient and the higher-order derivative seminorms all
// reduce to f'.

#include <vector>

#include "workbench/numcore.hpp"

namespace workbench::bloch {

using numcore::HoloPoly;

/// Polar sup grid: radii i / n_rad for i = 0..n_rad-1, angles 2 pi j / n_ang.
struct SupGrid {
    int n_rad = 128;
    int n_ang = 128;
};

struct BlochReport {
    double alpha = 0.0;
    double seminorm = 0.0;
    double norm = 0.0;  // |f(0)| + seminorm
    cplx argmax{0.0};
    SupGrid grid;             // base grid after refinement
    double refinement_change = 0.0;  // |sup(grid) - sup(grid/2)| at acceptance
};

/// sup (1-|z|^2)^alpha |f'(z)|. The base grid is doubled until the refined
/// sup changes by less than 1e-6 (at most 4 doublings); each sup is polished
/// by a local pattern search around the best grid point.
/// Throws std::invalid_argument for alpha <= 0 or an empty grid.
BlochReport bloch_seminorm(const HoloPoly& f, double alpha, SupGrid grid = {});

/// |f(0)| + bloch_seminorm(f).seminorm.
double bloch_norm(const HoloPoly& f, double alpha, SupGrid grid = {});

/// max over the grid points of (1-|z|^2)^alpha |h(z)|, no refinement.
double weighted_grid_sup(const HoloPoly& h, double alpha, SupGrid grid);

/// phi_a(z) = (a - z) / (1 - conj(a) z). Throws std::domain_error for
/// |a| >= 1, |z| > 1 or the pole conj(a) z = 1.
cplx mobius(cplx a, cplx z);

/// (1 - |z|^2) |f'(z)|. Throws std::domain_error for |z| >= 1.
double invariant_gradient_norm(const HoloPoly& f, cplx z);

struct LittleBlochReport {
    bool member = false;
    std::vector<double> ring_maxima;  // max over angle per radius
};

/// Member iff the last ring maximum is below tol and the last three ring
/// maxima are non-increasing. Throws std::invalid_argument unless radii are
/// strictly increasing inside [0, 1).
LittleBlochReport little_bloch_report(const HoloPoly& f, const std::vector<double>& radii, double tol,
                                      int n_ang = 256);
bool little_bloch_test(const HoloPoly& f, const std::vector<double>& radii, double tol);

/// M_phi(f) = phi f at full combined degree.
HoloPoly multiplier_apply(const HoloPoly& phi, const HoloPoly& f);

struct MultiplierReport {
    double ratio = 0.0;  // sup over the test set of ||phi f|| / ||f||
    int worst_index = -1;
};

/// Ratio sweep over test_set; members with zero Bloch norm are skipped.
MultiplierReport multiplier_norm_report(const HoloPoly& phi, const std::vector<HoloPoly>& test_set, double alpha,
                                        SupGrid grid = {});

/// The fixed 20-polynomial test set used by the ratio sweeps.
std::vector<HoloPoly> multiplier_test_set();

/// max |p| over m equispaced boundary points (the disc sup norm of a
/// polynomial by the maximum principle).
double boundary_sup(const HoloPoly& p, int m = 1024);

struct ProductBoundReport {
    double lhs = 0.0;  // ||fg|| on the grid
    double rhs = 0.0;  // |f(0)g(0)| + sup w|f'g| + sup w|fg'|
    bool holds = false;
};

/// Product bound with all three sups on the same grid; holds = lhs <= rhs + 1e-8.
ProductBoundReport product_bound_check(const HoloPoly& f, const HoloPoly& g, double alpha, SupGrid grid = {});

}  // namespace workbench::bloch
