#pragma once

// One-dimensional mollifier asymptotics: moment-corrected bumps, the
// regularization f_eps(t) = int f(t + eps y) phi(y) dy, derivative
// seminorms on a compact grid, eps-ladders and power-law order fits.
//
// All integrals over y use the trapezoid rule on [-1, 1], which is
// spectrally accurate for the bump (it vanishes to all orders at +-1).

#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace workbench::colombeau {

using RealFn = std::function<double(double)>;

/// exp(-1 / (1 - t^2)) on (-1, 1), zero elsewhere.
double bump(double t);

/// phi(t) = bump(t) * sum_i coeffs[i] t^powers[i], stored with its samples
/// and those of its first four derivatives on the trapezoid nodes.
struct Mollifier {
    int q = 0;
    std::string kind;  // "even" or "exact"
    std::vector<int> powers;
    std::vector<double> coeffs;
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<std::vector<double>> derivative_samples;  // [alpha][node], alpha = 0..4

    double operator()(double t) const;
    /// phi^(alpha)(t) for alpha <= 4.
    double derivative(int alpha, double t) const;
    const std::vector<double>& samples() const { return derivative_samples[0]; }
    /// max |phi| over the nodes.
    double sup() const;
};

inline constexpr int kMaxDerivative = 4;

/// Even mollifier: the bump times an even polynomial of degree q with unit
/// mass and vanishing moments 2, 4, .., q (odd ones vanish by symmetry).
/// q must be even and >= 0; std::invalid_argument otherwise. Throws
/// std::runtime_error if the moment system is singular.
Mollifier build_mollifier(int q, int n_quad = 4096);

/// Sharp-order mollifier: the bump times a full polynomial of degree q + 1
/// with unit mass, vanishing moments 1..q and moment q + 1 equal to
/// int |y|^{q+1} b / int b (nonzero), so that the Taylor defect of a smooth
/// function is exactly of order eps^{q+1}. Any q >= 0.
Mollifier build_exact_order_mollifier(int q, int n_quad = 4096);

/// int t^a phi(t) dt on the mollifier's own quadrature.
double moment(const Mollifier& m, int a);

/// Equispaced compact grid [lo, hi] with n points.
struct KGrid {
    double lo = -1.0;
    double hi = 1.0;
    int n = 201;

    double spacing() const { return (hi - lo) / (n - 1); }
    double point(int i) const { return i == n - 1 ? hi : lo + i * spacing(); }
    std::vector<double> points() const;
};

/// f_eps at every point of K. Throws std::invalid_argument unless 0 < eps <= 1.
std::vector<double> regularize(const RealFn& f, const Mollifier& m, double eps, const KGrid& k);

/// d^alpha f_eps = (-1)^alpha eps^-alpha int f(t + eps y) phi^(alpha)(y) dy,
/// valid for merely continuous f. alpha <= 4.
std::vector<double> regularize_derivative(const RealFn& f, const Mollifier& m, double eps, const KGrid& k, int alpha);

/// sup over K of the alpha-th 4th-order central difference (alpha <= 4);
/// points closer to the ends than the stencil half-width are skipped.
/// Throws std::invalid_argument for alpha > 4 or a grid with too few points.
double seminorm(std::span<const double> f_eps, const KGrid& k, int alpha);

/// Geometric ladder eps_j = 2^-j, j = 1..count.
std::vector<double> epsilon_ladder(int count = 12);

struct EpsilonNet {
    std::vector<double> epsilons;
    std::vector<double> values;
    int alpha = 0;
    KGrid k;
};

enum class OrderClass { negligible, moderate, unbounded };

std::string to_string(OrderClass c);

struct AsymptoticReport {
    double slope = 0.0;
    OrderClass classification = OrderClass::moderate;
    int order = 0;  // m for negligible(m), N for moderate(N); -1 when every value is below the floor
    int points_used = 0;
    double floor = 0.0;
};

/// Least-squares slope of log value against log eps on the last 4 points
/// whose value exceeds `floor` (values below it are rounding noise).
/// Classification with a 0.05 tolerance: negligible(m) if slope >= m for the
/// requested m (or for m = floor(slope) when none is requested and the slope
/// is positive), moderate(N) with the least N >= 0 such that slope >= -N for
/// N <= 8, unbounded otherwise. Fewer than 2 points above the floor report
/// negligible with order -1.
/// Throws std::invalid_argument for fewer than 4 points or non-finite values.
AsymptoticReport estimate_order(const EpsilonNet& net, double floor = 1e-12, int requested_m = -1);

/// sup_K |f - f_eps|, computed as sup |int (f(t + eps y) - f(t)) phi(y) dy|.
EpsilonNet taylor_defect(const RealFn& f, const Mollifier& m, const std::vector<double>& epsilons, const KGrid& k = {});

/// sup_K |f_eps g_eps - (f g)_eps|.
EpsilonNet product_defect(const RealFn& f, const RealFn& g, const Mollifier& m, const std::vector<double>& epsilons,
                          const KGrid& k = {});

/// sup_K |d^alpha f_eps| along the ladder (exact derivative route).
EpsilonNet seminorm_net(const RealFn& f, const Mollifier& m, const std::vector<double>& epsilons, int alpha,
                        const KGrid& k = {});

struct L1Report {
    double sup_value = 0.0;  // sup_K |f_eps|
    double l1_norm = 0.0;
    double c = 0.0;          // eps^-1 sup |phi|
    double ratio = 0.0;      // sup_value / l1_norm (0 when f = 0)
    bool holds = false;      // sup_value <= c l1_norm (1 + 1e-9)
};

/// l1_norm is the L1 norm of f over K dilated by eps (the part of f that
/// f_eps on K can see).
L1Report l1_embedding_bound(const RealFn& f, double l1_norm, const Mollifier& m, double eps, const KGrid& k = {});

/// Named test functions: const, zero, poly:k, abs, heaviside, exp, sin,
/// indicator (of [0, 1]) and spike:w (unit-mass bump of half-width w).
struct CatalogFunction {
    std::string name;
    RealFn f;
    bool smooth = false;
    /// L1 norm over [lo, hi].
    std::function<double(double, double)> l1;
};

/// Throws std::invalid_argument for an unknown name.
CatalogFunction catalog_function(const std::string& name);

}  // namespace workbench::colombeau
