#include "workbench/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace workbench::hardy {

namespace {

void require_boundary_point(cplx xi) {
    if (std::abs(std::abs(xi) - 1.0) > 1e-12) throw std::domain_error("kernel boundary argument must satisfy |xi| = 1");
}

void require_interior(cplx z) {
    if (std::abs(z) >= 1.0) throw std::domain_error("kernel interior argument must satisfy |z| < 1");
}

void require_reproducible(const HoloPoly& f, cplx z, int m) {
    if (m < 1 || !numcore::is_power_of_two(static_cast<std::size_t>(m)))
        throw std::invalid_argument("boundary point count must be a power of two");
    if (std::abs(z) > 0.9) throw std::domain_error("reproducing formulas are restricted to |z| <= 0.9");
    if (4 * f.degree() >= m) throw std::invalid_argument("polynomial degree too high for the boundary grid");
}

}  // namespace

std::vector<double> default_radius_ladder() { return {0.9, 0.99, 0.999, 0.9999}; }

double hardy_norm(const HoloPoly& f, double p, const std::vector<double>& radii, int m) {
    if (!(p > 0.0)) throw std::invalid_argument("Hardy norm exponent p must be > 0");
    if (m < 1) throw std::invalid_argument("Hardy norm needs at least one angle");
    if (radii.empty()) throw std::invalid_argument("Hardy norm needs at least one radius");
    double best = 0.0;
    for (double r : radii) {
        if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("Hardy norm radii must lie in (0, 1)");
        double acc = 0.0;
        for (int j = 0; j < m; ++j)
            acc += std::pow(std::abs(f(r * numcore::circle_point(static_cast<std::size_t>(j), static_cast<std::size_t>(m)))), p);
        best = std::max(best, std::pow(acc / m, 1.0 / p));
    }
    return best;
}

double parseval_mean(const HoloPoly& f, double r) {
    double acc = 0.0;
    double rk = 1.0;
    for (const cplx& a : f.coeffs()) {
        acc += std::norm(a) * rk * rk;
        rk *= r;
    }
    return std::sqrt(acc);
}

cplx szego_kernel(cplx z, cplx xi) {
    require_interior(z);
    require_boundary_point(xi);
    return 1.0 / (1.0 - z * std::conj(xi));
}

double poisson_kernel(cplx z, cplx xi) {
    require_interior(z);
    require_boundary_point(xi);
    return (1.0 - std::norm(z)) / std::norm(1.0 - z * std::conj(xi));
}

cplx szego_reproduce(const HoloPoly& f, cplx z, int m) {
    require_reproducible(f, z, m);
    cplx acc{0.0};
    for (int j = 0; j < m; ++j) {
        const cplx xi = numcore::circle_point(static_cast<std::size_t>(j), static_cast<std::size_t>(m));
        acc += f(xi) * szego_kernel(z, xi);
    }
    return acc / static_cast<double>(m);
}

cplx poisson_reproduce(const HoloPoly& f, cplx z, int m) {
    require_reproducible(f, z, m);
    cplx acc{0.0};
    for (int j = 0; j < m; ++j) {
        const cplx xi = numcore::circle_point(static_cast<std::size_t>(j), static_cast<std::size_t>(m));
        acc += f(xi) * poisson_kernel(z, xi);
    }
    return acc / static_cast<double>(m);
}

SubharmonicReport subharmonic_check(const HoloPoly& f, cplx z, double p, int m) {
    if (!(p > 0.0)) throw std::invalid_argument("subharmonic check exponent p must be > 0");
    require_reproducible(f, z, m);
    SubharmonicReport rep;
    rep.lhs = std::pow(std::abs(f(z)), p);
    double acc = 0.0;
    for (int j = 0; j < m; ++j) {
        const cplx xi = numcore::circle_point(static_cast<std::size_t>(j), static_cast<std::size_t>(m));
        acc += poisson_kernel(z, xi) * std::pow(std::abs(f(xi)), p);
    }
    rep.rhs = acc / m;
    rep.holds = rep.lhs <= rep.rhs + 1e-8;
    return rep;
}

HardyToeplitz::HardyToeplitz(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) throw std::invalid_argument("Toeplitz matrix must be square");
}

HardyToeplitz hardy_toeplitz(const FourierCoeffs& phi_hat, int n) {
    if (n < 0) throw std::invalid_argument("Toeplitz cutoff must be non-negative");
    if (!phi_hat.contains(-n) || !phi_hat.contains(n))
        throw std::invalid_argument("missing coefficients: symbol must cover -N..N");
    Eigen::MatrixXcd m(n + 1, n + 1);
    for (int j = 0; j <= n; ++j)
        for (int k = 0; k <= n; ++k) m(j, k) = phi_hat.at(j - k);
    return HardyToeplitz(std::move(m));
}

FourierCoeffs symbol_product(const FourierCoeffs& a, const FourierCoeffs& b) {
    const int lo = a.lo() + b.lo();
    std::vector<cplx> v(static_cast<std::size_t>(a.hi() + b.hi() - lo + 1), cplx{0.0});
    for (int i = a.lo(); i <= a.hi(); ++i)
        for (int j = b.lo(); j <= b.hi(); ++j) v[static_cast<std::size_t>(i + j - lo)] += a.at(i) * b.at(j);
    return FourierCoeffs(lo, std::move(v));
}

FourierCoeffs conj_symbol(const FourierCoeffs& a) {
    std::vector<cplx> v;
    v.reserve(a.values().size());
    for (int k = -a.hi(); k <= -a.lo(); ++k) v.push_back(std::conj(a.at(-k)));
    return FourierCoeffs(-a.hi(), std::move(v));
}

FourierCoeffs symbol_combination(cplx x, const FourierCoeffs& a, cplx y, const FourierCoeffs& b) {
    const int lo = std::min(a.lo(), b.lo());
    const int hi = std::max(a.hi(), b.hi());
    std::vector<cplx> v;
    v.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int k = lo; k <= hi; ++k) v.push_back(x * a.get(k) + y * b.get(k));
    return FourierCoeffs(lo, std::move(v));
}

int lowest_mode(const FourierCoeffs& a, double tol) {
    for (int k = a.lo(); k <= a.hi(); ++k)
        if (std::abs(a.at(k)) > tol) return k;
    return 0;
}

int highest_mode(const FourierCoeffs& a, double tol) {
    for (int k = a.hi(); k >= a.lo(); --k)
        if (std::abs(a.at(k)) > tol) return k;
    return 0;
}

MembershipReport disc_algebra_report(const BoundaryGrid& b, double tol) {
    const FourierCoeffs c = numcore::boundary_fourier(b);
    MembershipReport rep;
    for (int k = c.lo(); k < 0; ++k) {
        const double v = std::abs(c.at(k));
        if (v > rep.max_negative) {
            rep.max_negative = v;
            rep.witness = k;
        }
    }
    rep.member = rep.max_negative < tol;
    if (rep.member) rep.witness = 0;
    return rep;
}

bool disc_algebra_membership(const BoundaryGrid& b, double tol) { return disc_algebra_report(b, tol).member; }

}  // namespace workbench::hardy
