#pragma once

// Hardy spaces on the disc: integral means, Cauchy-Szego and Poisson
// kernels with their reproducing formulas, Toeplitz matrices built from
// symbol Fourier coefficients, and disc-algebra membership.
//
// Arc measure is normalized to mass one throughout.

#include <vector>

#include <Eigen/Dense>

#include "workbench/numcore.hpp"

namespace workbench::hardy {

using numcore::BoundaryGrid;
using numcore::FourierCoeffs;
using numcore::HoloPoly;

/// {0.9, 0.99, 0.999, 0.9999}.
std::vector<double> default_radius_ladder();

/// max over radii of ((1/M) sum_j |f(r xi_j)|^p)^{1/p}.
/// Throws std::invalid_argument for p <= 0, m < 1 or a radius outside (0, 1).
double hardy_norm(const HoloPoly& f, double p, const std::vector<double>& radii, int m = 1024);

/// (sum_k |a_k|^2 r^{2k})^{1/2}, the p = 2 mean at radius r by Parseval.
double parseval_mean(const HoloPoly& f, double r);

/// 1 / (1 - z conj(xi)). Throws std::domain_error for |z| >= 1 or
/// ||xi| - 1| > 1e-12.
cplx szego_kernel(cplx z, cplx xi);

/// (1 - |z|^2) / |1 - z conj(xi)|^2, same domain checks.
double poisson_kernel(cplx z, cplx xi);

/// Discretized reproducing formulas on m boundary points (m a power of
/// two). Throw std::domain_error for |z| > 0.9 and std::invalid_argument
/// when deg f >= m / 4.
cplx szego_reproduce(const HoloPoly& f, cplx z, int m = 256);
cplx poisson_reproduce(const HoloPoly& f, cplx z, int m = 256);

struct SubharmonicReport {
    double lhs = 0.0;  // |f(z)|^p
    double rhs = 0.0;  // (1/M) sum_j P(z, xi_j) |f(xi_j)|^p
    bool holds = false;
};

/// holds = lhs <= rhs + 1e-8.
SubharmonicReport subharmonic_check(const HoloPoly& f, cplx z, double p, int m = 256);

/// Finite section M[j][k] = phi^(j - k), 0 <= j, k <= N.
class HardyToeplitz {
 public:
    explicit HardyToeplitz(Eigen::MatrixXcd entries);
    int dim() const { return static_cast<int>(entries_.rows()); }
    const Eigen::MatrixXcd& entries() const { return entries_; }
    cplx operator()(int j, int k) const { return entries_(j, k); }
    HardyToeplitz adjoint() const { return HardyToeplitz(entries_.adjoint()); }

 private:
    Eigen::MatrixXcd entries_;
};

/// Throws std::invalid_argument ("missing coefficients") unless phi_hat
/// covers -N..N.
HardyToeplitz hardy_toeplitz(const FourierCoeffs& phi_hat, int n);

/// Coefficients of the pointwise product of two symbols (sequence
/// convolution over the union of the ranges).
FourierCoeffs symbol_product(const FourierCoeffs& a, const FourierCoeffs& b);

/// Coefficients of conj(phi): k -> conj(phi^(-k)).
FourierCoeffs conj_symbol(const FourierCoeffs& a);

/// a x + b y on the union of the ranges.
FourierCoeffs symbol_combination(cplx x, const FourierCoeffs& a, cplx y, const FourierCoeffs& b);

/// Smallest / largest index carrying a coefficient with modulus > tol,
/// or 0 when there is none.
int lowest_mode(const FourierCoeffs& a, double tol = 0.0);
int highest_mode(const FourierCoeffs& a, double tol = 0.0);

struct MembershipReport {
    bool member = false;
    int witness = 0;          // k < 0 with the largest |f^(k)| (0 when member)
    double max_negative = 0.0;
};

/// Member iff max over k < 0 of |f^(k)| is below tol.
MembershipReport disc_algebra_report(const BoundaryGrid& b, double tol);
bool disc_algebra_membership(const BoundaryGrid& b, double tol);

}  // namespace workbench::hardy
