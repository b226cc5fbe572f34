#pragma once

// Weighted Bergman spaces on the unit disc: norms, the kernel, the
// orthogonal projection onto holomorphic functions and finite sections of
// Toeplitz operators T_phi f = P(phi f).
//
// Symbols and functions enter as samples on a DiscQuadrature. Matrices are
// expressed in the orthonormal basis e_k = z^k / ||z^k||, which for
// alpha = 0 is e_k = sqrt(k+1) z^k.
//
// The convolution inequality is checked angle-wise: at each quadrature
// ring the two angular profiles are convolved on the circle with the
// normalized arc measure, and the resulting disc function is measured in
// the A^p norm.

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "workbench/numcore.hpp"

namespace workbench::bergman {

using numcore::BoundaryGrid;
using numcore::DiscQuadrature;
using numcore::HoloPoly;

/// Finite section of an operator in the orthonormal monomial basis.
class OperatorMatrix {
 public:
    explicit OperatorMatrix(Eigen::MatrixXcd entries);

    int dim() const { return static_cast<int>(entries_.rows()); }
    const Eigen::MatrixXcd& entries() const { return entries_; }
    cplx operator()(int j, int k) const { return entries_(j, k); }

    /// Entries conj(M[k][j]).
    OperatorMatrix adjoint() const;
    bool all_finite() const;

 private:
    Eigen::MatrixXcd entries_;
};

/// K(z, u) = 1 / (1 - z conj(u))^2. Throws std::domain_error at or beyond
/// the pole |z conj(u)| >= 1.
cplx bergman_kernel(cplx z, cplx u);

/// (int |f|^p dA_alpha)^{1/p}. Throws std::invalid_argument for p <= 0 or a
/// sample-count mismatch.
double bergman_norm(std::span<const cplx> f, double p, const DiscQuadrature& q);

/// Iterated form with the circle mean taken first:
/// (sum_rings rho_i I(r_i)^{p})^{1/p}, I(r) = (mean_theta |f|^p)^{1/p}.
/// Agrees with bergman_norm up to summation order.
double bergman_norm_iterated(std::span<const cplx> f, double p, const DiscQuadrature& q);

/// Literal reading in which the inner circle mean already carries the
/// outer 1/p power: (sum_rings rho_i I(r_i))^{1/p}. Differs from the A^p
/// norm unless p = 1.
double bergman_norm_literal(std::span<const cplx> f, double p, const DiscQuadrature& q);

/// Coefficients b_k = <phi, z^k> / ||z^k||^2, k = 0..cutoff, of the
/// projection P(phi). Throws std::invalid_argument if cutoff exceeds
/// q.max_cutoff().
HoloPoly bergman_project(std::span<const cplx> phi, const DiscQuadrature& q, int cutoff);

/// M[j][k] = <phi e_k, e_j> for 0 <= j, k <= cutoff.
OperatorMatrix toeplitz_matrix(std::span<const cplx> phi, const DiscQuadrature& q, int cutoff);

/// Normalized circular convolution (f*g)_m = (1/M) sum_l f_l g_{m-l},
/// computed through the FFT. Throws std::invalid_argument on a size mismatch.
BoundaryGrid circle_convolution(const BoundaryGrid& f, const BoundaryGrid& g);

/// Ring-by-ring angular convolution of two sampled disc functions.
/// Requires q.n_ang to be a power of two.
std::vector<cplx> polar_convolution(std::span<const cplx> f, std::span<const cplx> g, const DiscQuadrature& q);

struct ConvolutionReport {
    double p = 0.0;
    double lhs = 0.0;  // ||f*g||_{A^p}
    double rhs = 0.0;  // ||f|| ||g||
    bool holds = false;
    // Same comparison with bergman_norm_literal on both sides.
    double lhs_literal = 0.0;
    double rhs_literal = 0.0;
    bool holds_literal = false;
};

/// Compares ||f*g|| with ||f|| ||g||; holds = lhs <= rhs + 1e-9.
ConvolutionReport check_convolution_submultiplicative(std::span<const cplx> f, std::span<const cplx> g, double p,
                                                      const DiscQuadrature& q);

/// max |a(j,k) - b(j,k)| over the leading block x block corner.
double leading_block_deviation(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, int block);

/// Smallest eigenvalue of the Hermitian part (M + M^*)/2.
double min_hermitian_eigenvalue(const OperatorMatrix& m);

}  // namespace workbench::bergman
