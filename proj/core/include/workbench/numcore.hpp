#pragma once

// Shared numerical substrate: truncated power series on the unit disc,
// tensor quadrature for the weighted area measure, equispaced boundary
// grids and their discrete Fourier coefficients.

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace workbench {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

namespace numcore {

/// Truncated power series sum_k a_k z^k. The stored length fixes the degree
/// (index of the last stored coefficient); trailing zeros are kept, so the
/// degree is a bookkeeping bound rather than the algebraic degree.
class HoloPoly {
 public:
    HoloPoly() : coeffs_{cplx{0.0}} {}
    explicit HoloPoly(std::vector<cplx> coeffs);
    HoloPoly(std::initializer_list<cplx> coeffs) : HoloPoly(std::vector<cplx>(coeffs)) {}

    static HoloPoly monomial(int k, cplx c = 1.0);
    static HoloPoly constant(cplx c) { return HoloPoly({c}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<cplx>& coeffs() const { return coeffs_; }

    /// Coefficient of z^k, zero past the stored degree.
    cplx operator[](int k) const;

    /// Horner evaluation.
    cplx operator()(cplx z) const;

    HoloPoly derivative() const;

    /// Keeps coefficients 0..max_degree.
    HoloPoly truncated(int max_degree) const;

    HoloPoly& operator+=(const HoloPoly& rhs);
    HoloPoly& operator-=(const HoloPoly& rhs);
    HoloPoly& operator*=(cplx s);

    friend HoloPoly operator+(HoloPoly lhs, const HoloPoly& rhs) { return lhs += rhs; }
    friend HoloPoly operator-(HoloPoly lhs, const HoloPoly& rhs) { return lhs -= rhs; }
    friend HoloPoly operator*(HoloPoly p, cplx s) { return p *= s; }
    friend HoloPoly operator*(cplx s, HoloPoly p) { return p *= s; }
    friend HoloPoly operator*(const HoloPoly& a, const HoloPoly& b);
    friend bool operator==(const HoloPoly&, const HoloPoly&) = default;

 private:
    std::vector<cplx> coeffs_;
};

/// Horner evaluation of p at z (the disc, |z| <= 1, is the intended domain).
cplx eval(const HoloPoly& p, cplx z);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussRule gauss_legendre(int n);

/// Normalizer (alpha + 1) of the weighted measure on the disc, i.e.
/// Gamma(alpha + 2) / Gamma(alpha + 1).
double weight_normalizer(double alpha);

/// Closed-form moment int |z|^{2k} dA_alpha = Gamma(k+1) Gamma(alpha+2) / Gamma(k+alpha+2).
/// Equals 1/(k+1) at alpha = 0 and is the squared norm of z^k.
double weighted_moment(double alpha, int k);

/// Tensor quadrature for dA_alpha = (alpha+1)(1-|z|^2)^alpha dA on the unit
/// disc, dA the area measure normalized to mass one. Radial nodes are
/// Gauss-Legendre on (0, 1); angles are equispaced (trapezoid). Nodes are
/// stored radius-major: index = ring * n_ang + angle.
struct DiscQuadrature {
    double alpha = 0.0;
    int n_rad = 0;
    int n_ang = 0;
    std::vector<double> radii;
    std::vector<double> radial_weights;  // sum to 1; include (alpha+1)(1-r^2)^alpha 2r dr
    std::vector<cplx> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }

    /// Largest basis cutoff N for which monomial integrands z^j conj(z)^k with
    /// j, k <= N (times a low-degree symbol) stay inside the exactness range of
    /// both rules.
    int max_cutoff() const;
};

/// Builds the tensor grid. Throws std::invalid_argument for alpha < 0,
/// n_rad < 4 or n_ang < 8.
DiscQuadrature build_disc_quadrature(double alpha, int n_rad, int n_ang);

/// Samples fn at every quadrature node.
std::vector<cplx> sample(const DiscQuadrature& q, const std::function<cplx(cplx)>& fn);

/// sum_i w_i f_i conj(g_i). Exactly conjugate-symmetric in its arguments.
/// Throws std::invalid_argument on length mismatch.
cplx inner_product(std::span<const cplx> f, std::span<const cplx> g, const DiscQuadrature& q);

/// sum_i w_i v_i.
cplx integrate(std::span<const cplx> values, const DiscQuadrature& q);

bool is_power_of_two(std::size_t m);

/// Samples on xi_j = exp(2 pi i j / M); M is a power of two.
class BoundaryGrid {
 public:
    explicit BoundaryGrid(std::vector<cplx> samples);
    static BoundaryGrid sample(const std::function<cplx(cplx)>& fn, std::size_t m);

    std::size_t size() const { return samples_.size(); }
    const std::vector<cplx>& samples() const { return samples_; }
    cplx operator[](std::size_t j) const { return samples_[j]; }
    cplx point(std::size_t j) const;

 private:
    std::vector<cplx> samples_;
};

/// Point exp(2 pi i j / m) on the unit circle.
cplx circle_point(std::size_t j, std::size_t m);

/// Fourier coefficients indexed by a contiguous integer range [lo, hi].
class FourierCoeffs {
 public:
    FourierCoeffs(int lo, std::vector<cplx> values);

    /// Dense range [-half_width, half_width] filled from sparse (k, c) terms;
    /// throws std::invalid_argument for a term outside the range.
    static FourierCoeffs from_terms(std::initializer_list<std::pair<int, cplx>> terms, int half_width);
    static FourierCoeffs from_terms(const std::vector<std::pair<int, cplx>>& terms, int half_width);

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(values_.size()) - 1; }
    bool contains(int k) const { return k >= lo() && k <= hi(); }

    /// Throws std::out_of_range outside [lo, hi].
    cplx at(int k) const;
    /// Zero outside [lo, hi].
    cplx get(int k) const { return contains(k) ? values_[static_cast<std::size_t>(k - lo_)] : cplx{}; }

    const std::vector<cplx>& values() const { return values_; }

 private:
    int lo_;
    std::vector<cplx> values_;
};

/// Discrete Fourier coefficients f^(k) = (1/M) sum_j f(xi_j) xi_j^{-k} for
/// -M/2 < k <= M/2. Exact for trigonometric polynomials of degree < M/2.
/// Throws std::invalid_argument when M is not a power of two.
FourierCoeffs boundary_fourier(const BoundaryGrid& b);

/// Inverse of boundary_fourier on an M-point grid; coefficients outside
/// (-M/2, M/2] must be absent.
BoundaryGrid synthesize(const FourierCoeffs& c, std::size_t m);

}  // namespace numcore
}  // namespace workbench
