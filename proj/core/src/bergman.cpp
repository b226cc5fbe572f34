#include "workbench/bergman.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/FFT>

namespace workbench::bergman {

namespace {

void require_samples(std::span<const cplx> f, const DiscQuadrature& q) {
    if (f.size() != q.size()) throw std::invalid_argument("sample vector must match the quadrature node count");
}

void require_cutoff(int cutoff, const DiscQuadrature& q) {
    if (cutoff < 0) throw std::invalid_argument("basis cutoff must be non-negative");
    if (cutoff > q.max_cutoff())
        throw std::invalid_argument("cutoff " + std::to_string(cutoff) + " exceeds grid resolution (max " +
                                    std::to_string(q.max_cutoff()) + ")");
}

// Ring means of |f|^p.
std::vector<double> ring_power_means(std::span<const cplx> f, double p, const DiscQuadrature& q) {
    std::vector<double> means(static_cast<std::size_t>(q.n_rad), 0.0);
    for (int i = 0; i < q.n_rad; ++i) {
        double acc = 0.0;
        for (int j = 0; j < q.n_ang; ++j) acc += std::pow(std::abs(f[static_cast<std::size_t>(i * q.n_ang + j)]), p);
        means[static_cast<std::size_t>(i)] = acc / q.n_ang;
    }
    return means;
}

}  // namespace

OperatorMatrix::OperatorMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) throw std::invalid_argument("operator matrix must be square");
}

OperatorMatrix OperatorMatrix::adjoint() const { return OperatorMatrix(entries_.adjoint()); }

bool OperatorMatrix::all_finite() const { return entries_.allFinite(); }

cplx bergman_kernel(cplx z, cplx u) {
    const cplx s = z * std::conj(u);
    if (std::abs(s) >= 1.0) throw std::domain_error("Bergman kernel evaluated at its pole");
    const cplx d = 1.0 - s;
    return 1.0 / (d * d);
}

double bergman_norm(std::span<const cplx> f, double p, const DiscQuadrature& q) {
    if (!(p > 0.0)) throw std::invalid_argument("Bergman norm exponent p must be > 0");
    require_samples(f, q);
    double acc = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) acc += q.weights[i] * std::pow(std::abs(f[i]), p);
    return std::pow(acc, 1.0 / p);
}

double bergman_norm_iterated(std::span<const cplx> f, double p, const DiscQuadrature& q) {
    if (!(p > 0.0)) throw std::invalid_argument("Bergman norm exponent p must be > 0");
    require_samples(f, q);
    const auto means = ring_power_means(f, p, q);
    double acc = 0.0;
    for (int i = 0; i < q.n_rad; ++i) acc += q.radial_weights[static_cast<std::size_t>(i)] * means[static_cast<std::size_t>(i)];
    return std::pow(acc, 1.0 / p);
}

double bergman_norm_literal(std::span<const cplx> f, double p, const DiscQuadrature& q) {
    if (!(p > 0.0)) throw std::invalid_argument("Bergman norm exponent p must be > 0");
    require_samples(f, q);
    const auto means = ring_power_means(f, p, q);
    double acc = 0.0;
    for (int i = 0; i < q.n_rad; ++i)
        acc += q.radial_weights[static_cast<std::size_t>(i)] * std::pow(means[static_cast<std::size_t>(i)], 1.0 / p);
    return std::pow(acc, 1.0 / p);
}

HoloPoly bergman_project(std::span<const cplx> phi, const DiscQuadrature& q, int cutoff) {
    require_samples(phi, q);
    require_cutoff(cutoff, q);
    std::vector<cplx> b(static_cast<std::size_t>(cutoff) + 1, cplx{0.0});
    for (std::size_t i = 0; i < q.size(); ++i) {
        const cplx ubar = std::conj(q.nodes[i]);
        cplx power{1.0};
        const cplx wphi = q.weights[i] * phi[i];
        for (int k = 0; k <= cutoff; ++k) {
            b[static_cast<std::size_t>(k)] += wphi * power;
            power *= ubar;
        }
    }
    for (int k = 0; k <= cutoff; ++k) b[static_cast<std::size_t>(k)] /= numcore::weighted_moment(q.alpha, k);
    return HoloPoly(std::move(b));
}

OperatorMatrix toeplitz_matrix(std::span<const cplx> phi, const DiscQuadrature& q, int cutoff) {
    require_samples(phi, q);
    require_cutoff(cutoff, q);
    const Eigen::Index n = static_cast<Eigen::Index>(q.size());
    const Eigen::Index dim = cutoff + 1;

    Eigen::MatrixXcd powers(n, dim);
    Eigen::VectorXcd weighted(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const cplx u = q.nodes[static_cast<std::size_t>(i)];
        cplx power{1.0};
        for (Eigen::Index k = 0; k < dim; ++k) {
            powers(i, k) = power;
            power *= u;
        }
        weighted(i) = q.weights[static_cast<std::size_t>(i)] * phi[static_cast<std::size_t>(i)];
    }
    // M[j][k] = sum_i w_i phi_i u_i^k conj(u_i)^j / sqrt(m_j m_k)
    Eigen::MatrixXcd m = powers.adjoint() * (weighted.asDiagonal() * powers);
    for (Eigen::Index j = 0; j < dim; ++j) {
        const double mj = numcore::weighted_moment(q.alpha, static_cast<int>(j));
        for (Eigen::Index k = 0; k < dim; ++k) {
            const double mk = numcore::weighted_moment(q.alpha, static_cast<int>(k));
            m(j, k) /= std::sqrt(mj * mk);
        }
    }
    return OperatorMatrix(std::move(m));
}

BoundaryGrid circle_convolution(const BoundaryGrid& f, const BoundaryGrid& g) {
    if (f.size() != g.size()) throw std::invalid_argument("circle convolution needs equal grid sizes");
    const std::size_t m = f.size();
    if (m == 1) return BoundaryGrid({f[0] * g[0]});
    Eigen::FFT<double> fft;
    std::vector<cplx> fs;
    std::vector<cplx> gs;
    fft.fwd(fs, f.samples());
    fft.fwd(gs, g.samples());
    for (std::size_t k = 0; k < m; ++k) fs[k] *= gs[k] / static_cast<double>(m);
    std::vector<cplx> out;
    fft.inv(out, fs);
    return BoundaryGrid(std::move(out));
}

std::vector<cplx> polar_convolution(std::span<const cplx> f, std::span<const cplx> g, const DiscQuadrature& q) {
    require_samples(f, q);
    require_samples(g, q);
    if (!numcore::is_power_of_two(static_cast<std::size_t>(q.n_ang)))
        throw std::invalid_argument("angular convolution needs a power-of-two angular resolution");
    std::vector<cplx> out(q.size());
    const auto na = static_cast<std::size_t>(q.n_ang);
    for (int i = 0; i < q.n_rad; ++i) {
        const std::size_t off = static_cast<std::size_t>(i) * na;
        BoundaryGrid fr(std::vector<cplx>(f.begin() + static_cast<std::ptrdiff_t>(off),
                                          f.begin() + static_cast<std::ptrdiff_t>(off + na)));
        BoundaryGrid gr(std::vector<cplx>(g.begin() + static_cast<std::ptrdiff_t>(off),
                                          g.begin() + static_cast<std::ptrdiff_t>(off + na)));
        const BoundaryGrid c = circle_convolution(fr, gr);
        std::copy(c.samples().begin(), c.samples().end(), out.begin() + static_cast<std::ptrdiff_t>(off));
    }
    return out;
}

ConvolutionReport check_convolution_submultiplicative(std::span<const cplx> f, std::span<const cplx> g, double p,
                                                      const DiscQuadrature& q) {
    const std::vector<cplx> fg = polar_convolution(f, g, q);
    ConvolutionReport r;
    r.p = p;
    r.lhs = bergman_norm(fg, p, q);
    r.rhs = bergman_norm(f, p, q) * bergman_norm(g, p, q);
    r.holds = r.lhs <= r.rhs + 1e-9;
    r.lhs_literal = bergman_norm_literal(fg, p, q);
    r.rhs_literal = bergman_norm_literal(f, p, q) * bergman_norm_literal(g, p, q);
    r.holds_literal = r.lhs_literal <= r.rhs_literal + 1e-9;
    return r;
}

double leading_block_deviation(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, int block) {
    if (block <= 0) return 0.0;
    if (block > a.rows() || block > b.rows() || block > a.cols() || block > b.cols())
        throw std::invalid_argument("leading block larger than the matrices");
    return (a.topLeftCorner(block, block) - b.topLeftCorner(block, block)).cwiseAbs().maxCoeff();
}

double min_hermitian_eigenvalue(const OperatorMatrix& m) {
    const Eigen::MatrixXcd h = 0.5 * (m.entries() + m.entries().adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolver failed");
    return solver.eigenvalues().minCoeff();
}

}  // namespace workbench::bergman
