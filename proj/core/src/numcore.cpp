#include "workbench/numcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/FFT>

namespace workbench::numcore {

HoloPoly::HoloPoly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(cplx{0.0});
}

HoloPoly HoloPoly::monomial(int k, cplx c) {
    if (k < 0) throw std::invalid_argument("monomial degree must be non-negative");
    std::vector<cplx> a(static_cast<std::size_t>(k) + 1, cplx{0.0});
    a.back() = c;
    return HoloPoly(std::move(a));
}

cplx HoloPoly::operator[](int k) const {
    if (k < 0 || k > degree()) return cplx{0.0};
    return coeffs_[static_cast<std::size_t>(k)];
}

cplx HoloPoly::operator()(cplx z) const {
    cplx acc{0.0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

HoloPoly HoloPoly::derivative() const {
    if (coeffs_.size() == 1) return HoloPoly{};
    std::vector<cplx> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
    return HoloPoly(std::move(d));
}

HoloPoly HoloPoly::truncated(int max_degree) const {
    if (max_degree < 0) throw std::invalid_argument("truncation degree must be non-negative");
    std::vector<cplx> a(static_cast<std::size_t>(max_degree) + 1, cplx{0.0});
    for (int k = 0; k <= std::min(max_degree, degree()); ++k) a[static_cast<std::size_t>(k)] = (*this)[k];
    return HoloPoly(std::move(a));
}

HoloPoly& HoloPoly::operator+=(const HoloPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), cplx{0.0});
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

HoloPoly& HoloPoly::operator-=(const HoloPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), cplx{0.0});
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    return *this;
}

HoloPoly& HoloPoly::operator*=(cplx s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

HoloPoly operator*(const HoloPoly& a, const HoloPoly& b) {
    std::vector<cplx> c(a.coeffs_.size() + b.coeffs_.size() - 1, cplx{0.0});
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return HoloPoly(std::move(c));
}

cplx eval(const HoloPoly& p, cplx z) { return p(z); }

GaussRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("Gauss-Legendre rule needs at least one node");
    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi initial guess, then Newton on P_n.
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0;
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // Refresh the derivative at the converged node.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        if (n == 1) p0 = 1.0;
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    return rule;
}

double weight_normalizer(double alpha) {
    return std::exp(std::lgamma(alpha + 2.0) - std::lgamma(alpha + 1.0));
}

double weighted_moment(double alpha, int k) {
    if (k < 0) throw std::invalid_argument("moment order must be non-negative");
    return std::exp(std::lgamma(k + 1.0) + std::lgamma(alpha + 2.0) - std::lgamma(k + alpha + 2.0));
}

int DiscQuadrature::max_cutoff() const {
    // Angular: band |k - j| + deg(symbol) with deg(symbol) <= N stays below n_ang / 2.
    // Radial: r^{j+k+d+1} (1-r^2)^alpha must have degree <= 2 n_rad - 1.
    const int angular = n_ang / 4;
    const int radial = (2 * n_rad - 2 - 2 * static_cast<int>(std::ceil(alpha))) / 3;
    return std::max(0, std::min(angular, radial));
}

DiscQuadrature build_disc_quadrature(double alpha, int n_rad, int n_ang) {
    if (!(alpha >= 0.0)) throw std::invalid_argument("weight exponent alpha must be >= 0");
    if (n_rad < 4) throw std::invalid_argument("n_rad must be >= 4");
    if (n_ang < 8) throw std::invalid_argument("n_ang must be >= 8");

    DiscQuadrature q;
    q.alpha = alpha;
    q.n_rad = n_rad;
    q.n_ang = n_ang;

    const GaussRule gl = gauss_legendre(n_rad);
    const double c_alpha = weight_normalizer(alpha);
    q.radii.resize(static_cast<std::size_t>(n_rad));
    q.radial_weights.resize(static_cast<std::size_t>(n_rad));
    for (int i = 0; i < n_rad; ++i) {
        const double r = 0.5 * (gl.nodes[static_cast<std::size_t>(i)] + 1.0);
        const double w = 0.5 * gl.weights[static_cast<std::size_t>(i)];
        q.radii[static_cast<std::size_t>(i)] = r;
        q.radial_weights[static_cast<std::size_t>(i)] = c_alpha * std::pow(1.0 - r * r, alpha) * 2.0 * r * w;
    }

    q.nodes.reserve(static_cast<std::size_t>(n_rad) * static_cast<std::size_t>(n_ang));
    q.weights.reserve(q.nodes.capacity());
    for (int i = 0; i < n_rad; ++i) {
        const double r = q.radii[static_cast<std::size_t>(i)];
        const double w = q.radial_weights[static_cast<std::size_t>(i)] / n_ang;
        for (int j = 0; j < n_ang; ++j) {
            q.nodes.push_back(r * circle_point(static_cast<std::size_t>(j), static_cast<std::size_t>(n_ang)));
            q.weights.push_back(w);
        }
    }
    return q;
}

std::vector<cplx> sample(const DiscQuadrature& q, const std::function<cplx(cplx)>& fn) {
    std::vector<cplx> out;
    out.reserve(q.size());
    for (const cplx& z : q.nodes) out.push_back(fn(z));
    return out;
}

cplx inner_product(std::span<const cplx> f, std::span<const cplx> g, const DiscQuadrature& q) {
    if (f.size() != q.size() || g.size() != q.size())
        throw std::invalid_argument("sample vectors must match the quadrature node count");
    // Written out in real arithmetic so that swapping f and g yields the exact
    // conjugate: every product and sum below is symmetric under the swap.
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double a = f[i].real();
        const double b = f[i].imag();
        const double c = g[i].real();
        const double d = g[i].imag();
        const double w = q.weights[i];
        re += w * (a * c + b * d);
        im += w * (b * c - a * d);
    }
    return {re, im};
}

cplx integrate(std::span<const cplx> values, const DiscQuadrature& q) {
    if (values.size() != q.size()) throw std::invalid_argument("sample vector must match the quadrature node count");
    cplx acc{0.0};
    for (std::size_t i = 0; i < values.size(); ++i) acc += q.weights[i] * values[i];
    return acc;
}

bool is_power_of_two(std::size_t m) { return m != 0 && (m & (m - 1)) == 0; }

cplx circle_point(std::size_t j, std::size_t m) {
    // Quarter points are returned exactly.
    const std::size_t jj = j % m;
    if (4 * jj == m) return {0.0, 1.0};
    if (2 * jj == m) return {-1.0, 0.0};
    if (4 * jj == 3 * m) return {0.0, -1.0};
    if (jj == 0) return {1.0, 0.0};
    const double theta = 2.0 * kPi * static_cast<double>(jj) / static_cast<double>(m);
    return {std::cos(theta), std::sin(theta)};
}

BoundaryGrid::BoundaryGrid(std::vector<cplx> samples) : samples_(std::move(samples)) {
    if (!is_power_of_two(samples_.size()))
        throw std::invalid_argument("boundary grid size must be a power of two, got " + std::to_string(samples_.size()));
}

BoundaryGrid BoundaryGrid::sample(const std::function<cplx(cplx)>& fn, std::size_t m) {
    if (!is_power_of_two(m)) throw std::invalid_argument("boundary grid size must be a power of two");
    std::vector<cplx> s(m);
    for (std::size_t j = 0; j < m; ++j) s[j] = fn(circle_point(j, m));
    return BoundaryGrid(std::move(s));
}

cplx BoundaryGrid::point(std::size_t j) const { return circle_point(j, samples_.size()); }

FourierCoeffs::FourierCoeffs(int lo, std::vector<cplx> values) : lo_(lo), values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("empty coefficient range");
}

FourierCoeffs FourierCoeffs::from_terms(std::initializer_list<std::pair<int, cplx>> terms, int half_width) {
    return from_terms(std::vector<std::pair<int, cplx>>(terms), half_width);
}

FourierCoeffs FourierCoeffs::from_terms(const std::vector<std::pair<int, cplx>>& terms, int half_width) {
    if (half_width < 0) throw std::invalid_argument("half width must be non-negative");
    std::vector<cplx> v(2 * static_cast<std::size_t>(half_width) + 1, cplx{0.0});
    for (const auto& [k, c] : terms) {
        if (std::abs(k) > half_width)
            throw std::invalid_argument("Fourier term " + std::to_string(k) + " outside range");
        v[static_cast<std::size_t>(k + half_width)] += c;
    }
    return FourierCoeffs(-half_width, std::move(v));
}

cplx FourierCoeffs::at(int k) const {
    if (!contains(k)) throw std::out_of_range("Fourier index " + std::to_string(k) + " outside stored range");
    return values_[static_cast<std::size_t>(k - lo_)];
}

FourierCoeffs boundary_fourier(const BoundaryGrid& b) {
    const std::size_t m = b.size();
    if (!is_power_of_two(m)) throw std::invalid_argument("boundary grid size must be a power of two");
    std::vector<cplx> spectrum;
    if (m == 1) {
        spectrum = b.samples();
    } else {
        Eigen::FFT<double> fft;
        fft.fwd(spectrum, b.samples());
    }
    const int half = static_cast<int>(m / 2);
    const int lo = (m == 1) ? 0 : -half + 1;
    std::vector<cplx> values(m);
    for (std::size_t idx = 0; idx < m; ++idx) {
        const int k = lo + static_cast<int>(idx);
        const std::size_t bin = static_cast<std::size_t>((k % static_cast<int>(m) + static_cast<int>(m)) % static_cast<int>(m));
        values[idx] = spectrum[bin] / static_cast<double>(m);
    }
    return FourierCoeffs(lo, std::move(values));
}

BoundaryGrid synthesize(const FourierCoeffs& c, std::size_t m) {
    if (!is_power_of_two(m)) throw std::invalid_argument("boundary grid size must be a power of two");
    const int half = static_cast<int>(m / 2);
    if (m > 1 && (c.lo() <= -half || c.hi() > half))
        throw std::invalid_argument("coefficients outside the representable band of the grid");
    std::vector<cplx> spectrum(m, cplx{0.0});
    for (int k = c.lo(); k <= c.hi(); ++k) {
        const std::size_t bin = static_cast<std::size_t>((k % static_cast<int>(m) + static_cast<int>(m)) % static_cast<int>(m));
        spectrum[bin] += c.at(k) * static_cast<double>(m);
    }
    if (m == 1) return BoundaryGrid(std::move(spectrum));
    std::vector<cplx> samples;
    Eigen::FFT<double> fft;
    fft.inv(samples, spectrum);
    return BoundaryGrid(std::move(samples));
}

}  // namespace workbench::numcore
