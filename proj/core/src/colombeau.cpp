#include "workbench/colombeau.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "workbench/numcore.hpp"
#include "workbench/parallel.hpp"

namespace workbench::colombeau {

namespace {

// Truncated Taylor series in h up to h^4.
using Jet = std::array<double, kMaxDerivative + 1>;

Jet jet_mul(const Jet& a, const Jet& b) {
    Jet r{};
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; i + j < r.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Jet jet_reciprocal(const Jet& s) {
    Jet r{};
    r[0] = 1.0 / s[0];
    for (std::size_t k = 1; k < r.size(); ++k) {
        double acc = 0.0;
        for (std::size_t j = 1; j <= k; ++j) acc += s[j] * r[k - j];
        r[k] = -acc / s[0];
    }
    return r;
}

Jet jet_exp(const Jet& u) {
    Jet v = u;
    v[0] = 0.0;
    Jet term{};
    term[0] = 1.0;
    Jet sum = term;
    for (int n = 1; n <= kMaxDerivative; ++n) {
        term = jet_mul(term, v);
        for (double& t : term) t /= n;
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += term[i];
    }
    const double e0 = std::exp(u[0]);
    for (double& x : sum) x *= e0;
    return sum;
}

Jet bump_jet(double t) {
    Jet zero{};
    if (!(std::abs(t) < 1.0)) return zero;
    // s = 1 - (t + h)^2, u = -1/s
    const Jet s{1.0 - t * t, -2.0 * t, -1.0, 0.0, 0.0};
    if (-1.0 / s[0] < -700.0) return zero;
    Jet u = jet_reciprocal(s);
    for (double& x : u) x = -x;
    return jet_exp(u);
}

Jet poly_jet(const std::vector<int>& powers, const std::vector<double>& coeffs, double t) {
    Jet r{};
    for (std::size_t i = 0; i < powers.size(); ++i) {
        // d^k/dt^k t^p / k! = C(p, k) t^{p-k}
        const int p = powers[i];
        double binom = 1.0;
        for (int k = 0; k <= kMaxDerivative && k <= p; ++k) {
            r[static_cast<std::size_t>(k)] += coeffs[i] * binom * std::pow(t, p - k);
            binom = binom * (p - k) / (k + 1);
        }
    }
    return r;
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

void require_eps(double eps) {
    if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("eps must lie in (0, 1]");
}

void require_alpha(int alpha) {
    if (alpha < 0 || alpha > kMaxDerivative) throw std::invalid_argument("derivative order must lie in 0..4");
}

void require_grid(const KGrid& k) {
    if (k.n < 2 || !(k.hi > k.lo)) throw std::invalid_argument("compact grid needs n >= 2 and lo < hi");
}

Mollifier assemble(int q, const std::string& kind, std::vector<int> powers, const std::vector<std::pair<int, double>>& constraints,
                   int n_quad) {
    if (n_quad < 64 || n_quad % 2 != 0) throw std::invalid_argument("mollifier quadrature needs an even count >= 64");
    Mollifier m;
    m.q = q;
    m.kind = kind;
    m.powers = std::move(powers);
    for (int i = 0; i <= n_quad; ++i) {
        // Mirror-exact nodes: y_{n-i} == -y_i.
        const double y = i <= n_quad / 2 ? -1.0 + 2.0 * i / n_quad : 1.0 - 2.0 * (n_quad - i) / n_quad;
        m.nodes.push_back(y);
        m.weights.push_back((i == 0 || i == n_quad) ? 1.0 / n_quad : 2.0 / n_quad);
    }
    std::vector<double> b(m.nodes.size());
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = bump(m.nodes[i]);
    auto raw_moment = [&](int a) {
        double acc = 0.0;
        for (std::size_t i = 0; i < b.size(); ++i) acc += m.weights[i] * b[i] * std::pow(m.nodes[i], a);
        return acc;
    };

    const auto n = static_cast<Eigen::Index>(m.powers.size());
    Eigen::MatrixXd a(n, n);
    Eigen::VectorXd rhs(n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) a(r, c) = raw_moment(constraints[static_cast<std::size_t>(r)].first + m.powers[static_cast<std::size_t>(c)]);
        rhs(r) = constraints[static_cast<std::size_t>(r)].second;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    if (lu.rank() < n) throw std::runtime_error("singular moment system");
    const Eigen::VectorXd c = lu.solve(rhs);
    m.coeffs.assign(c.data(), c.data() + n);

    m.derivative_samples.assign(kMaxDerivative + 1, std::vector<double>(m.nodes.size(), 0.0));
    for (std::size_t i = 0; i < m.nodes.size(); ++i)
        for (int alpha = 0; alpha <= kMaxDerivative; ++alpha)
            m.derivative_samples[static_cast<std::size_t>(alpha)][i] = m.derivative(alpha, m.nodes[i]);
    return m;
}

}  // namespace

double bump(double t) {
    if (!(std::abs(t) < 1.0)) return 0.0;
    return std::exp(-1.0 / (1.0 - t * t));
}

double Mollifier::operator()(double t) const {
    if (!(std::abs(t) < 1.0)) return 0.0;
    double p = 0.0;
    for (std::size_t i = 0; i < powers.size(); ++i) p += coeffs[i] * std::pow(t, powers[i]);
    return bump(t) * p;
}

double Mollifier::derivative(int alpha, double t) const {
    require_alpha(alpha);
    if (alpha == 0) return (*this)(t);
    const Jet j = jet_mul(bump_jet(t), poly_jet(powers, coeffs, t));
    return j[static_cast<std::size_t>(alpha)] * factorial(alpha);
}

double Mollifier::sup() const {
    double s = 0.0;
    for (double v : samples()) s = std::max(s, std::abs(v));
    return s;
}

Mollifier build_mollifier(int q, int n_quad) {
    if (q < 0 || q % 2 != 0) throw std::invalid_argument("even mollifier order q must be even and >= 0");
    std::vector<int> powers;
    std::vector<std::pair<int, double>> constraints;
    for (int p = 0; p <= q; p += 2) {
        powers.push_back(p);
        constraints.emplace_back(p, p == 0 ? 1.0 : 0.0);
    }
    return assemble(q, "even", std::move(powers), constraints, n_quad);
}

Mollifier build_exact_order_mollifier(int q, int n_quad) {
    if (q < 0) throw std::invalid_argument("mollifier order q must be >= 0");
    std::vector<int> powers;
    std::vector<std::pair<int, double>> constraints;
    for (int p = 0; p <= q; ++p) {
        powers.push_back(p);
        constraints.emplace_back(p, p == 0 ? 1.0 : 0.0);
    }
    // Target for moment q+1: the (q+1)-th absolute moment of the normalized bump.
    const Mollifier base = build_mollifier(0, n_quad);
    double target = 0.0;
    for (std::size_t i = 0; i < base.nodes.size(); ++i)
        target += base.weights[i] * base.samples()[i] * std::pow(std::abs(base.nodes[i]), q + 1);
    powers.push_back(q + 1);
    constraints.emplace_back(q + 1, target);
    return assemble(q, "exact", std::move(powers), constraints, n_quad);
}

double moment(const Mollifier& m, int a) {
    if (a < 0) throw std::invalid_argument("moment order must be >= 0");
    // Symmetric pairing keeps odd moments of even mollifiers at rounding level.
    const std::size_t n = m.nodes.size();
    double acc = 0.0;
    for (std::size_t i = 0, j = n - 1; i < j; ++i, --j)
        acc += m.weights[i] * m.samples()[i] * std::pow(m.nodes[i], a) + m.weights[j] * m.samples()[j] * std::pow(m.nodes[j], a);
    if (n % 2 == 1) acc += m.weights[n / 2] * m.samples()[n / 2] * std::pow(m.nodes[n / 2], a);
    return acc;
}

std::vector<double> KGrid::points() const {
    std::vector<double> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = point(i);
    return p;
}

std::vector<double> regularize(const RealFn& f, const Mollifier& m, double eps, const KGrid& k) {
    return regularize_derivative(f, m, eps, k, 0);
}

std::vector<double> regularize_derivative(const RealFn& f, const Mollifier& m, double eps, const KGrid& k, int alpha) {
    require_eps(eps);
    require_alpha(alpha);
    require_grid(k);
    const auto& phi = m.derivative_samples[static_cast<std::size_t>(alpha)];
    const double scale = (alpha % 2 == 0 ? 1.0 : -1.0) * std::pow(eps, -alpha);
    std::vector<double> out(static_cast<std::size_t>(k.n));
    parallel_for(out.size(), [&](std::size_t i) {
        const double t = k.point(static_cast<int>(i));
        double acc = 0.0;
        for (std::size_t j = 0; j < m.nodes.size(); ++j)
            if (phi[j] != 0.0) acc += m.weights[j] * phi[j] * f(t + eps * m.nodes[j]);
        out[i] = scale * acc;
    });
    return out;
}

double seminorm(std::span<const double> f_eps, const KGrid& k, int alpha) {
    require_alpha(alpha);
    require_grid(k);
    if (static_cast<int>(f_eps.size()) != k.n) throw std::invalid_argument("samples must match the compact grid");
    if (alpha == 0) {
        double s = 0.0;
        for (double v : f_eps) s = std::max(s, std::abs(v));
        return s;
    }
    // 4th-order central stencils, offsets -half..half.
    static const std::array<std::vector<double>, 5> stencils{{
        {},
        {1.0 / 12, -8.0 / 12, 0.0, 8.0 / 12, -1.0 / 12},
        {-1.0 / 12, 16.0 / 12, -30.0 / 12, 16.0 / 12, -1.0 / 12},
        {1.0 / 8, -8.0 / 8, 13.0 / 8, 0.0, -13.0 / 8, 8.0 / 8, -1.0 / 8},
        {-1.0 / 6, 12.0 / 6, -39.0 / 6, 56.0 / 6, -39.0 / 6, 12.0 / 6, -1.0 / 6},
    }};
    const auto& st = stencils[static_cast<std::size_t>(alpha)];
    const int half = static_cast<int>(st.size()) / 2;
    if (k.n < 2 * half + 1) throw std::invalid_argument("compact grid too coarse for the requested derivative order");
    const double h = std::pow(k.spacing(), alpha);
    double s = 0.0;
    for (int i = half; i < k.n - half; ++i) {
        double d = 0.0;
        for (int o = -half; o <= half; ++o) d += st[static_cast<std::size_t>(o + half)] * f_eps[static_cast<std::size_t>(i + o)];
        s = std::max(s, std::abs(d / h));
    }
    return s;
}

std::vector<double> epsilon_ladder(int count) {
    if (count < 1) throw std::invalid_argument("ladder needs at least one step");
    std::vector<double> e;
    for (int j = 1; j <= count; ++j) e.push_back(std::ldexp(1.0, -j));
    return e;
}

std::string to_string(OrderClass c) {
    switch (c) {
        case OrderClass::negligible:
            return "negligible";
        case OrderClass::moderate:
            return "moderate";
        case OrderClass::unbounded:
            return "unbounded";
    }
    return "unknown";
}

AsymptoticReport estimate_order(const EpsilonNet& net, double floor, int requested_m) {
    if (net.epsilons.size() != net.values.size()) throw std::invalid_argument("net sizes differ");
    if (net.epsilons.size() < 4) throw std::invalid_argument("order fit needs at least 4 ladder points");
    for (std::size_t i = 0; i < net.values.size(); ++i) {
        if (!std::isfinite(net.values[i]) || !std::isfinite(net.epsilons[i]) || !(net.epsilons[i] > 0.0))
            throw std::invalid_argument("net contains non-finite values");
        if (i > 0 && !(net.epsilons[i] < net.epsilons[i - 1])) throw std::invalid_argument("ladder must decrease strictly");
    }
    AsymptoticReport rep;
    rep.floor = floor;
    std::vector<std::size_t> above;
    for (std::size_t i = 0; i < net.values.size(); ++i)
        if (std::abs(net.values[i]) > floor) above.push_back(i);
    if (above.size() < 2) {
        rep.slope = std::numeric_limits<double>::infinity();
        rep.classification = OrderClass::negligible;
        rep.order = -1;
        rep.points_used = static_cast<int>(above.size());
        return rep;
    }
    const std::size_t first = above.size() > 4 ? above.size() - 4 : 0;
    std::vector<double> lx;
    std::vector<double> ly;
    for (std::size_t i = first; i < above.size(); ++i) {
        lx.push_back(std::log(net.epsilons[above[i]]));
        ly.push_back(std::log(std::abs(net.values[above[i]])));
    }
    const double n = static_cast<double>(lx.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        mx += lx[i] / n;
        my += ly[i] / n;
    }
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxy += (lx[i] - mx) * (ly[i] - my);
        sxx += (lx[i] - mx) * (lx[i] - mx);
    }
    rep.slope = sxy / sxx;
    rep.points_used = static_cast<int>(lx.size());

    constexpr double tol = 0.05;
    if (requested_m >= 0 && rep.slope >= requested_m - tol) {
        rep.classification = OrderClass::negligible;
        rep.order = requested_m;
    } else if (requested_m < 0 && rep.slope >= 1.0 - tol) {
        rep.classification = OrderClass::negligible;
        rep.order = static_cast<int>(std::floor(rep.slope + tol));
    } else {
        const int big_n = std::max(0, static_cast<int>(std::ceil(-rep.slope - tol)));
        rep.classification = big_n <= 8 ? OrderClass::moderate : OrderClass::unbounded;
        rep.order = big_n;
    }
    return rep;
}

EpsilonNet taylor_defect(const RealFn& f, const Mollifier& m, const std::vector<double>& epsilons, const KGrid& k) {
    require_grid(k);
    EpsilonNet net{epsilons, {}, 0, k};
    const auto& phi = m.samples();
    for (double eps : epsilons) {
        require_eps(eps);
        std::vector<double> d(static_cast<std::size_t>(k.n));
        parallel_for(d.size(), [&](std::size_t i) {
            const double t = k.point(static_cast<int>(i));
            const double ft = f(t);
            double acc = 0.0;
            for (std::size_t j = 0; j < m.nodes.size(); ++j)
                if (phi[j] != 0.0) acc += m.weights[j] * phi[j] * (f(t + eps * m.nodes[j]) - ft);
            d[i] = std::abs(acc);
        });
        net.values.push_back(*std::max_element(d.begin(), d.end()));
    }
    return net;
}

EpsilonNet product_defect(const RealFn& f, const RealFn& g, const Mollifier& m, const std::vector<double>& epsilons,
                          const KGrid& k) {
    EpsilonNet net{epsilons, {}, 0, k};
    const RealFn fg = [&](double t) { return f(t) * g(t); };
    for (double eps : epsilons) {
        const auto fe = regularize(f, m, eps, k);
        const auto ge = regularize(g, m, eps, k);
        const auto fge = regularize(fg, m, eps, k);
        double s = 0.0;
        for (std::size_t i = 0; i < fe.size(); ++i) s = std::max(s, std::abs(fe[i] * ge[i] - fge[i]));
        net.values.push_back(s);
    }
    return net;
}

EpsilonNet seminorm_net(const RealFn& f, const Mollifier& m, const std::vector<double>& epsilons, int alpha, const KGrid& k) {
    EpsilonNet net{epsilons, {}, alpha, k};
    for (double eps : epsilons) net.values.push_back(seminorm(regularize_derivative(f, m, eps, k, alpha), k, 0));
    return net;
}

L1Report l1_embedding_bound(const RealFn& f, double l1_norm, const Mollifier& m, double eps, const KGrid& k) {
    if (!(l1_norm >= 0.0)) throw std::invalid_argument("L1 norm must be non-negative");
    L1Report rep;
    rep.sup_value = seminorm(regularize(f, m, eps, k), k, 0);
    rep.l1_norm = l1_norm;
    rep.c = m.sup() / eps;
    rep.ratio = l1_norm > 0.0 ? rep.sup_value / l1_norm : 0.0;
    rep.holds = rep.sup_value <= rep.c * l1_norm * (1.0 + 1e-9);
    return rep;
}

namespace {

// Composite Gauss-Legendre of |f| with panel edges at the given breakpoints.
double abs_integral(const RealFn& f, double lo, double hi, std::vector<double> breaks) {
    if (!(hi > lo)) return 0.0;
    static const numcore::GaussRule rule = numcore::gauss_legendre(10);
    breaks.push_back(lo);
    breaks.push_back(hi);
    std::sort(breaks.begin(), breaks.end());
    double acc = 0.0;
    for (std::size_t s = 0; s + 1 < breaks.size(); ++s) {
        const double a = std::max(lo, breaks[s]);
        const double b = std::min(hi, breaks[s + 1]);
        if (!(b > a)) continue;
        constexpr int panels = 256;
        const double h = (b - a) / panels;
        for (int p = 0; p < panels; ++p) {
            const double mid = a + (p + 0.5) * h;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += 0.5 * h * rule.weights[i] * std::abs(f(mid + 0.5 * h * rule.nodes[i]));
        }
    }
    return acc;
}

double parse_number(const std::string& text, const std::string& name) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad parameter in function name: " + name);
    }
    if (used != text.size()) throw std::invalid_argument("bad parameter in function name: " + name);
    return v;
}

}  // namespace

CatalogFunction catalog_function(const std::string& name) {
    CatalogFunction c;
    c.name = name;
    auto numeric_l1 = [](RealFn f, std::vector<double> breaks) {
        return [f = std::move(f), breaks = std::move(breaks)](double lo, double hi) { return abs_integral(f, lo, hi, breaks); };
    };
    if (name == "const") {
        c.f = [](double) { return 1.0; };
        c.smooth = true;
        c.l1 = [](double lo, double hi) { return std::max(0.0, hi - lo); };
    } else if (name == "zero") {
        c.f = [](double) { return 0.0; };
        c.smooth = true;
        c.l1 = [](double, double) { return 0.0; };
    } else if (name.rfind("poly:", 0) == 0) {
        const double kd = parse_number(name.substr(5), name);
        if (kd < 0 || kd != std::floor(kd) || kd > 32) throw std::invalid_argument("poly degree must be an integer in 0..32");
        const int k = static_cast<int>(kd);
        c.f = [k](double t) { return std::pow(t, k); };
        c.smooth = true;
        c.l1 = numeric_l1(c.f, {0.0});
    } else if (name == "abs") {
        c.f = [](double t) { return std::abs(t); };
        c.l1 = numeric_l1(c.f, {0.0});
    } else if (name == "heaviside") {
        c.f = [](double t) { return t >= 0.0 ? 1.0 : 0.0; };
        c.l1 = [](double lo, double hi) { return std::max(0.0, hi - std::max(lo, 0.0)); };
    } else if (name == "exp") {
        c.f = [](double t) { return std::exp(t); };
        c.smooth = true;
        c.l1 = [](double lo, double hi) { return hi > lo ? std::exp(hi) - std::exp(lo) : 0.0; };
    } else if (name == "sin") {
        c.f = [](double t) { return std::sin(t); };
        c.smooth = true;
        c.l1 = numeric_l1(c.f, {0.0});
    } else if (name == "indicator") {
        c.f = [](double t) { return (t >= 0.0 && t <= 1.0) ? 1.0 : 0.0; };
        c.l1 = [](double lo, double hi) { return std::max(0.0, std::min(hi, 1.0) - std::max(lo, 0.0)); };
    } else if (name.rfind("spike:", 0) == 0) {
        const double w = parse_number(name.substr(6), name);
        if (!(w > 0.0 && w <= 1.0)) throw std::invalid_argument("spike width must lie in (0, 1]");
        const double mass = abs_integral(bump, -1.0, 1.0, {});
        c.f = [w, mass](double t) { return bump(t / w) / (w * mass); };
        c.smooth = true;
        c.l1 = numeric_l1(c.f, {-w, w});
    } else {
        throw std::invalid_argument("unknown function: " + name);
    }
    return c;
}

}  // namespace workbench::colombeau
