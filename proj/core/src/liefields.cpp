#include "workbench/liefields.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace workbench::liefields {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

std::vector<double> axpy(std::span<const double> x, double a, const std::vector<double>& k) {
    std::vector<double> r(x.begin(), x.end());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += a * k[i];
    return r;
}

void guard(const std::vector<double>& x) {
    for (double v : x)
        if (!std::isfinite(v) || std::abs(v) > 1e12) throw DivergenceError("flow diverged: trajectory left |x| <= 1e12");
}

std::vector<double> rk4(const PolyVectorField& f, std::span<const double> p, double t, int steps) {
    std::vector<double> x(p.begin(), p.end());
    const double h = t / steps;
    for (int s = 0; s < steps; ++s) {
        const auto k1 = f.evaluate(x);
        const auto k2 = f.evaluate(axpy(x, 0.5 * h, k1));
        const auto k3 = f.evaluate(axpy(x, 0.5 * h, k2));
        const auto k4 = f.evaluate(axpy(x, h, k3));
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        guard(x);
    }
    return x;
}

void collect(int nvars, int remaining, Exponent& cur, int var, std::vector<Exponent>& out) {
    if (var == nvars) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        cur[idx(var)] = e;
        collect(nvars, remaining - e, cur, var + 1, out);
    }
    cur[idx(var)] = 0;
}

}  // namespace

MPoly::MPoly(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("negative variable count");
}

MPoly MPoly::constant(int nvars, double c) {
    MPoly p(nvars);
    p.add_term(Exponent(idx(nvars), 0), c);
    return p;
}

MPoly MPoly::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
    Exponent e(idx(nvars), 0);
    e[idx(i)] = 1;
    return monomial(e, 1.0);
}

MPoly MPoly::monomial(const Exponent& e, double c) {
    for (int v : e)
        if (v < 0) throw std::invalid_argument("negative exponent");
    MPoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

int MPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

double MPoly::coefficient(const Exponent& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? 0.0 : it->second;
}

void MPoly::add_term(const Exponent& e, double c) {
    if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent length must match variable count");
    if (c == 0.0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0.0) terms_.erase(it);
    }
}

MPoly MPoly::derivative(int i) const {
    if (i < 0 || i >= nvars_) throw std::invalid_argument("derivative variable out of range");
    MPoly d(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[idx(i)] == 0) continue;
        Exponent f = e;
        f[idx(i)] -= 1;
        d.add_term(f, c * e[idx(i)]);
    }
    return d;
}

double MPoly::evaluate(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("point dimension must match variable count");
    double acc = 0.0;
    for (const auto& [e, c] : terms_) {
        double m = c;
        for (int v = 0; v < nvars_; ++v)
            for (int k = 0; k < e[idx(v)]; ++k) m *= x[idx(v)];
        acc += m;
    }
    return acc;
}

MPoly MPoly::embedded(int nvars) const {
    if (nvars < nvars_) throw std::invalid_argument("cannot embed into fewer variables");
    MPoly p(nvars);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        f.resize(idx(nvars), 0);
        p.add_term(f, c);
    }
    return p;
}

void MPoly::require_same(const MPoly& other) const {
    if (other.nvars_ != nvars_) throw std::invalid_argument("polynomials live in different variable counts");
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
    require_same(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
    require_same(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MPoly& MPoly::operator*=(double s) {
    if (s == 0.0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    a.require_same(b);
    MPoly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e = ea;
            for (std::size_t v = 0; v < e.size(); ++v) e[v] += eb[v];
            r.add_term(e, ca * cb);
        }
    return r;
}

double max_coeff_diff(const MPoly& a, const MPoly& b) {
    double m = 0.0;
    for (const auto& [e, c] : (a - b).terms()) m = std::max(m, std::abs(c));
    return m;
}

PolyVectorField::PolyVectorField(std::vector<MPoly> components) : components_(std::move(components)) {
    for (const auto& c : components_)
        if (c.nvars() != dim()) throw std::invalid_argument("field components must be polynomials in dim variables");
}

PolyVectorField PolyVectorField::zero(int dim) { return PolyVectorField(std::vector<MPoly>(idx(dim), MPoly(dim))); }

bool PolyVectorField::is_zero() const {
    return std::all_of(components_.begin(), components_.end(), [](const MPoly& c) { return c.is_zero(); });
}

int PolyVectorField::degree() const {
    int d = -1;
    for (const auto& c : components_) d = std::max(d, c.degree());
    return d;
}

std::vector<double> PolyVectorField::evaluate(std::span<const double> x) const {
    std::vector<double> v;
    v.reserve(components_.size());
    for (const auto& c : components_) v.push_back(c.evaluate(x));
    return v;
}

PolyVectorField& PolyVectorField::operator+=(const PolyVectorField& rhs) {
    if (rhs.dim() != dim()) throw std::invalid_argument("field dimensions differ");
    for (int i = 0; i < dim(); ++i) components_[idx(i)] += rhs[i];
    return *this;
}

PolyVectorField& PolyVectorField::operator-=(const PolyVectorField& rhs) {
    if (rhs.dim() != dim()) throw std::invalid_argument("field dimensions differ");
    for (int i = 0; i < dim(); ++i) components_[idx(i)] -= rhs[i];
    return *this;
}

PolyVectorField& PolyVectorField::operator*=(double s) {
    for (auto& c : components_) c *= s;
    return *this;
}

double max_coeff_diff(const PolyVectorField& a, const PolyVectorField& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("field dimensions differ");
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i) m = std::max(m, max_coeff_diff(a[i], b[i]));
    return m;
}

PolyVectorField lie_bracket(const PolyVectorField& x, const PolyVectorField& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("lie bracket needs fields of equal dimension");
    const int d = x.dim();
    std::vector<MPoly> comps;
    for (int i = 0; i < d; ++i) {
        MPoly c(d);
        for (int j = 0; j < d; ++j) {
            c += x[j] * y[i].derivative(j);
            c -= y[j] * x[i].derivative(j);
        }
        comps.push_back(std::move(c));
    }
    return PolyVectorField(std::move(comps));
}

PolyVectorField jacobi_sum(const PolyVectorField& x, const PolyVectorField& y, const PolyVectorField& z) {
    return lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) + lie_bracket(z, lie_bracket(x, y));
}

FlowResult flow(const PolyVectorField& x, std::span<const double> p, double t, int steps) {
    if (steps < 16) throw std::invalid_argument("flow needs at least 16 steps");
    if (static_cast<int>(p.size()) != x.dim()) throw std::invalid_argument("point dimension must match the field");
    FlowResult r;
    const auto coarse = rk4(x, p, t, steps);
    r.point = rk4(x, p, t, 2 * steps);
    for (std::size_t i = 0; i < coarse.size(); ++i) r.error_estimate = std::max(r.error_estimate, std::abs(coarse[i] - r.point[i]));
    return r;
}

std::vector<double> bracket_via_flows(const PolyVectorField& x, const PolyVectorField& y, std::span<const double> p,
                                      double t, int steps) {
    if (x.dim() != y.dim()) throw std::invalid_argument("fields of different dimension");
    if (t == 0.0) throw std::invalid_argument("flow commutator needs t != 0");
    auto q = flow(x, p, t, steps).point;
    q = flow(y, q, t, steps).point;
    q = flow(x, q, -t, steps).point;
    q = flow(y, q, -t, steps).point;
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = (q[i] - p[i]) / (t * t);
    return q;
}

FlowSweepReport flow_commutator_sweep(const PolyVectorField& x, const PolyVectorField& y, std::span<const double> p,
                                      const std::vector<double>& ts, int steps) {
    if (ts.size() < 2) throw std::invalid_argument("slope fit needs at least two step sizes");
    const auto exact = lie_bracket(x, y).evaluate(p);
    FlowSweepReport rep;
    rep.ts = ts;
    for (double t : ts) {
        const auto approx = bracket_via_flows(x, y, p, t, steps);
        double e = 0.0;
        for (std::size_t i = 0; i < approx.size(); ++i) e = std::max(e, std::abs(approx[i] - exact[i]));
        rep.errors.push_back(e);
    }
    rep.exact = std::all_of(rep.errors.begin(), rep.errors.end(), [](double e) { return e < 1e-12; });
    if (!rep.exact) {
        double mx = 0.0, my = 0.0;
        const double n = static_cast<double>(ts.size());
        for (std::size_t i = 0; i < ts.size(); ++i) {
            mx += std::log(ts[i]) / n;
            my += std::log(std::max(rep.errors[i], 1e-300)) / n;
        }
        double sxy = 0.0, sxx = 0.0;
        for (std::size_t i = 0; i < ts.size(); ++i) {
            const double dx = std::log(ts[i]) - mx;
            sxy += dx * (std::log(std::max(rep.errors[i], 1e-300)) - my);
            sxx += dx * dx;
        }
        rep.slope = sxy / sxx;
    }
    rep.passes = rep.exact || rep.slope >= 0.9;
    return rep;
}

ProlongedField prolong1(const PolyVectorField& x) {
    const int d = x.dim();
    const int n = d + d * d;
    std::vector<MPoly> comps;
    for (int a = 0; a < d; ++a) comps.push_back(x[a].embedded(n));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            MPoly c(n);
            for (int k = 0; k < d; ++k) c += x[a].derivative(k).embedded(n) * MPoly::variable(n, d + k * d + b);
            comps.push_back(std::move(c));
        }
    return {x, PolyVectorField(std::move(comps))};
}

Lemma64Report check_lemma64(const PolyVectorField& x, const PolyVectorField& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("fields of different dimension");
    Lemma64Report rep{lie_bracket(prolong1(x).full, prolong1(y).full), prolong1(lie_bracket(x, y)).full, 0.0, false};
    rep.max_diff = max_coeff_diff(rep.lhs, rep.rhs);
    rep.exact = rep.lhs == rep.rhs;
    return rep;
}

std::vector<Exponent> monomials_up_to(int nvars, int max_degree) {
    std::vector<Exponent> all;
    Exponent cur(idx(nvars), 0);
    collect(nvars, max_degree, cur, 0, all);
    std::stable_sort(all.begin(), all.end(), [](const Exponent& a, const Exponent& b) {
        const int da = std::accumulate(a.begin(), a.end(), 0);
        const int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da < db;
        return a > b;
    });
    return all;
}

PolyVectorField random_field(Rng& rng, int dim, int max_degree, int max_coeff) {
    const auto monos = monomials_up_to(dim, max_degree);
    std::vector<MPoly> comps;
    for (int i = 0; i < dim; ++i) {
        MPoly c(dim);
        for (const auto& e : monos) {
            if (rng.integer(0, 1) == 0) continue;
            c.add_term(e, static_cast<double>(rng.integer(-max_coeff, max_coeff)));
        }
        comps.push_back(std::move(c));
    }
    return PolyVectorField(std::move(comps));
}

}  // namespace workbench::liefields
