#pragma once

// Polynomial vector fields on R^d with symbolic brackets, RK4 flows and the
// first-order (frame bundle) prolongation.
//
// Coefficients are doubles. Brackets and prolongations only add and
// multiply, so integer inputs stay exact and comparisons are exact
// (terms that cancel to 0.0 are dropped).

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "workbench/random.hpp"

namespace workbench::liefields {

using Exponent = std::vector<int>;

/// Sparse multivariate polynomial in x_0..x_{n-1}.
class MPoly {
 public:
    explicit MPoly(int nvars = 0);
    static MPoly constant(int nvars, double c);
    /// x_i.
    static MPoly variable(int nvars, int i);
    static MPoly monomial(const Exponent& e, double c);

    int nvars() const { return nvars_; }
    const std::map<Exponent, double>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    double coefficient(const Exponent& e) const;

    /// Adds c x^e, dropping the term if it cancels exactly.
    void add_term(const Exponent& e, double c);

    MPoly derivative(int i) const;
    double evaluate(std::span<const double> x) const;
    /// Same polynomial viewed in nvars >= nvars() variables.
    MPoly embedded(int nvars) const;

    MPoly& operator+=(const MPoly& rhs);
    MPoly& operator-=(const MPoly& rhs);
    MPoly& operator*=(double s);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(MPoly a, double s) { return a *= s; }
    friend MPoly operator*(double s, MPoly a) { return a *= s; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend bool operator==(const MPoly&, const MPoly&) = default;

 private:
    void require_same(const MPoly& other) const;

    int nvars_;
    std::map<Exponent, double> terms_;
};

/// max |coefficient| of a - b.
double max_coeff_diff(const MPoly& a, const MPoly& b);

/// X = sum_i X_i d/dx_i on R^d.
class PolyVectorField {
 public:
    explicit PolyVectorField(std::vector<MPoly> components);
    static PolyVectorField zero(int dim);

    int dim() const { return static_cast<int>(components_.size()); }
    const std::vector<MPoly>& components() const { return components_; }
    const MPoly& operator[](int i) const { return components_[static_cast<std::size_t>(i)]; }
    bool is_zero() const;
    int degree() const;

    std::vector<double> evaluate(std::span<const double> x) const;

    PolyVectorField& operator+=(const PolyVectorField& rhs);
    PolyVectorField& operator-=(const PolyVectorField& rhs);
    PolyVectorField& operator*=(double s);
    friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) { return a += b; }
    friend PolyVectorField operator-(PolyVectorField a, const PolyVectorField& b) { return a -= b; }
    friend PolyVectorField operator*(double s, PolyVectorField a) { return a *= s; }
    friend bool operator==(const PolyVectorField&, const PolyVectorField&) = default;

 private:
    std::vector<MPoly> components_;
};

double max_coeff_diff(const PolyVectorField& a, const PolyVectorField& b);

/// [X, Y]_i = sum_j X_j dY_i/dx_j - Y_j dX_i/dx_j.
/// Throws std::invalid_argument on a dimension mismatch.
PolyVectorField lie_bracket(const PolyVectorField& x, const PolyVectorField& y);

/// [X,[Y,Z]] + [Y,[Z,X]] + [Z,[X,Y]].
PolyVectorField jacobi_sum(const PolyVectorField& x, const PolyVectorField& y, const PolyVectorField& z);

class DivergenceError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

struct FlowResult {
    std::vector<double> point;
    double error_estimate = 0.0;  // max-norm change between `steps` and `2 steps`
};

/// RK4 for x' = X(x) over [0, t] with 2*steps steps; the estimate compares
/// against a run with `steps` steps. Throws std::invalid_argument for
/// steps < 16 and DivergenceError when the trajectory leaves |x| <= 1e12.
FlowResult flow(const PolyVectorField& x, std::span<const double> p, double t, int steps = 64);

/// (phi^Y_{-t} phi^X_{-t} phi^Y_t phi^X_t (p) - p) / t^2.
std::vector<double> bracket_via_flows(const PolyVectorField& x, const PolyVectorField& y, std::span<const double> p,
                                      double t, int steps = 64);

struct FlowSweepReport {
    std::vector<double> ts;
    std::vector<double> errors;  // max-norm distance to [X,Y](p)
    double slope = 0.0;          // least squares of log error against log t
    bool exact = false;          // every error below 1e-12
    bool passes = false;         // exact or slope >= 0.9
};

FlowSweepReport flow_commutator_sweep(const PolyVectorField& x, const PolyVectorField& y, std::span<const double> p,
                                      const std::vector<double>& ts = {0.1, 0.05, 0.025}, int steps = 64);

/// Order-1 prolongation on R^d x R^{dxd}: variables x_0..x_{d-1} followed by
/// A_{ab} at index d + a d + b; components X(x) and (JX(x) A)_{ab}.
struct ProlongedField {
    PolyVectorField base;
    PolyVectorField full;
};

ProlongedField prolong1(const PolyVectorField& x);

struct Lemma64Report {
    PolyVectorField lhs;  // [X^1, Y^1]
    PolyVectorField rhs;  // [X, Y]^1
    double max_diff = 0.0;
    bool exact = false;
};

Lemma64Report check_lemma64(const PolyVectorField& x, const PolyVectorField& y);

/// Field on R^dim with every monomial of degree <= max_degree present with
/// probability 1/2 and an integer coefficient in [-max_coeff, max_coeff].
PolyVectorField random_field(Rng& rng, int dim, int max_degree, int max_coeff = 3);

/// All exponent vectors in nvars variables with total degree <= max_degree,
/// graded then lexicographic.
std::vector<Exponent> monomials_up_to(int nvars, int max_degree);

}  // namespace workbench::liefields
