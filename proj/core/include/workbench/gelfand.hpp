#pragma once

// Gelfand pairs on finite groups. Haar measure is the normalized counting
// measure, so the convolution
//     (f1 * f2)(g) = (1/|G|) sum_h f1(h) f2(h^-1 g)
// has unit |G| delta_e, and measures on G are identified with functions.

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "workbench/numcore.hpp"

namespace workbench::gelfand {

using GroupFunction = std::vector<cplx>;

/// Raised when an input violates a checked precondition; carries the pair
/// of group elements that exhibits the violation.
class PreconditionError : public std::invalid_argument {
 public:
    PreconditionError(const std::string& what, int g1, int g2) : std::invalid_argument(what), g1_(g1), g2_(g2) {}
    int g1() const { return g1_; }
    int g2() const { return g2_; }

 private:
    int g1_;
    int g2_;
};

/// Multiplication-table group. Construction verifies closure, identity,
/// inverses and associativity (O(n^3)); std::invalid_argument otherwise.
class FiniteGroup {
 public:
    explicit FiniteGroup(std::vector<std::vector<int>> table);

    /// Closure of the generators under composition, (a b)(x) = a(b(x)).
    /// Elements are numbered in breadth-first order from the identity
    /// (index 0), right-multiplying by each generator in turn.
    static FiniteGroup from_permutations(const std::vector<std::vector<int>>& generators);

    int order() const { return static_cast<int>(mul_.size()); }
    int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
    int identity() const { return id_; }
    const std::vector<std::vector<int>>& table() const { return mul_; }
    bool is_abelian() const;

 private:
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
    int id_ = 0;
};

/// Subgroup given by member indices (sorted on construction). Throws
/// std::invalid_argument unless the set contains the identity and is closed
/// under multiplication and inversion.
class SubgroupK {
 public:
    SubgroupK(const FiniteGroup& g, std::vector<int> members);
    static SubgroupK trivial(const FiniteGroup& g) { return SubgroupK(g, {g.identity()}); }
    static SubgroupK whole(const FiniteGroup& g);

    const std::vector<int>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool contains(int x) const;

 private:
    std::vector<int> members_;
    std::vector<bool> mask_;
};

/// Partition of G into double cosets K g K. Coset 0 is K itself; the rest
/// are ordered by smallest element.
struct DoubleCosetBasis {
    std::vector<std::vector<int>> cosets;
    std::vector<int> coset_of;  // element -> coset index
    std::vector<int> inverse;   // coset index of D_i^{-1}

    int size() const { return static_cast<int>(cosets.size()); }
};

DoubleCosetBasis double_cosets(const FiniteGroup& g, const SubgroupK& k);

/// e_i = (|G| / |D_i|) 1_{D_i}, so that e_0 is the unit of the algebra.
GroupFunction basis_function(const DoubleCosetBasis& basis, int i, const FiniteGroup& g);

/// f^#(g) = (1/|K|^2) sum_{k1,k2} f(k1 g k2), computed as the mean over the
/// double coset of g (each element of KgK is hit |K|^2/|KgK| times), which
/// makes the projection exactly idempotent.
GroupFunction biinvariant_project(const GroupFunction& f, const FiniteGroup& g, const SubgroupK& k);

bool is_biinvariant(const GroupFunction& f, const FiniteGroup& g, const SubgroupK& k, double tol = 0.0);

/// Throws std::invalid_argument when the lengths differ from |G|.
GroupFunction convolve(const GroupFunction& f1, const GroupFunction& f2, const FiniteGroup& g);

/// Structure constants a[i][j][k] with e_i * e_j = sum_k a_ij^k e_k.
std::vector<std::vector<std::vector<double>>> structure_constants(const FiniteGroup& g, const DoubleCosetBasis& basis);

/// Max over i, j of the residual of e_i * e_j against its expansion in the basis.
double closure_residual(const FiniteGroup& g, const SubgroupK& k);

struct GelfandReport {
    bool gelfand = false;
    int n_cosets = 0;
    int witness_i = -1;  // basis indices with e_i * e_j != e_j * e_i
    int witness_j = -1;
    double max_commutator = 0.0;
};

/// Commutativity of the double-coset algebra, decided on the integer
/// counts #{h in D_i : h^-1 g in D_j}.
GelfandReport is_gelfand_pair(const FiniteGroup& g, const SubgroupK& k);

/// mu_phi(f) = (1/|G|) sum_g f(g) phi(g^-1).
cplx integrate_against(const GroupFunction& f, const GroupFunction& phi, const FiniteGroup& g);

/// max over basis pairs of |mu(e_i * e_j) - mu(e_i) mu(e_j)|.
double multiplicativity_defect(const GroupFunction& phi, const FiniteGroup& g, const SubgroupK& k);

/// All spherical functions, trivial one first. Characters of the
/// double-coset algebra are read off as eigenvectors of a seeded random
/// combination of the multiplication operators and checked against the
/// structure constants. Throws std::invalid_argument for a non-Gelfand
/// pair and std::runtime_error if the eigenvectors fail the check.
std::vector<GroupFunction> spherical_functions(const FiniteGroup& g, const SubgroupK& k, std::uint64_t seed = 0);

/// Throws PreconditionError unless phi > 0 and phi(g1 g2) <= phi(g1) phi(g2)
/// (relative slack 1e-12) for all pairs.
void require_submultiplicative(const std::vector<double>& phi, const FiniteGroup& g);

/// (1/|G|) sum_g |f(g)| phi(g), after require_submultiplicative.
double phi_seminorm(const GroupFunction& f, const std::vector<double>& phi, const FiniteGroup& g);

}  // namespace workbench::gelfand
