#include "workbench/gelfand.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <string>

#include <Eigen/Eigenvalues>

#include "workbench/random.hpp"

namespace workbench::gelfand {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

void require_length(const GroupFunction& f, const FiniteGroup& g) {
    if (static_cast<int>(f.size()) != g.order()) throw std::invalid_argument("group function length must equal |G|");
}

// c[g] = #{h in D_i : h^-1 g in D_j}
std::vector<long> coset_counts(const FiniteGroup& g, const DoubleCosetBasis& b, int i, int j) {
    std::vector<long> c(idx(g.order()), 0);
    for (int h : b.cosets[idx(i)]) {
        const int hi = g.inv(h);
        for (int x = 0; x < g.order(); ++x)
            if (b.coset_of[idx(g.mul(hi, x))] == j) ++c[idx(x)];
    }
    return c;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table) : mul_(std::move(table)) {
    const int n = order();
    if (n == 0) throw std::invalid_argument("group table is empty");
    for (const auto& row : mul_) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("group table must be square");
        for (int v : row)
            if (v < 0 || v >= n) throw std::invalid_argument("group table entry out of range");
    }
    id_ = -1;
    for (int e = 0; e < n && id_ < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
        if (ok) id_ = e;
    }
    if (id_ < 0) throw std::invalid_argument("group table has no identity");
    inv_.assign(idx(n), -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (mul(a, b) == id_ && mul(b, a) == id_) {
                inv_[idx(a)] = b;
                break;
            }
        }
        if (inv_[idx(a)] < 0) throw std::invalid_argument("element " + std::to_string(a) + " has no inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw std::invalid_argument("group table is not associative");
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<int>>& generators) {
    if (generators.empty()) throw std::invalid_argument("need at least one generator");
    const std::size_t deg = generators.front().size();
    for (const auto& p : generators) {
        if (p.size() != deg) throw std::invalid_argument("generators must act on the same set");
        std::vector<int> sorted = p;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < deg; ++i)
            if (sorted[i] != static_cast<int>(i)) throw std::invalid_argument("generator is not a permutation");
    }
    auto compose = [deg](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> r(deg);
        for (std::size_t x = 0; x < deg; ++x) r[x] = a[idx(b[x])];
        return r;
    };

    std::vector<int> identity(deg);
    for (std::size_t i = 0; i < deg; ++i) identity[i] = static_cast<int>(i);
    std::vector<std::vector<int>> elems{identity};
    std::map<std::vector<int>, int> index{{identity, 0}};
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (const auto& gen : generators) {
            auto y = compose(elems[idx(x)], gen);
            if (index.emplace(y, static_cast<int>(elems.size())).second) {
                queue.push_back(static_cast<int>(elems.size()));
                elems.push_back(std::move(y));
            }
        }
    }
    const std::size_t n = elems.size();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
    return FiniteGroup(std::move(table));
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order(); ++a)
        for (int b = a + 1; b < order(); ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

SubgroupK::SubgroupK(const FiniteGroup& g, std::vector<int> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw std::invalid_argument("subgroup members must be distinct");
    mask_.assign(idx(g.order()), false);
    for (int m : members_) {
        if (m < 0 || m >= g.order()) throw std::invalid_argument("subgroup member out of range");
        mask_[idx(m)] = true;
    }
    if (!contains(g.identity())) throw std::invalid_argument("subgroup must contain the identity");
    for (int a : members_) {
        if (!contains(g.inv(a))) throw std::invalid_argument("subgroup is not closed under inverses");
        for (int b : members_)
            if (!contains(g.mul(a, b))) throw std::invalid_argument("subgroup is not closed under multiplication");
    }
}

SubgroupK SubgroupK::whole(const FiniteGroup& g) {
    std::vector<int> all(idx(g.order()));
    for (int i = 0; i < g.order(); ++i) all[idx(i)] = i;
    return SubgroupK(g, std::move(all));
}

bool SubgroupK::contains(int x) const { return x >= 0 && idx(x) < mask_.size() && mask_[idx(x)]; }

DoubleCosetBasis double_cosets(const FiniteGroup& g, const SubgroupK& k) {
    DoubleCosetBasis b;
    b.coset_of.assign(idx(g.order()), -1);
    auto add_coset = [&](int x) {
        const int id = b.size();
        std::vector<int> members;
        for (int k1 : k.members())
            for (int k2 : k.members()) {
                const int y = g.mul(g.mul(k1, x), k2);
                if (b.coset_of[idx(y)] < 0) {
                    b.coset_of[idx(y)] = id;
                    members.push_back(y);
                }
            }
        std::sort(members.begin(), members.end());
        b.cosets.push_back(std::move(members));
    };
    add_coset(g.identity());
    for (int x = 0; x < g.order(); ++x)
        if (b.coset_of[idx(x)] < 0) add_coset(x);
    b.inverse.resize(b.cosets.size());
    for (int i = 0; i < b.size(); ++i) b.inverse[idx(i)] = b.coset_of[idx(g.inv(b.cosets[idx(i)].front()))];
    return b;
}

GroupFunction basis_function(const DoubleCosetBasis& basis, int i, const FiniteGroup& g) {
    GroupFunction e(idx(g.order()), cplx{0.0});
    const double height = static_cast<double>(g.order()) / static_cast<double>(basis.cosets[idx(i)].size());
    for (int x : basis.cosets[idx(i)]) e[idx(x)] = height;
    return e;
}

GroupFunction biinvariant_project(const GroupFunction& f, const FiniteGroup& g, const SubgroupK& k) {
    require_length(f, g);
    const DoubleCosetBasis b = double_cosets(g, k);
    GroupFunction out(f.size());
    for (const auto& coset : b.cosets) {
        // Shifted mean: exact when all values already agree.
        const cplx v0 = f[idx(coset.front())];
        cplx shift{0.0};
        for (int x : coset) shift += f[idx(x)] - v0;
        const cplx mean = v0 + shift / static_cast<double>(coset.size());
        for (int x : coset) out[idx(x)] = mean;
    }
    return out;
}

bool is_biinvariant(const GroupFunction& f, const FiniteGroup& g, const SubgroupK& k, double tol) {
    require_length(f, g);
    for (int x = 0; x < g.order(); ++x)
        for (int k1 : k.members())
            for (int k2 : k.members())
                if (std::abs(f[idx(g.mul(g.mul(k1, x), k2))] - f[idx(x)]) > tol) return false;
    return true;
}

GroupFunction convolve(const GroupFunction& f1, const GroupFunction& f2, const FiniteGroup& g) {
    require_length(f1, g);
    require_length(f2, g);
    GroupFunction out(f1.size(), cplx{0.0});
    for (int x = 0; x < g.order(); ++x) {
        cplx acc{0.0};
        for (int h = 0; h < g.order(); ++h) acc += f1[idx(h)] * f2[idx(g.mul(g.inv(h), x))];
        out[idx(x)] = acc / static_cast<double>(g.order());
    }
    return out;
}

std::vector<std::vector<std::vector<double>>> structure_constants(const FiniteGroup& g, const DoubleCosetBasis& basis) {
    const int m = basis.size();
    std::vector<std::vector<std::vector<double>>> a(idx(m), std::vector<std::vector<double>>(idx(m), std::vector<double>(idx(m))));
    for (int i = 0; i < m; ++i) {
        const double di = static_cast<double>(basis.cosets[idx(i)].size());
        for (int j = 0; j < m; ++j) {
            const double dj = static_cast<double>(basis.cosets[idx(j)].size());
            const auto c = coset_counts(g, basis, i, j);
            for (int k = 0; k < m; ++k) {
                const auto& dk = basis.cosets[idx(k)];
                a[idx(i)][idx(j)][idx(k)] = static_cast<double>(c[idx(dk.front())]) * static_cast<double>(dk.size()) / (di * dj);
            }
        }
    }
    return a;
}

double closure_residual(const FiniteGroup& g, const SubgroupK& k) {
    const DoubleCosetBasis b = double_cosets(g, k);
    const auto a = structure_constants(g, b);
    std::vector<GroupFunction> e;
    for (int i = 0; i < b.size(); ++i) e.push_back(basis_function(b, i, g));
    double worst = 0.0;
    for (int i = 0; i < b.size(); ++i)
        for (int j = 0; j < b.size(); ++j) {
            const GroupFunction prod = convolve(e[idx(i)], e[idx(j)], g);
            for (int x = 0; x < g.order(); ++x) {
                cplx expansion{0.0};
                for (int m = 0; m < b.size(); ++m) expansion += a[idx(i)][idx(j)][idx(m)] * e[idx(m)][idx(x)];
                worst = std::max(worst, std::abs(prod[idx(x)] - expansion));
            }
        }
    return worst;
}

GelfandReport is_gelfand_pair(const FiniteGroup& g, const SubgroupK& k) {
    const DoubleCosetBasis b = double_cosets(g, k);
    GelfandReport rep;
    rep.n_cosets = b.size();
    for (int i = 0; i < b.size(); ++i) {
        for (int j = i + 1; j < b.size(); ++j) {
            const auto cij = coset_counts(g, b, i, j);
            const auto cji = coset_counts(g, b, j, i);
            const double scale = static_cast<double>(g.order()) /
                                 (static_cast<double>(b.cosets[idx(i)].size()) * static_cast<double>(b.cosets[idx(j)].size()));
            for (int x = 0; x < g.order(); ++x) {
                const double diff = scale * static_cast<double>(std::labs(cij[idx(x)] - cji[idx(x)]));
                if (diff > rep.max_commutator) {
                    rep.max_commutator = diff;
                    rep.witness_i = i;
                    rep.witness_j = j;
                }
            }
        }
    }
    rep.gelfand = rep.max_commutator == 0.0;
    return rep;
}

cplx integrate_against(const GroupFunction& f, const GroupFunction& phi, const FiniteGroup& g) {
    require_length(f, g);
    require_length(phi, g);
    cplx acc{0.0};
    for (int x = 0; x < g.order(); ++x) acc += f[idx(x)] * phi[idx(g.inv(x))];
    return acc / static_cast<double>(g.order());
}

double multiplicativity_defect(const GroupFunction& phi, const FiniteGroup& g, const SubgroupK& k) {
    const DoubleCosetBasis b = double_cosets(g, k);
    std::vector<GroupFunction> e;
    std::vector<cplx> mu;
    for (int i = 0; i < b.size(); ++i) {
        e.push_back(basis_function(b, i, g));
        mu.push_back(integrate_against(e.back(), phi, g));
    }
    double worst = 0.0;
    for (int i = 0; i < b.size(); ++i)
        for (int j = 0; j < b.size(); ++j)
            worst = std::max(worst, std::abs(integrate_against(convolve(e[idx(i)], e[idx(j)], g), phi, g) - mu[idx(i)] * mu[idx(j)]));
    return worst;
}

std::vector<GroupFunction> spherical_functions(const FiniteGroup& g, const SubgroupK& k, std::uint64_t seed) {
    const GelfandReport rep = is_gelfand_pair(g, k);
    if (!rep.gelfand)
        throw std::invalid_argument("not a Gelfand pair: e_" + std::to_string(rep.witness_i) + " and e_" +
                                    std::to_string(rep.witness_j) + " do not commute");
    const DoubleCosetBasis b = double_cosets(g, k);
    const int m = b.size();
    const auto a = structure_constants(g, b);

    // Characters chi satisfy sum_k a_ij^k chi_k = chi_i chi_j, so chi is a
    // common eigenvector of L_i^T with (L_i)_{kj} = a_ij^k.
    Rng rng(seed);
    Eigen::MatrixXcd combo = Eigen::MatrixXcd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
        const cplx c = rng.complex();
        for (int j = 0; j < m; ++j)
            for (int kk = 0; kk < m; ++kk) combo(j, kk) += c * a[idx(i)][idx(j)][idx(kk)];
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(combo);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed on the double-coset algebra");

    std::vector<std::vector<cplx>> characters;
    for (int col = 0; col < m; ++col) {
        Eigen::VectorXcd v = solver.eigenvectors().col(col);
        if (std::abs(v(0)) < 1e-12) throw std::runtime_error("character with vanishing unit coefficient");
        v /= v(0);
        for (int i = 0; i < m; ++i) {
            const double re = std::abs(v(i).real()) < 1e-13 ? 0.0 : v(i).real();
            const double im = std::abs(v(i).imag()) < 1e-13 ? 0.0 : v(i).imag();
            v(i) = cplx{re, im};
        }
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                cplx lhs{0.0};
                for (int kk = 0; kk < m; ++kk) lhs += a[idx(i)][idx(j)][idx(kk)] * v(kk);
                if (std::abs(lhs - v(i) * v(j)) > 1e-10)
                    throw std::runtime_error("eigenvector is not a character of the double-coset algebra");
            }
        characters.emplace_back(v.data(), v.data() + m);
    }

    auto key = [](const std::vector<cplx>& chi) {
        std::vector<double> k;
        for (const cplx& c : chi) {
            k.push_back(-std::round(c.real() * 1e9));
            k.push_back(-std::round(c.imag() * 1e9));
        }
        return k;
    };
    // Descending order puts the all-ones character first.
    std::sort(characters.begin(), characters.end(), [&](const auto& x, const auto& y) { return key(x) < key(y); });

    std::vector<GroupFunction> out;
    for (const auto& chi : characters) {
        GroupFunction phi(idx(g.order()));
        for (int x = 0; x < g.order(); ++x) phi[idx(x)] = chi[idx(b.inverse[idx(b.coset_of[idx(x)])])];
        out.push_back(std::move(phi));
    }
    return out;
}

void require_submultiplicative(const std::vector<double>& phi, const FiniteGroup& g) {
    if (static_cast<int>(phi.size()) != g.order()) throw std::invalid_argument("weight length must equal |G|");
    for (int x = 0; x < g.order(); ++x)
        if (!(phi[idx(x)] > 0.0)) throw PreconditionError("weight must be positive", x, x);
    for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y) {
            const double bound = phi[idx(x)] * phi[idx(y)];
            if (phi[idx(g.mul(x, y))] > bound * (1.0 + 1e-12))
                throw PreconditionError("weight is not submultiplicative at (" + std::to_string(x) + ", " +
                                            std::to_string(y) + ")",
                                        x, y);
        }
}

double phi_seminorm(const GroupFunction& f, const std::vector<double>& phi, const FiniteGroup& g) {
    require_length(f, g);
    require_submultiplicative(phi, g);
    double acc = 0.0;
    for (int x = 0; x < g.order(); ++x) acc += std::abs(f[idx(x)]) * phi[idx(x)];
    return acc / g.order();
}

}  // namespace workbench::gelfand
