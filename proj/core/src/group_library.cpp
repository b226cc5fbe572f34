#include "workbench/group_library.hpp"

#include <array>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace workbench::gelfand {

namespace {

// Quaternion units as (sign, axis) with axis 0..3 = 1, i, j, k.
struct Unit {
    int sign;
    int axis;
};

Unit quaternion_product(Unit a, Unit b) {
    // table[a][b] = axis and sign of e_a e_b
    static constexpr std::array<std::array<int, 4>, 4> axis{{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
    static constexpr std::array<std::array<int, 4>, 4> sign{{{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}}};
    return {a.sign * b.sign * sign[static_cast<std::size_t>(a.axis)][static_cast<std::size_t>(b.axis)],
            axis[static_cast<std::size_t>(a.axis)][static_cast<std::size_t>(b.axis)]};
}

int unit_index(Unit u) { return 2 * u.axis + (u.sign < 0 ? 1 : 0); }

std::vector<int> left_multiplication(Unit q) {
    std::vector<int> perm(8);
    for (int axis = 0; axis < 4; ++axis)
        for (int s : {1, -1}) {
            const Unit x{s, axis};
            perm[static_cast<std::size_t>(unit_index(x))] = unit_index(quaternion_product(q, x));
        }
    return perm;
}

int parse_order(const std::string& digits, const std::string& name) {
    if (digits.empty()) throw std::invalid_argument("unknown group: " + name);
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("unknown group: " + name);
    const int n = std::stoi(digits);
    if (n < 1 || n > 512) throw std::invalid_argument("group order out of range: " + name);
    return n;
}

}  // namespace

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
    return FiniteGroup(std::move(table));
}

FiniteGroup dihedral_group(int n) {
    if (n < 3) throw std::invalid_argument("dihedral group needs n >= 3");
    std::vector<int> rot(static_cast<std::size_t>(n));
    std::vector<int> ref(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        rot[static_cast<std::size_t>(x)] = (x + 1) % n;
        ref[static_cast<std::size_t>(x)] = (n - x) % n;
    }
    return FiniteGroup::from_permutations({rot, ref});
}

FiniteGroup symmetric_group_3() { return FiniteGroup::from_permutations({{1, 0, 2}, {1, 2, 0}}); }

FiniteGroup symmetric_group_4() { return FiniteGroup::from_permutations({{1, 0, 2, 3}, {1, 2, 3, 0}}); }

FiniteGroup quaternion_group() {
    return FiniteGroup::from_permutations({left_multiplication({1, 1}), left_multiplication({1, 2})});
}

FiniteGroup builtin_group(const std::string& name) {
    std::string lower;
    for (char c : name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lower == "s3") return symmetric_group_3();
    if (lower == "s4") return symmetric_group_4();
    if (lower == "q8") return quaternion_group();
    if (!lower.empty() && (lower[0] == 'z' || lower[0] == 'c')) return cyclic_group(parse_order(lower.substr(1), name));
    if (!lower.empty() && lower[0] == 'd') return dihedral_group(parse_order(lower.substr(1), name));
    throw std::invalid_argument("unknown group: " + name);
}

FiniteGroup read_group_table(std::istream& in) {
    long n = 0;
    if (!(in >> n) || n < 1 || n > 4096) throw std::invalid_argument("group table: bad order line");
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (auto& row : table)
        for (int& v : row)
            if (!(in >> v)) throw std::invalid_argument("group table: expected " + std::to_string(n * n) + " entries");
    std::string extra;
    if (in >> extra) throw std::invalid_argument("group table: trailing data");
    return FiniteGroup(std::move(table));
}

void write_group_table(std::ostream& out, const FiniteGroup& g) {
    out << g.order() << '\n';
    for (const auto& row : g.table()) {
        for (std::size_t b = 0; b < row.size(); ++b) out << (b ? " " : "") << row[b];
        out << '\n';
    }
}

}  // namespace workbench::gelfand
