#pragma once

// Built-in finite groups and the plain-text table format: first line n,
// then n lines of n space-separated indices (row a, column b holds a*b).

#include <istream>
#include <ostream>
#include <string>

#include "workbench/gelfand.hpp"

namespace workbench::gelfand {

FiniteGroup cyclic_group(int n);
/// Symmetries of the regular n-gon, order 2n (n >= 3).
FiniteGroup dihedral_group(int n);
/// S3 generated by (0 1) and (0 1 2); element 3 is the transposition (1 2).
FiniteGroup symmetric_group_3();
FiniteGroup symmetric_group_4();
/// Quaternion group, elements ordered breadth-first from i, j acting by
/// left multiplication on {+-1, +-i, +-j, +-k}.
FiniteGroup quaternion_group();

/// Names: z<n> or c<n> (cyclic), d<n> (dihedral), s3, s4, q8.
/// Throws std::invalid_argument for an unknown name.
FiniteGroup builtin_group(const std::string& name);

/// Throws std::invalid_argument on malformed input or a table that is not a group.
FiniteGroup read_group_table(std::istream& in);
void write_group_table(std::ostream& out, const FiniteGroup& g);

}  // namespace workbench::gelfand
