#pragma once

// Small expression language for symbols and test functions of one complex
// variable: numbers, i, z (alias xi), + - * /, integer powers, parentheses,
// |expr| and the functions conj, re, im, abs, exp. Juxtaposition such as
// "3z" or "2(z+1)" multiplies.

#include <functional>
#include <string>
#include <vector>

#include "workbench/numcore.hpp"

namespace workbench::cli {

using ComplexFn = std::function<cplx(cplx)>;

/// Throws std::invalid_argument with the offending position on a syntax error.
ComplexFn parse_expression(const std::string& text);

/// "1.5", "-2i", "0.25-3e-05i", "i". Throws std::invalid_argument.
cplx parse_complex(const std::string& text);

/// Comma-separated complex cells.
std::vector<cplx> parse_complex_list(const std::string& text);

/// Comma-separated integers / reals.
std::vector<int> parse_int_list(const std::string& text);
std::vector<double> parse_real_list(const std::string& text);

}  // namespace workbench::cli
