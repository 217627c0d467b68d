#pragma once

#include "lgwb/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lgwb {

// Dense integer matrix, row-major, used for exponent-lattice maps.
using IntMatrix = std::vector<std::vector<std::int64_t>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& a);
std::int64_t determinant(const IntMatrix& a);

// Inverse over Z; nullopt unless |det| == 1.
std::optional<IntMatrix> unimodular_inverse(const IntMatrix& a);

std::string to_string(const IntMatrix& a);

// Exact Gaussian elimination helpers.
std::size_t rank(RationalMatrix a);

// Unique solution of the square system a x = b, or nullopt when a is singular.
std::optional<std::vector<Rational>> solve_square(RationalMatrix a, std::vector<Rational> b);

// Some solution of a possibly overdetermined system, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_any(RationalMatrix a, std::vector<Rational> b);

} // namespace lgwb
