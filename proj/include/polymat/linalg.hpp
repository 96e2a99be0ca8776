#pragma once

#include <vector>

#include "polymat/rational.hpp"

namespace polymat::linalg {

using RatMat = std::vector<std::vector<Rat>>;
using IntMat = std::vector<std::vector<Int>>;

// Rank by exact Gaussian elimination (the matrix is consumed).
int rank(RatMat a);

// Fraction-free elimination for integer matrices; used in the ray hot paths.
int rank(IntMat a);

// Inverse of a square matrix; throws std::invalid_argument if singular.
RatMat inverse(RatMat a);

// Solves a x = b for square nonsingular a; throws if singular.
std::vector<Rat> solve(RatMat a, std::vector<Rat> b);

}  // namespace polymat::linalg
