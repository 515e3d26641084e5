#pragma once

#include <vector>

#include "vcsys/numbers.hpp"

namespace vcsys {

using RationalRow = std::vector<Rational>;
using RationalMatrix = std::vector<RationalRow>;  // row-major

// Rank by exact Gaussian elimination.
int matrix_rank(RationalMatrix m);

// Whether A w = b has a solution (rank test on the augmented matrix).
bool system_solvable(const RationalMatrix& a, const RationalRow& b);

// One affine constraint  coeffs · w + constant  {>, >=}  0.
struct LinConstraint {
  RationalRow coeffs;
  Rational constant;
  bool strict = false;
};

// Exact feasibility of a mixed strict/non-strict rational system by
// Fourier–Motzkin elimination.  Complete over the rationals.
bool feasible(std::vector<LinConstraint> constraints, int nvars);

}  // namespace vcsys
