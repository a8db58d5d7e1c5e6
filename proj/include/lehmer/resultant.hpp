#pragma once

// Resultants by the subresultant PRS and a small solver for zero-dimensional
// systems in two variables built on them.

#include <span>
#include <vector>

#include "lehmer/multipoly.hpp"
#include "lehmer/projpoint.hpp"
#include "lehmer/roots.hpp"

namespace lehmer::poly {

// Res_var(p, q) as a polynomial in the remaining variables (same ring, var
// absent). Throws VariableAbsent if either input does not involve var.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, int var);

struct BivariateSolutions {
  // Affine solutions (x, y), each pair in the smallest field holding both
  // coordinates, sorted and free of duplicates.
  std::vector<std::vector<FieldElement>> points;
  // The univariate eliminant in x that produced the candidates.
  UniPoly eliminant;
  // x-values where the leading coefficients in y of both eliminated
  // polynomials vanish; candidates there are solved like any other.
  std::vector<FieldElement> degenerate_x;
  // Degree of the eliminant part whose roots lie beyond the bound.
  int unsplit_degree = 0;
  bool bound_exceeded = false;
};

// Common zeros of polynomials in two variables (x = variable 0, y = 1) over
// extensions of absolute degree <= ext_bound. Throws PositiveDimensional if
// the solution set is not finite.
BivariateSolutions solve_bivariate_system(std::span<const MultiPoly> polys, int ext_bound);

// Common zeros in the projective plane of homogeneous polynomials in x, y, z,
// solved chart by chart (z = 1, y = 1, x = 1) and deduplicated. Points are
// in their minimal field. Throws ExtensionBoundExceeded, PositiveDimensional.
std::vector<ProjPoint> plane_common_zeros(std::span<const MultiPoly> polys, int ext_bound);

}  // namespace lehmer::poly
