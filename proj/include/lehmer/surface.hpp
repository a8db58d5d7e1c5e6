#pragma once

// The double plane X0: w^2 = s(x, y, z) in P(1, 1, 1, 6) over GF(32), its
// birational map sigma0 = (f1 : f2 : f3 : c w + eta) and the cuspidal cubic
// B = {g = 0}, with exact checks of every stated identity.

#include <array>
#include <filesystem>
#include <vector>

#include "lehmer/cubic.hpp"
#include "lehmer/multipoly.hpp"
#include "lehmer/projpoint.hpp"
#include "lehmer/report.hpp"

namespace lehmer::surface {

using gf2m::Field;
using gf2m::FieldElement;
using poly::MultiPoly;
using poly::ProjPoint;
using report::Report;

inline constexpr int kDefaultExtBound = 10;

// Polynomials are in x, y, z unless noted.
struct SurfaceModel {
  Field field = nullptr;
  MultiPoly s;                   // degree 12
  std::array<MultiPoly, 3> f;    // quadrics
  MultiPoly c, eta;              // degrees 6 and 12
  std::array<MultiPoly, 3> finv; // plane part of sigma0^-1
  MultiPoly cinv;                // w-coefficient of sigma0^-1
  std::array<ProjPoint, 11> points;  // p0 .. p10
  ProjPoint cusp;
  MultiPoly g;                   // the cubic B

  // sigma0 as a map of x, y, z, w.
  std::vector<MultiPoly> sigma() const;
};

// Reads surface.poly, automorphism.poly and points.dat from dir. Throws
// ParseError, InvariantViolation.
SurfaceModel load_model(const std::filesystem::path& dir);
// Degrees and incidences; throws InvariantViolation naming the first failure.
void check_model(const SurfaceModel& m);

Report verify_orbit(const SurfaceModel& m, int ext_bound = kDefaultExtBound);
Report verify_cubic(const SurfaceModel& m);
Report verify_equivariance(const SurfaceModel& m);

struct SigmaInverse {
  MultiPoly eta_prime;                // degree 12
  std::vector<MultiPoly> components;  // sigma0^-1 on x, y, z, w
  MultiPoly forward_factor;           // sigma0^-1 o sigma0 = forward_factor * id
  MultiPoly backward_factor;          // sigma0 o sigma0^-1
  std::size_t unknowns = 0, equations = 0;
};
// Solves for eta' by exact linear algebra. Throws NoSolution,
// NonUniqueSolution, InvariantViolation when a composition is not a multiple
// of the identity.
SigmaInverse derive_sigma_inverse(const SurfaceModel& m);
Report report_sigma_inverse(const SigmaInverse& inv);

struct DerivationCheck {
  Report report;
  FieldElement lambda1;  // sigma0 D sigma0^-1 = lambda1 D; zero when undetermined
};
DerivationCheck verify_derivation(const SurfaceModel& m, const SigmaInverse& inv);

struct SingularLocus {
  Report report;
  std::vector<ProjPoint> points;
};
// Throws ExtensionBoundExceeded.
SingularLocus singular_locus(const SurfaceModel& m, int ext_bound = kDefaultExtBound);

// Largest multiplicity at p of s + h^2 over local functions h, i.e. of the
// double cover w^2 = s after a change w -> w + h. In characteristic 2 this is
// the lowest degree of a local term with an odd exponent.
int multiplicity_mod_squares(const MultiPoly& s, const ProjPoint& p);

Report verify_multiplicities(const SurfaceModel& m);
Report verify_chart_smoothness(const SurfaceModel& m);

struct AlphaCheck {
  Report report;
  FieldElement alpha;
};
AlphaCheck verify_alpha_consistency(const SurfaceModel& m, const FieldElement& lambda1);

}  // namespace lehmer::surface
