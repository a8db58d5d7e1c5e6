#pragma once

// The cuspidal cubic C = {y^2 z = x^3} over a binary field: the group law on
// its smooth locus through t -> [t : 1 : t^3], the alpha -> beta solver for
// the ten blown-up points, and the affine action a birational map induces on
// a cuspidal cubic.

#include <array>
#include <optional>
#include <string>
#include <span>
#include <vector>

#include "lehmer/multipoly.hpp"
#include "lehmer/projpoint.hpp"
#include "lehmer/report.hpp"

namespace lehmer::cubic {

using gf2m::Field;
using gf2m::FieldElement;
using poly::MultiPoly;
using poly::ProjPoint;

// y^2 z + x^3 in the variables x, y, z.
MultiPoly standard_cubic(Field f);

ProjPoint psi(const FieldElement& t);
// Throws NotOnCurve, CuspPoint.
FieldElement psi_inv(const ProjPoint& p);

bool collinear(const FieldElement& t1, const FieldElement& t2, const FieldElement& t3);
FieldElement chord_third(const FieldElement& t1, const FieldElement& t2);
// det[a; b; c] == 0
bool collinear_points(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

struct AffineAction {
  FieldElement alpha;  // nonzero
  FieldElement beta;

  FieldElement operator()(const FieldElement& t) const { return alpha * t + beta; }
  AffineAction inverse() const;
  // (a * b)(t) = a(b(t))
  friend AffineAction operator*(const AffineAction& a, const AffineAction& b);
  friend bool operator==(const AffineAction& a, const AffineAction& b) {
    return a.alpha == b.alpha && a.beta == b.beta;
  }
};

// P10 reduced mod 2, embedded in f.
poly::UniPoly lehmer_mod2(Field f);
bool is_lehmer_root(const FieldElement& alpha);
// Roots of P10 mod 2 lying in f, sorted by bits.
std::vector<FieldElement> lehmer_roots(Field f);

// The two closed forms for the parameter of p_2, each affine in beta.
FieldElement p2_via_p3(const FieldElement& alpha, const FieldElement& beta);
FieldElement p2_via_p4(const FieldElement& alpha, const FieldElement& beta);
// a^-5 + a^-4 + a^-3 + a^-2 + a^-1 + a^2
FieldElement beta_coefficient(const FieldElement& alpha);
// Throws NotLehmerRoot, DegenerateCoefficient.
FieldElement beta_from_alpha(const FieldElement& alpha);

struct PointSet10 {
  std::array<FieldElement, 10> params;  // p_1 .. p_10
  const FieldElement& operator[](int i) const { return params[static_cast<std::size_t>(i - 1)]; }
  std::vector<ProjPoint> points() const;
};

// Throws CollisionDetected.
PointSet10 orbit_points(const FieldElement& alpha, const FieldElement& beta);
report::Report verify_coxeter_constraints(const PointSet10& pts, const AffineAction& action);

// Parametrization of a cuspidal cubic by the lines through its cusp; the
// cusp sits at parameter infinity.
class CuspProjection {
 public:
  // Throws NotCuspidal.
  explicit CuspProjection(const MultiPoly& curve, int ext_bound = 10);

  const MultiPoly& curve() const noexcept { return curve_; }
  const ProjPoint& cusp() const noexcept { return cusp_; }
  // Tangent cone at the cusp, a square of this linear form.
  const std::array<FieldElement, 3>& tangent_line() const noexcept { return tangent_; }
  const MultiPoly& tangent_cone() const noexcept { return cone_; }

  ProjPoint point(const FieldElement& t) const;
  // Throws NotOnCurve, CuspPoint.
  FieldElement param(const ProjPoint& p) const;

 private:
  MultiPoly curve_;
  MultiPoly cone_;
  ProjPoint cusp_;
  std::array<FieldElement, 3> tangent_;
  std::array<FieldElement, 3> d1_, d2_;
};

// Singular points of a plane curve F(x, y, z), over extensions up to
// ext_bound.
std::vector<ProjPoint> plane_singular_points(const MultiPoly& curve, int ext_bound);

struct InducedAction {
  AffineAction action;
  std::vector<FieldElement> fit;        // the two parameters used for the fit
  std::vector<FieldElement> validated;  // further parameters checked
  std::vector<FieldElement> skipped;    // base points of the map on the curve
};

// Throws NotCuspidal, NotPreserved, NotAffine.
InducedAction induced_affine_map(const MultiPoly& curve, std::span<const MultiPoly> map,
                                 std::size_t validation_samples = 20);

// One line per Lehmer root in f: alpha, c(alpha), beta, then the parameters
// of p_1 .. p_10. Format of data/alpha_table.dat.
std::string format_alpha_table(Field f);

// Affine t -> a t + b with a != 0 carrying set A onto set B.
std::optional<AffineAction> match_point_sets(std::span<const FieldElement> a, std::span<const FieldElement> b);

}  // namespace lehmer::cubic
