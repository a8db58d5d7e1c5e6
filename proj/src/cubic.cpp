#include "lehmer/cubic.hpp"

#include <algorithm>

#include "lehmer/intpoly.hpp"
#include "lehmer/linsolve.hpp"
#include "lehmer/polytext.hpp"
#include "lehmer/resultant.hpp"
#include "lehmer/roots.hpp"

namespace lehmer::cubic {

using report::Json;
using report::Report;

namespace {

FieldElement one(Field f) { return FieldElement::one(f); }

bool bits_less(const FieldElement& a, const FieldElement& b) { return a.bits() < b.bits(); }

// sum_{i=0}^{n} a^i
FieldElement geometric(const FieldElement& a, int n) {
  FieldElement s = FieldElement::zero(a.field()), p = one(a.field());
  for (int i = 0; i <= n; ++i) {
    s += p;
    p *= a;
  }
  return s;
}

FieldElement det3(const std::array<FieldElement, 3>& a, const std::array<FieldElement, 3>& b,
                  const std::array<FieldElement, 3>& c) {
  return a[0] * (b[1] * c[2] + b[2] * c[1]) + a[1] * (b[0] * c[2] + b[2] * c[0]) + a[2] * (b[0] * c[1] + b[1] * c[0]);
}

std::array<FieldElement, 3> coords3(const ProjPoint& p, Field f) {
  ProjPoint q = p.field() == f ? p : p.embed(f);
  return {q[0], q[1], q[2]};
}

}  // namespace

MultiPoly standard_cubic(Field f) {
  return poly::parse_poly("y^2*z + x^3", f, std::vector<std::string>{"x", "y", "z"});
}

ProjPoint psi(const FieldElement& t) { return ProjPoint({t, one(t.field()), t * t * t}); }

FieldElement psi_inv(const ProjPoint& p) {
  if (p.size() != 3) throw Error(ErrorKind::NotOnCurve, "plane point expected");
  const auto &x = p[0], &y = p[1], &z = p[2];
  if (!(y * y * z + x * x * x).is_zero()) throw Error(ErrorKind::NotOnCurve, poly::format(p) + " is not on y^2 z = x^3");
  if (y.is_zero()) throw Error(ErrorKind::CuspPoint, "the cusp has no parameter");
  return x / y;
}

bool collinear(const FieldElement& t1, const FieldElement& t2, const FieldElement& t3) {
  return (t1 + t2 + t3).is_zero();
}

FieldElement chord_third(const FieldElement& t1, const FieldElement& t2) { return t1 + t2; }

bool collinear_points(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  Field f = poly::common_field(poly::common_field(a.field(), b.field()), c.field());
  return det3(coords3(a, f), coords3(b, f), coords3(c, f)).is_zero();
}

AffineAction AffineAction::inverse() const {
  FieldElement ai = alpha.inv();
  return {ai, ai * beta};
}

AffineAction operator*(const AffineAction& a, const AffineAction& b) {
  return {a.alpha * b.alpha, a.alpha * b.beta + a.beta};
}

poly::UniPoly lehmer_mod2(Field f) { return lattice::reduce_mod2(lattice::lehmer_polynomial()).embed(f); }

bool is_lehmer_root(const FieldElement& alpha) {
  return lattice::reduce_mod2(lattice::lehmer_polynomial()).eval_in(alpha).is_zero();
}

std::vector<FieldElement> lehmer_roots(Field f) {
  poly::RootSet rs = poly::uni_roots(lehmer_mod2(f), f->degree());
  std::vector<FieldElement> out;
  for (const auto& r : rs.roots) out.push_back(r.value);
  std::sort(out.begin(), out.end(), bits_less);
  return out;
}

// a + a^2 + a^-6 + a^-7 + (a + 1 + a^-7) b
FieldElement p2_via_p3(const FieldElement& a, const FieldElement& b) {
  return a + a.pow(2) + a.pow(-6) + a.pow(-7) + (a + one(a.field()) + a.pow(-7)) * b;
}

// a^2 + a^3 + a^-5 + a^-6 + a^-7 + (a^-7 + sum_{i=0}^{7} a^(i-5)) b
FieldElement p2_via_p4(const FieldElement& a, const FieldElement& b) {
  return a.pow(2) + a.pow(3) + a.pow(-5) + a.pow(-6) + a.pow(-7) + (a.pow(-7) + a.pow(-5) * geometric(a, 7)) * b;
}

FieldElement beta_coefficient(const FieldElement& a) {
  return a.pow(-5) + a.pow(-4) + a.pow(-3) + a.pow(-2) + a.pow(-1) + a.pow(2);
}

FieldElement beta_from_alpha(const FieldElement& alpha) {
  if (alpha.is_zero() || !is_lehmer_root(alpha))
    throw Error(ErrorKind::NotLehmerRoot, gf2m::format(alpha) + " is not a root of P10 mod 2");
  FieldElement c = beta_coefficient(alpha);
  if (c.is_zero()) throw Error(ErrorKind::DegenerateCoefficient, "beta coefficient vanishes");
  FieldElement zero = FieldElement::zero(alpha.field());
  return (p2_via_p3(alpha, zero) + p2_via_p4(alpha, zero)) / c;
}

std::vector<ProjPoint> PointSet10::points() const {
  std::vector<ProjPoint> out;
  for (const auto& t : params) out.push_back(psi(t));
  return out;
}

PointSet10 orbit_points(const FieldElement& alpha, const FieldElement& beta) {
  AffineAction tau{alpha, beta};
  PointSet10 out;
  auto& p = out.params;
  p[0] = one(alpha.field());
  for (int n = 4; n <= 10; ++n) p[n - 1] = alpha.pow(n - 11) * (one(alpha.field()) + geometric(alpha, 10 - n) * beta);
  p[2] = chord_third(tau(p[0]), p[3]);
  p[1] = chord_third(tau(p[2]), p[2]);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] == p[j])
        throw Error(ErrorKind::CollisionDetected,
                    "p_" + std::to_string(i + 1) + " = p_" + std::to_string(j + 1) + " = " + gf2m::format(p[i]));
  return out;
}

Report verify_coxeter_constraints(const PointSet10& pts, const AffineAction& tau) {
  Report r = Report::node("coxeter-constraints");
  auto line = [&](const std::string& name, const FieldElement& a, const FieldElement& b, const FieldElement& c) {
    bool ok = collinear(a, b, c) && collinear_points(psi(a), psi(b), psi(c));
    r.add(Report::leaf(name, ok, report::witness(std::vector<FieldElement>{a, b, c})));
  };
  line("tau(p1) p3 p4 collinear", tau(pts[1]), pts[3], pts[4]);
  line("tau(p2) p2 p4 collinear", tau(pts[2]), pts[2], pts[4]);
  line("tau(p3) p2 p3 collinear", tau(pts[3]), pts[2], pts[3]);
  bool orbit = true;
  Json failures = Json::array();
  for (int n = 4; n <= 10; ++n) {
    const FieldElement& next = pts[n == 10 ? 1 : n + 1];
    if (!(tau(pts[n]) == next)) {
      orbit = false;
      failures.push_back(n);
    }
  }
  r.add(Report::leaf("tau(p_n) = p_(n+1), n = 4..10", orbit, failures.empty() ? Json(nullptr) : failures));
  return r;
}

std::vector<ProjPoint> plane_singular_points(const MultiPoly& curve, int ext_bound) {
  std::vector<MultiPoly> eqs{curve, poly::partial(curve, 0), poly::partial(curve, 1), poly::partial(curve, 2)};
  return poly::plane_common_zeros(eqs, ext_bound);
}

CuspProjection::CuspProjection(const MultiPoly& curve, int ext_bound) : curve_(curve) {
  Field f = curve.field();
  if (curve.nvars() != 3 || curve.weighted_homogeneous_degree(std::vector<int>{1, 1, 1}) != 3)
    throw Error(ErrorKind::NotCuspidal, "not a plane cubic");
  std::vector<ProjPoint> sing;
  try {
    sing = plane_singular_points(curve, ext_bound);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::PositiveDimensional) throw Error(ErrorKind::NotCuspidal, "singular locus is not finite");
    throw;
  }
  if (sing.size() != 1) throw Error(ErrorKind::NotCuspidal, std::to_string(sing.size()) + " singular points");
  if (sing[0].field() != f) throw Error(ErrorKind::NotCuspidal, "cusp is not rational");
  cusp_ = sing[0];

  cone_ = poly::translate(curve, cusp_.coords()).homogeneous_part(2);
  if (cone_.is_zero()) throw Error(ErrorKind::NotCuspidal, "triple point");
  for (int i = 0; i < 3; ++i) tangent_[static_cast<std::size_t>(i)] = FieldElement::zero(f);
  for (const auto& t : cone_.terms()) {
    int var = -1;
    for (int i = 0; i < 3; ++i)
      if (poly::mono_exp(t.mono, i) == 2) var = i;
    if (var < 0) throw Error(ErrorKind::NotCuspidal, "tangent cone is not a double line");
    tangent_[static_cast<std::size_t>(var)] = FieldElement(f, t.coeff).sqrt();
  }

  // d1 off the tangent line, d2 on it and distinct from the cusp.
  int off = 0;
  while (tangent_[static_cast<std::size_t>(off)].is_zero()) ++off;
  for (int i = 0; i < 3; ++i) d1_[static_cast<std::size_t>(i)] = FieldElement(f, i == off ? 1 : 0);
  std::vector<std::array<FieldElement, 3>> on_line;
  for (int i = 0; i < 3; ++i) {
    if (i == off) continue;
    std::array<FieldElement, 3> v{FieldElement::zero(f), FieldElement::zero(f), FieldElement::zero(f)};
    v[static_cast<std::size_t>(i)] = one(f);
    v[static_cast<std::size_t>(off)] = tangent_[static_cast<std::size_t>(i)] / tangent_[static_cast<std::size_t>(off)];
    on_line.push_back(v);
  }
  ProjPoint first(std::vector<FieldElement>(on_line[0].begin(), on_line[0].end()));
  d2_ = first == cusp_ ? on_line[1] : on_line[0];
  if (curve.evaluate(d2_).is_zero()) throw Error(ErrorKind::NotCuspidal, "tangent line is a component");
}

ProjPoint CuspProjection::point(const FieldElement& t) const {
  Field f = t.field();
  std::array<FieldElement, 3> d;
  for (std::size_t i = 0; i < 3; ++i) d[i] = gf2m::embed(d1_[i], f) + t * gf2m::embed(d2_[i], f);
  FieldElement lam = curve_.evaluate(d), mu = cone_.evaluate(d);
  std::vector<FieldElement> c;
  for (std::size_t i = 0; i < 3; ++i) c.push_back(lam * gf2m::embed(cusp_[i], f) + mu * d[i]);
  return ProjPoint(std::move(c));
}

FieldElement CuspProjection::param(const ProjPoint& p) const {
  Field f = poly::common_field(p.field(), curve_.field());
  ProjPoint q = p.field() == f ? p : p.embed(f);
  if (!curve_.evaluate(q.coords()).is_zero()) throw Error(ErrorKind::NotOnCurve, poly::format(p) + " is not on the curve");
  if (q == cusp_) throw Error(ErrorKind::CuspPoint, "the cusp has no parameter");
  // q = l c + m d1 + n d2, parameter n / m
  poly::FieldMatrix a(f, 3, 3);
  std::vector<gf2m::Bits> rhs;
  for (std::size_t i = 0; i < 3; ++i) {
    a.set(i, 0, gf2m::embed(cusp_[i], f));
    a.set(i, 1, gf2m::embed(d1_[i], f));
    a.set(i, 2, gf2m::embed(d2_[i], f));
    rhs.push_back(q[i].bits());
  }
  poly::SolveResult s = poly::linear_solve(a, rhs);
  if (s.status != poly::SolveStatus::Unique) throw Error(ErrorKind::InvariantViolation, "projection frame is degenerate");
  FieldElement m(f, s.particular[1]), n(f, s.particular[2]);
  if (m.is_zero()) throw Error(ErrorKind::CuspPoint, "point on the cuspidal tangent");
  return n / m;
}

InducedAction induced_affine_map(const MultiPoly& curve, std::span<const MultiPoly> map, std::size_t validation_samples) {
  if (map.size() != 3) throw Error(ErrorKind::ArityMismatch, "plane map needs three components");
  CuspProjection proj(curve);
  Field f = curve.field();
  InducedAction out;
  std::vector<std::pair<FieldElement, FieldElement>> samples;
  const std::size_t wanted = 2 + validation_samples;
  for (gf2m::Bits b = 0; b < f->size() && samples.size() < wanted; ++b) {
    FieldElement t(f, b);
    auto image = poly::apply_map(map, proj.point(t));
    if (!image) {
      out.skipped.push_back(t);
      continue;
    }
    if (!curve.evaluate(image->coords()).is_zero())
      throw Error(ErrorKind::NotPreserved, "image of parameter " + gf2m::format(t) + " leaves the curve");
    if (*image == proj.cusp()) throw Error(ErrorKind::NotAffine, "a smooth point maps to the cusp");
    samples.emplace_back(t, proj.param(*image));
  }
  if (samples.size() < 4) throw Error(ErrorKind::NotAffine, "fewer than four usable samples");
  const auto& [t1, s1] = samples[0];
  const auto& [t2, s2] = samples[1];
  FieldElement alpha = (s1 + s2) / (t1 + t2);
  if (alpha.is_zero()) throw Error(ErrorKind::NotAffine, "map is constant on the curve");
  out.action = {alpha, s1 + alpha * t1};
  out.fit = {t1, t2};
  for (std::size_t i = 2; i < samples.size(); ++i) {
    if (!(out.action(samples[i].first) == samples[i].second))
      throw Error(ErrorKind::NotAffine, "fit fails at parameter " + gf2m::format(samples[i].first));
    out.validated.push_back(samples[i].first);
  }
  return out;
}

std::optional<AffineAction> match_point_sets(std::span<const FieldElement> a, std::span<const FieldElement> b) {
  if (a.size() != b.size() || a.empty()) return std::nullopt;
  std::vector<FieldElement> target(b.begin(), b.end());
  std::sort(target.begin(), target.end(), bits_less);
  auto matches = [&](const AffineAction& m) {
    std::vector<FieldElement> img;
    for (const auto& t : a) img.push_back(m(t));
    std::sort(img.begin(), img.end(), bits_less);
    return img == target;
  };
  Field f = a[0].field();
  if (a.size() == 1) return AffineAction{one(f), b[0] + a[0]};
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (j == k || a[0] == a[1]) continue;
      FieldElement alpha = (b[j] + b[k]) / (a[0] + a[1]);
      if (alpha.is_zero()) continue;
      AffineAction m{alpha, b[j] + alpha * a[0]};
      if (matches(m)) return m;
    }
  return std::nullopt;
}

std::string format_alpha_table(Field f) {
  std::string out = "# alpha c(alpha) beta p1 p2 p3 p4 p5 p6 p7 p8 p9 p10\n";
  out += "# field: " + gf2m::format_field_header(f) + "; p_n = [t : 1 : t^3]\n";
  for (const auto& a : lehmer_roots(f)) {
    FieldElement b = beta_from_alpha(a);
    out += gf2m::format(a) + " " + gf2m::format(beta_coefficient(a)) + " " + gf2m::format(b);
    for (const auto& t : orbit_points(a, b).params) out += " " + gf2m::format(t);
    out += "\n";
  }
  return out;
}

}  // namespace lehmer::cubic
