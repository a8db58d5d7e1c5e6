#include "lehmer/surface.hpp"

#include <algorithm>
#include <map>

#include "lehmer/linsolve.hpp"
#include "lehmer/polytext.hpp"
#include "lehmer/rational_function.hpp"
#include "lehmer/resultant.hpp"

namespace lehmer::surface {

using gf2m::Bits;
using poly::Monomial;
using report::Json;
using report::witness;

namespace {

const std::vector<int> kPlaneWeights{1, 1, 1};

MultiPoly to4(const MultiPoly& p) { return p.remap(4, std::vector<int>{0, 1, 2}); }

MultiPoly var(Field f, int nvars, int i) { return MultiPoly::variable(f, nvars, i); }

std::vector<Monomial> plane_monomials(int degree) {
  std::vector<Monomial> out;
  for (int a = degree; a >= 0; --a)
    for (int b = degree - a; b >= 0; --b) out.push_back(poly::mono_make(std::vector<int>{a, b, degree - a - b}));
  return out;
}

int degree_of(const MultiPoly& p) { return p.weighted_homogeneous_degree(kPlaneWeights); }

std::string point_name(int i) { return "p" + std::to_string(i); }

Json points_witness(const std::vector<ProjPoint>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(poly::format(p));
  return a;
}

bool same_set(std::vector<ProjPoint> a, std::vector<ProjPoint> b) {
  if (a.size() != b.size()) return false;
  for (const auto& p : a) {
    auto it = std::find(b.begin(), b.end(), p);
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

// Binary quadratic form a u^2 + b uv + c v^2 in the local coordinates.
bool is_square_form(const MultiPoly& q) {
  for (const auto& t : q.terms())
    if (poly::mono_exp(t.mono, 0) == 1) return false;
  return !q.is_zero();
}

// Local equation of s at a point, in the chart where the point's last
// nonzero coordinate is 1, translated to the origin.
MultiPoly local_equation(const MultiPoly& s, const ProjPoint& p) {
  int k = p.chart();
  return poly::translate(poly::dehomogenize(s, k), p.affine(k));
}

}  // namespace

std::vector<MultiPoly> SurfaceModel::sigma() const {
  MultiPoly w = var(field, 4, 3);
  return {to4(f[0]), to4(f[1]), to4(f[2]), to4(c) * w + to4(eta)};
}

SurfaceModel load_model(const std::filesystem::path& dir) {
  auto sf = poly::load_data_file(dir / "surface.poly");
  auto af = poly::load_data_file(dir / "automorphism.poly");
  auto pf = poly::load_data_file(dir / "points.dat");
  if (sf.field != af.field || sf.field != pf.field) throw Error(ErrorKind::InvariantViolation, "data files disagree on the field");
  SurfaceModel m;
  m.field = sf.field;
  m.s = sf.poly("s", 3);
  m.g = sf.poly("g", 3);
  for (int i = 0; i < 3; ++i) {
    m.f[static_cast<std::size_t>(i)] = af.poly("f" + std::to_string(i + 1), 3);
    m.finv[static_cast<std::size_t>(i)] = af.poly("finv" + std::to_string(i + 1), 3);
  }
  m.c = af.poly("c", 3);
  m.eta = af.poly("eta", 3);
  m.cinv = af.poly("cinv", 3);
  for (int i = 0; i <= 10; ++i) m.points[static_cast<std::size_t>(i)] = pf.point(point_name(i));
  m.cusp = pf.point("cusp");
  check_model(m);
  return m;
}

void check_model(const SurfaceModel& m) {
  auto need = [](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::InvariantViolation, what);
  };
  need(degree_of(m.s) == 12, "s is not homogeneous of degree 12");
  need(degree_of(m.g) == 3, "g is not a cubic form");
  for (int i = 0; i < 3; ++i) {
    need(degree_of(m.f[static_cast<std::size_t>(i)]) == 2, "f" + std::to_string(i + 1) + " is not a quadric");
    need(degree_of(m.finv[static_cast<std::size_t>(i)]) == 2, "finv" + std::to_string(i + 1) + " is not a quadric");
  }
  need(degree_of(m.c) == 6, "c is not of degree 6");
  need(degree_of(m.cinv) == 6, "cinv is not of degree 6");
  need(degree_of(m.eta) == 12, "eta is not of degree 12");
  for (int i = 0; i <= 10; ++i)
    need(m.g.evaluate(m.points[static_cast<std::size_t>(i)].coords()).is_zero(), "g(" + point_name(i) + ") != 0");
  need(m.g.evaluate(m.cusp.coords()).is_zero(), "g(cusp) != 0");
}

Report verify_orbit(const SurfaceModel& m, int ext_bound) {
  Report r = Report::node("orbit");
  for (int i = 4; i <= 10; ++i) {
    const ProjPoint& target = m.points[static_cast<std::size_t>(i == 10 ? 1 : i + 1)];
    auto img = poly::apply_map(m.f, m.points[static_cast<std::size_t>(i)]);
    bool ok = img && *img == target;
    r.add(Report::leaf("f(" + point_name(i) + ") = " + point_name(i == 10 ? 1 : i + 1), ok,
                       img ? Json(poly::format(*img)) : Json("base point")));
  }
  auto img0 = poly::apply_map(m.f, m.points[0]);
  r.add(Report::leaf("f(p0) = p0", img0 && *img0 == m.points[0], img0 ? Json(poly::format(*img0)) : Json("base point")));
  std::vector<ProjPoint> base = poly::plane_common_zeros(m.f, ext_bound);
  r.add(Report::leaf("base locus of f = {p1, p2, p3}", same_set(base, {m.points[1], m.points[2], m.points[3]}),
                     points_witness(base)));
  return r;
}

Report verify_cubic(const SurfaceModel& m) {
  Report r = Report::node("cubic B");
  Field f = m.field;
  auto monos = plane_monomials(3);
  poly::FieldMatrix a(f, 10, monos.size());
  for (std::size_t i = 0; i < 10; ++i) {
    const auto& p = m.points[i + 1];
    for (std::size_t j = 0; j < monos.size(); ++j) {
      std::vector<int> e{poly::mono_exp(monos[j], 0), poly::mono_exp(monos[j], 1), poly::mono_exp(monos[j], 2)};
      a.set(i, j, p[0].pow(e[0]) * p[1].pow(e[1]) * p[2].pow(e[2]));
    }
  }
  auto ker = poly::kernel_basis(a);
  r.add(Report::leaf("cubics through p1..p10: kernel dimension 1", ker.size() == 1, static_cast<int>(ker.size())));
  bool spans = false;
  if (ker.size() == 1) {
    std::vector<poly::Term> terms;
    for (std::size_t j = 0; j < monos.size(); ++j) terms.push_back({monos[j], ker[0][j]});
    MultiPoly k = MultiPoly::from_terms(f, 3, std::move(terms));
    FieldElement scale = FieldElement(f, m.g.lead().coeff) / FieldElement(f, k.lead().coeff);
    spans = k.scale(scale) == m.g;
  }
  r.add(Report::leaf("kernel is spanned by g", spans, poly::format(m.g)));

  bool cusp_singular = m.g.evaluate(m.cusp.coords()).is_zero();
  for (int i = 0; i < 3; ++i) cusp_singular = cusp_singular && poly::partial(m.g, i).evaluate(m.cusp.coords()).is_zero();
  r.add(Report::leaf("g and its partials vanish at the cusp", cusp_singular, poly::format(m.cusp)));
  MultiPoly cone = local_equation(m.g, m.cusp).homogeneous_part(2);
  r.add(Report::leaf("tangent cone at the cusp is a double line", is_square_form(cone), poly::format(cone)));
  try {
    cubic::CuspProjection proj(m.g);
    r.add(Report::leaf("B has a single singular point", proj.cusp() == m.cusp, poly::format(proj.cusp())));
  } catch (const std::exception& e) {
    r.add(Report::error("B has a single singular point", e));
  }

  const auto& p0 = m.points[0];
  bool on = m.g.evaluate(p0.coords()).is_zero();
  Json grad = Json::array();
  bool smooth = false;
  for (int i = 0; i < 3; ++i) {
    FieldElement d = poly::partial(m.g, i).evaluate(p0.coords());
    grad.push_back(gf2m::format(d));
    smooth = smooth || !d.is_zero();
  }
  r.add(Report::leaf("p0 is a smooth point of B", on && smooth, Json{{"g(p0)", on ? "0" : "nonzero"}, {"gradient", grad}}));
  return r;
}

Report verify_equivariance(const SurfaceModel& m) {
  Report r = Report::node("equivariance");
  MultiPoly lhs = poly::substitute(m.s, m.f);
  MultiPoly rhs = m.c * m.c * m.s + m.eta * m.eta;
  r.add(Report::leaf("both sides have degree 24", degree_of(lhs) == 24 && degree_of(rhs) == 24,
                     Json{{"lhs", degree_of(lhs)}, {"rhs", degree_of(rhs)}}));
  r.add(Report::leaf("s(f) = c^2 s + eta^2", lhs == rhs,
                     Json{{"terms", lhs.size()}, {"difference terms", (lhs + rhs).size()}}));
  return r;
}

SigmaInverse derive_sigma_inverse(const SurfaceModel& m) {
  Field f = m.field;
  SigmaInverse out;
  // (x, y, z)-part of sigma0^-1 o sigma0 is F (x, y, z).
  std::array<MultiPoly, 3> fwd;
  for (int i = 0; i < 3; ++i) fwd[static_cast<std::size_t>(i)] = poly::substitute(m.finv[static_cast<std::size_t>(i)], m.f);
  MultiPoly factor = poly::divide_exact(fwd[0], var(f, 3, 0));
  for (int i = 0; i < 3; ++i)
    if (!(fwd[static_cast<std::size_t>(i)] == factor * var(f, 3, i)))
      throw Error(ErrorKind::InvariantViolation, "sigma0^-1 o sigma0 is not a multiple of the identity");
  MultiPoly cinv_f = poly::substitute(m.cinv, m.f);
  if (!(cinv_f * m.c == factor.pow(6)))
    throw Error(ErrorKind::InvariantViolation, "w-coefficient of sigma0^-1 o sigma0 is not F^6");

  // eta'(f) = cinv(f) eta, linear in the 91 coefficients of eta'.
  auto monos = plane_monomials(12);
  std::vector<MultiPoly> images;
  for (Monomial mono : monos)
    images.push_back(poly::substitute(MultiPoly::from_terms(f, 3, {{mono, 1}}), m.f));
  MultiPoly rhs = cinv_f * m.eta;
  std::map<Monomial, std::size_t> rows;
  for (const auto& im : images)
    for (const auto& t : im.terms()) rows.emplace(t.mono, 0);
  for (const auto& t : rhs.terms()) rows.emplace(t.mono, 0);
  std::size_t next = 0;
  for (auto& [mono, row] : rows) row = next++;
  poly::FieldMatrix a(f, rows.size(), monos.size());
  for (std::size_t j = 0; j < images.size(); ++j)
    for (const auto& t : images[j].terms()) a.at(rows[t.mono], j) = t.coeff;
  std::vector<Bits> b(rows.size(), 0);
  for (const auto& t : rhs.terms()) b[rows[t.mono]] = t.coeff;
  poly::SolveResult sol = poly::linear_solve(a, b);
  out.unknowns = monos.size();
  out.equations = rows.size();
  if (sol.status == poly::SolveStatus::Inconsistent) throw Error(ErrorKind::NoSolution, "no tail eta' makes sigma0^-1 an inverse");
  if (sol.status == poly::SolveStatus::Kernel)
    throw Error(ErrorKind::NonUniqueSolution, std::to_string(sol.kernel.size()) + "-dimensional family of tails");
  std::vector<poly::Term> terms;
  for (std::size_t j = 0; j < monos.size(); ++j) terms.push_back({monos[j], sol.particular[j]});
  out.eta_prime = MultiPoly::from_terms(f, 3, std::move(terms));

  MultiPoly w = var(f, 4, 3);
  out.components = {to4(m.finv[0]), to4(m.finv[1]), to4(m.finv[2]), to4(m.cinv) * w + to4(out.eta_prime)};
  auto sigma = m.sigma();
  auto compose_check = [&](const std::vector<MultiPoly>& outer, const std::vector<MultiPoly>& inner) {
    std::vector<MultiPoly> comp;
    for (const auto& p : outer) comp.push_back(poly::substitute(p, inner));
    MultiPoly fac = poly::divide_exact(comp[0], var(f, 4, 0));
    for (int i = 0; i < 3; ++i)
      if (!(comp[static_cast<std::size_t>(i)] == fac * var(f, 4, i)))
        throw Error(ErrorKind::InvariantViolation, "composition is not a multiple of the identity");
    if (!(comp[3] == fac.pow(6) * w)) throw Error(ErrorKind::InvariantViolation, "w-component of the composition is not F^6 w");
    return fac.remap(3, std::vector<int>{0, 1, 2, 0});
  };
  out.forward_factor = compose_check(out.components, sigma);
  out.backward_factor = compose_check(sigma, out.components);
  return out;
}

Report report_sigma_inverse(const SigmaInverse& inv) {
  Report r = Report::node("sigma0 inverse");
  r.add(Report::leaf("eta' exists and is unique", true,
                     Json{{"unknowns", inv.unknowns}, {"equations", inv.equations}, {"terms", inv.eta_prime.size()},
                          {"eta'", poly::format(inv.eta_prime)}}));
  r.add(Report::leaf("sigma0^-1 o sigma0 = F id", true, poly::format(inv.forward_factor)));
  r.add(Report::leaf("sigma0 o sigma0^-1 = G id", true, poly::format(inv.backward_factor)));
  return r;
}

DerivationCheck verify_derivation(const SurfaceModel& m, const SigmaInverse& inv) {
  DerivationCheck out{Report::node("derivation"), FieldElement::zero(m.field)};
  Report& r = out.report;
  Field f = m.field;
  MultiPoly xyz = var(f, 3, 0) * var(f, 3, 1) * var(f, 3, 2);
  MultiPoly gf = poly::substitute(m.g, m.f);
  FieldElement z12 = FieldElement::gen(f, 12);
  r.add(Report::leaf("sigma0(g) = g^12 xyz g", gf == (xyz * m.g).scale(z12), witness(z12)));

  poly::DoublePlane plane(to4(m.s));
  MultiPoly g2 = to4(m.g * m.g);
  auto sigma = m.sigma();
  auto conj = [&](const poly::RationalFunction& h) {
    return h.pullback(inv.components).derive_w(g2).pullback(sigma);
  };
  auto z6 = var(f, 4, 2).pow(6);
  poly::RationalFunction h(plane, var(f, 4, 3), z6);
  poly::RationalFunction lhs = conj(h);
  poly::RationalFunction rhs = h.derive_w(g2);
  r.add(Report::leaf("D(w/z^6) = g^2/z^6", rhs == poly::RationalFunction(plane, g2, z6)));
  auto ratio = constant_ratio(lhs, rhs);
  if (ratio) out.lambda1 = *ratio;
  r.add(Report::leaf("sigma0 D sigma0^-1 (w/z^6) = lambda D(w/z^6)", ratio.has_value() && !ratio->is_zero(),
                     ratio ? witness(*ratio) : Json("not a constant multiple")));
  r.add(Report::leaf("lambda = g^8", ratio && *ratio == FieldElement::gen(f, 8), ratio ? witness(*ratio) : Json(nullptr)));
  for (int i = 0; i < 2; ++i) {
    std::string name = i == 0 ? "x/z" : "y/z";
    poly::RationalFunction q(plane, var(f, 4, i), var(f, 4, 2));
    r.add(Report::leaf("D(" + name + ") = 0", q.derive_w(g2).is_zero() && conj(q).is_zero()));
  }
  return out;
}

SingularLocus singular_locus(const SurfaceModel& m, int ext_bound) {
  SingularLocus out{Report::node("singular locus"), {}};
  const char* names[] = {"x = 1", "y = 1", "z = 1"};
  for (int k : {2, 1, 0}) {
    std::vector<MultiPoly> sys;
    for (int i = 0; i < 3; ++i)
      if (i != k) sys.push_back(poly::dehomogenize(poly::partial(m.s, i), k));
    poly::BivariateSolutions sol = poly::solve_bivariate_system(sys, ext_bound);
    if (sol.bound_exceeded)
      throw Error(ErrorKind::ExtensionBoundExceeded,
                  "chart " + std::string(names[k]) + ": eliminant factor of degree " + std::to_string(sol.unsplit_degree) +
                      " has roots beyond the bound");
    std::vector<ProjPoint> found;
    for (const auto& uv : sol.points) {
      std::vector<FieldElement> c;
      for (int i = 0, j = 0; i < 3; ++i) c.push_back(i == k ? FieldElement::one(uv[0].field()) : uv[static_cast<std::size_t>(j++)]);
      ProjPoint p = ProjPoint(std::move(c)).minimal(m.field);
      found.push_back(p);
      if (std::find(out.points.begin(), out.points.end(), p) == out.points.end()) out.points.push_back(p);
    }
    out.report.add(Report::leaf(std::string("chart ") + names[k], true,
                                Json{{"eliminant degree", sol.eliminant.degree()}, {"solutions", found.size()},
                                     {"points", points_witness(found)}}));
  }
  std::vector<ProjPoint> expected(m.points.begin(), m.points.end());
  out.report.add(Report::leaf("11 singular points", out.points.size() == 11, static_cast<int>(out.points.size())));
  out.report.add(Report::leaf("singular points = {p0, ..., p10}", same_set(out.points, expected), points_witness(out.points)));
  bool rational = std::all_of(out.points.begin(), out.points.end(), [&](const ProjPoint& p) { return p.field() == m.field; });
  out.report.add(Report::leaf("all singular points are GF(32)-rational", rational));
  return out;
}

int multiplicity_mod_squares(const MultiPoly& s, const ProjPoint& p) {
  int best = -1;
  for (const auto& t : local_equation(s, p).terms()) {
    bool odd = false;
    for (int i = 0; i < s.nvars() - 1; ++i) odd = odd || (poly::mono_exp(t.mono, i) & 1) != 0;
    if (odd && (best < 0 || poly::mono_degree(t.mono) < best)) best = poly::mono_degree(t.mono);
  }
  return best;
}

Report verify_multiplicities(const SurfaceModel& m) {
  Report r = Report::node("multiplicities");
  for (int i = 1; i <= 10; ++i) {
    const auto& p = m.points[static_cast<std::size_t>(i)];
    int raw = poly::multiplicity_at(poly::dehomogenize(m.s, p.chart()), p.affine(p.chart()));
    int adjusted = multiplicity_mod_squares(m.s, p);
    r.add(Report::leaf("multiplicity at " + point_name(i) + " = 4", adjusted == 4,
                       Json{{"s + h^2", adjusted}, {"s", raw}}));
  }
  const auto& p0 = m.points[0];
  MultiPoly local = local_equation(m.s, p0);
  FieldElement value = local.coeff(0);
  MultiPoly adjusted = local + MultiPoly::constant(value, local.nvars());
  int mult = adjusted.min_total_degree();
  MultiPoly initial = adjusted.homogeneous_part(2);
  r.add(Report::leaf("adjusted multiplicity at p0 = 2", mult == 2,
                     Json{{"s(p0)", gf2m::format(value)}, {"sqrt s(p0)", gf2m::format(value.sqrt())}, {"multiplicity", mult}}));
  r.add(Report::leaf("initial form at p0 is not a square", mult == 2 && !is_square_form(initial) && !initial.is_zero(),
                     poly::format(initial, std::vector<std::string>{"u", "v"})));
  return r;
}

Report verify_chart_smoothness(const SurfaceModel& m) {
  Report r = Report::node("blow-up charts");
  Field f = m.field;
  for (int i = 1; i <= 3; ++i) {
    MultiPoly local = local_equation(m.s, m.points[static_cast<std::size_t>(i)]);
    // Chart 0: v = a u. Chart 1: u = a v. New variables (t, a), t the
    // equation of the exceptional line.
    for (int chart = 0; chart < 2; ++chart) {
      MultiPoly t = var(f, 2, 0), a = var(f, 2, 1);
      std::vector<MultiPoly> map = chart == 0 ? std::vector<MultiPoly>{t, a * t} : std::vector<MultiPoly>{a * t, t};
      std::string name = point_name(i) + (chart == 0 ? ", chart v = a u" : ", chart u = a v");
      MultiPoly st;
      try {
        st = poly::divide_by_var_power(poly::substitute(local, map), 0, 4);
      } catch (const std::exception& e) {
        r.add(Report::error(name, e));
        continue;
      }
      std::vector<FieldElement> at_zero{FieldElement::zero(f), FieldElement::zero(f)};
      poly::UniPoly da = poly::partial(st, 1).to_univariate(1, at_zero);
      poly::UniPoly dt = poly::partial(st, 0).to_univariate(1, at_zero);
      poly::UniPoly g = poly::gcd(da, dt);
      bool smooth = !g.is_zero() && g.degree() == 0;
      r.add(Report::leaf(name, smooth, Json{{"gcd", poly::format(g, "a")}, {"terms", st.size()}}));
    }
  }
  return r;
}

AlphaCheck verify_alpha_consistency(const SurfaceModel& m, const FieldElement& lambda1) {
  AlphaCheck out{Report::node("alpha consistency"), FieldElement::zero(m.field)};
  Report& r = out.report;
  Field f = m.field;
  cubic::InducedAction ia = cubic::induced_affine_map(m.g, m.f);
  const FieldElement& alpha = ia.action.alpha;
  out.alpha = alpha;
  r.add(Report::leaf("induced action on B is affine", true,
                     Json{{"alpha", gf2m::format(alpha)}, {"beta'", gf2m::format(ia.action.beta)},
                          {"validated samples", ia.validated.size()}, {"base points skipped", ia.skipped.size()}}));
  auto roots = cubic::lehmer_roots(f);
  r.add(Report::leaf("alpha is a root of P10 mod 2", std::find(roots.begin(), roots.end(), alpha) != roots.end(),
                     witness(alpha)));
  FieldElement z16 = FieldElement::gen(f, 16);
  r.add(Report::leaf("g^16 is not a root of P10 mod 2", !cubic::is_lehmer_root(z16)));
  r.add(Report::leaf("alpha != g^16", !(alpha == z16)));
  FieldElement z8 = FieldElement::gen(f, 8);
  r.add(Report::leaf("lambda1 = g^8", lambda1 == z8, witness(lambda1)));
  bool distinct = !lambda1.is_zero() && !(alpha / lambda1 == lambda1);
  r.add(Report::leaf("lambda2 = alpha / lambda1 != lambda1", distinct,
                     lambda1.is_zero() ? Json(nullptr) : witness(alpha / lambda1)));

  cubic::CuspProjection proj(m.g);
  FieldElement p0 = proj.param(m.points[0]);
  r.add(Report::leaf("p0 is the fixed parameter beta'/(alpha + 1)", p0 == ia.action.beta / (alpha + FieldElement::one(f)),
                     witness(p0)));
  std::vector<FieldElement> model, formula;
  for (int i = 1; i <= 10; ++i) model.push_back(proj.param(m.points[static_cast<std::size_t>(i)]));
  cubic::PointSet10 pts = cubic::orbit_points(alpha, cubic::beta_from_alpha(alpha));
  formula.assign(pts.params.begin(), pts.params.end());
  auto match = cubic::match_point_sets(model, formula);
  r.add(Report::leaf("model points match the formula points", match.has_value(),
                     match ? Json{{"a", gf2m::format(match->alpha)}, {"b", gf2m::format(match->beta)}} : Json(nullptr)));
  return out;
}

}  // namespace lehmer::surface
