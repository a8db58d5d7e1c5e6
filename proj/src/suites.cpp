#include "lehmer/suites.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "lehmer/cubic.hpp"
#include "lehmer/lattice.hpp"
#include "lehmer/surface.hpp"

namespace lehmer::suites {

using gf2m::FieldElement;
using report::Json;
using report::Report;
using report::timed;
using report::witness;

namespace {

std::string decimal(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

Json vec_witness(const std::vector<int>& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x);
  return a;
}

struct LatticeData {
  lattice::IntMatrix w, gram, basis, w10, gram10;
};

LatticeData lattice_data(const Config& cfg) {
  LatticeData d;
  d.w = lattice::coxeter_matrix();
  d.gram = lattice::gram_z110();
  d.basis = lattice::load_e10_basis(cfg.data_dir / "e10_basis.dat");
  d.w10 = lattice::restrict_to(d.w, d.basis);
  d.gram10 = lattice::gram_on(d.basis, d.gram);
  return d;
}

Report coxeter_node(const LatticeData& d) {
  Report r = Report::node("coxeter element");
  using lattice::IntPoly;
  r.add(Report::leaf("w preserves the form", lattice::preserves(d.w, d.gram)));
  auto k = lattice::canonical_class();
  r.add(Report::leaf("w fixes K", d.w * k == k));
  std::vector<lattice::Int> wh = d.w.column(0);
  r.add(Report::leaf("w(H) = 2H - E2 - E3 - E4", wh == std::vector<lattice::Int>{2, 0, -1, -1, -1, 0, 0, 0, 0, 0, 0}));
  IntPoly p10 = lattice::lehmer_polynomial();
  IntPoly full = lattice::char_poly(d.w);
  r.add(Report::leaf("char poly on Z^{1,10} = (x - 1) P10", full == (IntPoly::x() - IntPoly::from_ints({1})) * p10,
                     lattice::format(full)));
  IntPoly restricted = lattice::char_poly(d.w10);
  r.add(Report::leaf("char poly on E10 = P10", restricted == p10, lattice::format(restricted)));
  return r;
}

Report dynamical_degree_node(const LatticeData& d, const Config& cfg) {
  Report r = Report::node("dynamical degree");
  lattice::Interval iv = lattice::dynamical_degree(d.w, cfg.precision);
  lattice::SalemCertificate cert = lattice::salem_certify(lattice::lehmer_polynomial(), cfg.precision);
  double mid = iv.mid_double();
  r.add(Report::leaf("lambda10 interval width <= precision", iv.width() <= cfg.precision,
                     Json{{"interval", witness(iv)}, {"decimal", decimal(mid, 9)}}));
  r.add(Report::leaf("lambda10 rounds to 1.17628", std::abs(mid - 1.17628) < 5e-6, decimal(mid, 9)));
  bool overlap = iv.lo <= cert.salem_number.hi && cert.salem_number.lo <= iv.hi;
  r.add(Report::leaf("spectral radius is the largest real root of P10", overlap, witness(cert.salem_number)));
  double lg = std::log(mid);
  r.add(Report::leaf("log lambda10 within 1e-4 of 0.16236", std::abs(lg - 0.16236) < 1e-4, decimal(lg, 9)));
  return r;
}

Report mod2_node(const LatticeData& d) {
  Report r = Report::node("mod 2 spectrum");
  auto factors = lattice::mod2_reduce_and_factor(lattice::lehmer_polynomial());
  Json fw = Json::array();
  std::set<std::string> got;
  for (const auto& f : factors) {
    std::string s = poly::format(f.poly);
    if (f.multiplicity != 1) s = "(" + s + ")^" + std::to_string(f.multiplicity);
    fw.push_back(s);
    got.insert(s);
  }
  std::set<std::string> want{"x^5 + x^3 + x^2 + x + 1", "x^5 + x^4 + x^3 + x^2 + 1"};
  r.add(Report::leaf("P10 = (x^5+x^3+x^2+x+1)(x^5+x^4+x^3+x^2+1) mod 2", got == want, fw));
  lattice::Mod2Action act = lattice::mod2_action_analysis(d.w10, d.gram10);
  r.add(Report::leaf("order of w mod 2 is 31", act.order == 31, static_cast<long>(act.order)));
  for (const auto& s : act.subspaces) {
    std::string name = "ker(" + poly::format(s.factor) + ")(w)";
    r.add(Report::leaf(name + " is 5-dimensional and totally isotropic", s.kernel.dim() == 5 && s.totally_isotropic,
                       Json{{"dimension", s.kernel.dim()}, {"vectors checked", s.nonzero_checked}}));
  }
  r.add(Report::leaf("two invariant factor kernels", act.subspaces.size() == 2, static_cast<int>(act.subspaces.size())));
  return r;
}

Report parity_node(const LatticeData& d) {
  Report r = Report::node("parity");
  auto e10 = lattice::parity_check(d.gram10);
  r.add(Report::leaf("E10 Gram matrix is even, so E10(2) has no (-2)-vectors", e10.even, witness(d.gram10)));
  r.add(Report::leaf("Z^{1,10} is odd", !lattice::parity_check(d.gram).even));
  r.add(Report::leaf("E8 is even", lattice::parity_check(lattice::e8_gram()).even));
  auto v0 = lattice::coordinates(lattice::reference_positive_vector(), d.basis);
  r.add(Report::leaf("identity lies in W(2)", lattice::weyl2_membership(lattice::IntMatrix::identity(10), d.gram10, v0)));
  r.add(Report::leaf("w does not lie in W(2)", !lattice::weyl2_membership(d.w10, d.gram10, v0)));
  return r;
}

Report lattice_suite(const Config& cfg) {
  Report r = Report::node("lattice");
  LatticeData d = lattice_data(cfg);
  r.add(timed("coxeter element", [&] { return coxeter_node(d); }));
  r.add(timed("dynamical degree", [&] { return dynamical_degree_node(d, cfg); }));
  r.add(timed("mod 2 spectrum", [&] { return mod2_node(d); }));
  r.add(timed("parity", [&] { return parity_node(d); }));
  return r;
}

Report salem_suite(const Config& cfg) {
  Report r = Report::node("salem");
  r.add(timed("trace polynomial", [&] {
    Report n = Report::node("trace polynomial");
    lattice::IntPoly p10 = lattice::lehmer_polynomial();
    lattice::SalemCertificate cert = lattice::salem_certify(p10, cfg.precision);
    n.add(Report::leaf("x^5 R10(x + 1/x) = P10", lattice::trace_expand(cert.trace) == p10, lattice::format(cert.trace)));
    n.add(Report::leaf("R10 has 5 real roots", cert.roots.size() == 5 && lattice::real_root_count(cert.trace) == 5,
                       static_cast<int>(cert.roots.size())));
    n.add(Report::leaf("exactly one root above 2", cert.roots_above_two == 1, witness(cert.big_root)));
    Json inner = Json::array();
    for (const auto& iv : cert.inner) inner.push_back(witness(iv));
    n.add(Report::leaf("exactly two of R10'(t1..t4) are positive", cert.positive_derivatives == 2,
                       Json{{"roots", inner}, {"signs", vec_witness(cert.derivative_signs)}}));
    std::vector<int> target = lattice::sign_vector_target(cert);
    n.add(Report::leaf("target sign vector (-1, -1, 1, 1)", target == std::vector<int>{-1, -1, 1, 1}, vec_witness(target)));
    return n;
  }));
  return r;
}

Report lagrangian_suite(const Config& cfg) {
  Report r = Report::node("lagrangians");
  LatticeData d = lattice_data(cfg);
  r.add(timed("quadratic space", [&] {
    Report n = Report::node("quadratic space");
    lattice::Mod2QuadSpace q(d.gram10);
    n.add(Report::leaf("E10/2E10 is nondegenerate of dimension 10", q.dim() == 10 && q.nondegenerate()));
    n.add(Report::leaf("plus type: 528 singular vectors, Arf invariant 0", q.singular_count() == 528 && q.arf() == 0,
                       Json{{"singular", q.singular_count()}, {"arf", q.arf()}}));
    return n;
  }));
  r.add(timed("census", [&] {
    Report n = Report::node("census");
    lattice::Mod2QuadSpace q(d.gram10);
    lattice::Mat2 t = lattice::reduce_mod2(d.w10);
    lattice::LagrangianCensus c = lattice::enumerate_lagrangians(q, &t);
    n.add(Report::leaf("4590 maximal totally singular subspaces", c.all.size() == 4590,
                       Json{{"count", c.all.size()}, {"duplicates rejected", c.duplicates_rejected}}));
    n.add(Report::leaf("two classes of 2295", c.class_sizes[0] == 2295 && c.class_sizes[1] == 2295,
                       Json::array({c.class_sizes[0], c.class_sizes[1]})));
    n.add(Report::leaf("2295 = 1 mod 31", c.class_sizes[0] % 31 == 1 && c.class_sizes[1] % 31 == 1));
    Json classes = Json::array();
    int per[2] = {0, 0};
    for (std::size_t i : c.invariant_members) {
      classes.push_back(c.klass[i]);
      ++per[c.klass[i]];
    }
    n.add(Report::leaf("exactly two are w-invariant, one per class",
                       c.invariant_members.size() == 2 && per[0] == 1 && per[1] == 1, classes));
    return n;
  }));
  return r;
}

Report cubic_suite(const Config& cfg) {
  Report r = Report::node("cubic");
  gf2m::Field f = gf2m::gf32();
  FieldElement one = FieldElement::one(f);
  r.add(timed("group law", [&] {
    Report n = Report::node("group law");
    n.add(Report::leaf("psi(0) = [0:1:0]", cubic::psi(FieldElement::zero(f)) == poly::ProjPoint({FieldElement::zero(f), one, FieldElement::zero(f)})));
    n.add(Report::leaf("psi(1) = [1:1:1]", cubic::psi(one) == poly::ProjPoint({one, one, one})));
    bool round = true;
    for (gf2m::Bits b = 0; b < f->size(); ++b) round = round && cubic::psi_inv(cubic::psi({f, b})) == FieldElement(f, b);
    n.add(Report::leaf("psi_inv o psi = id on GF(32)", round));
    gf2m::Field f8 = gf2m::gf2(3);
    int agree = 0, total = 0;
    for (gf2m::Bits a = 0; a < 8; ++a)
      for (gf2m::Bits b = 0; b < 8; ++b)
        for (gf2m::Bits c = 0; c < 8; ++c) {
          if (a == b || b == c || a == c) continue;
          FieldElement x(f8, a), y(f8, b), z(f8, c);
          ++total;
          if (cubic::collinear(x, y, z) == cubic::collinear_points(cubic::psi(x), cubic::psi(y), cubic::psi(z))) ++agree;
        }
    n.add(Report::leaf("t1 + t2 + t3 = 0 iff the points are collinear, distinct triples over GF(8)", agree == total,
                       Json{{"agree", agree}, {"triples", total}}));
    return n;
  }));
  r.add(timed("beta solver", [&] {
    Report n = Report::node("beta solver");
    auto roots = cubic::lehmer_roots(f);
    n.add(Report::leaf("P10 mod 2 has 10 roots in GF(32)", roots.size() == 10, witness(roots)));
    for (const auto& a : roots) {
      Report per = Report::node("alpha = " + gf2m::format(a));
      FieldElement c = cubic::beta_coefficient(a);
      per.add(Report::leaf("c(alpha) != 0", !c.is_zero(), witness(c)));
      try {
        FieldElement b = cubic::beta_from_alpha(a);
        per.add(Report::leaf("both p2 expressions agree", cubic::p2_via_p3(a, b) == cubic::p2_via_p4(a, b), witness(b)));
        cubic::PointSet10 pts = cubic::orbit_points(a, b);
        per.add(Report::leaf("ten distinct parameters", true,
                             witness(std::vector<FieldElement>(pts.params.begin(), pts.params.end()))));
        per.add(cubic::verify_coxeter_constraints(pts, {a, b}));
        FieldElement bad = b + one;
        per.add(Report::leaf("beta + 1 breaks the p2 consistency", !(cubic::p2_via_p3(a, bad) == cubic::p2_via_p4(a, bad))));
      } catch (const std::exception& e) {
        per.add(Report::error("orbit points", e));
      }
      n.add(std::move(per));
    }
    return n;
  }));
  r.add(timed("valid scalars", [&] {
    Report n = Report::node("valid scalars");
    std::vector<FieldElement> valid;
    for (gf2m::Bits v = 1; v < f->size(); ++v) {
      FieldElement a(f, v);
      try {
        FieldElement b = cubic::beta_from_alpha(a);
        if (cubic::verify_coxeter_constraints(cubic::orbit_points(a, b), {a, b}).passed()) valid.push_back(a);
      } catch (const Error&) {
      }
    }
    n.add(Report::leaf("10 valid scalars", valid.size() == 10, witness(valid)));
    auto contains = [&](const FieldElement& x) { return std::find(valid.begin(), valid.end(), x) != valid.end(); };
    bool closed = !valid.empty();
    for (const auto& a : valid) closed = closed && contains(a * a) && contains(a.inv());
    n.add(Report::leaf("closed under squaring and inversion", closed));
    bool orbit = !valid.empty();
    if (orbit) {
      std::vector<FieldElement> gen;
      for (int i = 0; i < 5; ++i) {
        gen.push_back(gf2m::frobenius(valid[0], static_cast<unsigned>(i)));
        gen.push_back(gf2m::frobenius(valid[0], static_cast<unsigned>(i)).inv());
      }
      for (const auto& x : gen) orbit = orbit && contains(x);
      std::sort(gen.begin(), gen.end(), [](const auto& a, const auto& b) { return a.bits() < b.bits(); });
      orbit = orbit && std::adjacent_find(gen.begin(), gen.end()) == gen.end();
    }
    n.add(Report::leaf("valid scalars = {alpha^(+-2^i)}", orbit));
    bool frob = true;
    for (const auto& a : valid) frob = frob && cubic::beta_from_alpha(a * a) == cubic::beta_from_alpha(a) * cubic::beta_from_alpha(a);
    n.add(Report::leaf("beta(alpha^2) = beta(alpha)^2", frob));
    bool rejects = false;
    try {
      cubic::beta_from_alpha(one);
    } catch (const Error& e) {
      rejects = e.kind() == ErrorKind::NotLehmerRoot;
    }
    n.add(Report::leaf("alpha = 1 is rejected", rejects));
    return n;
  }));
  r.add(timed("alpha table", [&] {
    std::ifstream in(cfg.data_dir / "alpha_table.dat");
    std::stringstream buf;
    buf << in.rdbuf();
    bool same = in && buf.str() == cubic::format_alpha_table(f);
    return Report::leaf("alpha_table.dat matches the regenerated table", same);
  }));
  return r;
}

Report surface_suite(const Config& cfg) {
  Report r = Report::node("surface");
  surface::SurfaceModel m;
  try {
    m = surface::load_model(cfg.data_dir);
  } catch (const std::exception& e) {
    r.add(Report::error("load model", e));
    return r;
  }
  r.add(Report::leaf("load model", true, Json{{"s terms", m.s.size()}, {"eta terms", m.eta.size()}}));
  r.add(timed("orbit", [&] { return surface::verify_orbit(m, cfg.ext_bound); }));
  r.add(timed("cubic B", [&] { return surface::verify_cubic(m); }));
  r.add(timed("equivariance", [&] { return surface::verify_equivariance(m); }));
  FieldElement lambda1 = FieldElement::zero(m.field);
  r.add(timed("sigma0 inverse", [&] {
    Report n = Report::node("sigma0 inverse");
    surface::SigmaInverse inv;
    try {
      inv = surface::derive_sigma_inverse(m);
    } catch (const std::exception& e) {
      n.add(Report::error("eta' exists and is unique", e));
      return n;
    }
    n = surface::report_sigma_inverse(inv);
    surface::DerivationCheck d = surface::verify_derivation(m, inv);
    lambda1 = d.lambda1;
    n.add(std::move(d.report));
    return n;
  }));
  r.add(timed("singular locus", [&] { return surface::singular_locus(m, cfg.ext_bound).report; }));
  r.add(timed("multiplicities", [&] { return surface::verify_multiplicities(m); }));
  r.add(timed("blow-up charts", [&] { return surface::verify_chart_smoothness(m); }));
  r.add(timed("alpha consistency", [&] { return surface::verify_alpha_consistency(m, lambda1).report; }));
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all", "lattice", "salem", "lagrangians", "cubic", "surface"};
  return names;
}

Report run_suite(const std::string& name, const Config& cfg) {
  auto one = [&](const std::string& n) -> Report {
    if (n == "lattice") return timed(n, [&] { return lattice_suite(cfg); });
    if (n == "salem") return timed(n, [&] { return salem_suite(cfg); });
    if (n == "lagrangians") return timed(n, [&] { return lagrangian_suite(cfg); });
    if (n == "cubic") return timed(n, [&] { return cubic_suite(cfg); });
    if (n == "surface") return timed(n, [&] { return surface_suite(cfg); });
    throw Error(ErrorKind::UnknownSuite, "unknown suite '" + n + "'");
  };
  if (name == "all") {
    return timed("all", [&] {
      Report r = Report::node("all");
      for (const auto& n : suite_names())
        if (n != "all") r.add(one(n));
      return r;
    });
  }
  return one(name);
}

}  // namespace lehmer::suites
