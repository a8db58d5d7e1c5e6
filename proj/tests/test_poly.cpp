#include <doctest.h>

#include <algorithm>
#include <random>

#include "lehmer/cubic.hpp"
#include "lehmer/linsolve.hpp"
#include "lehmer/polytext.hpp"
#include "lehmer/resultant.hpp"
#include "lehmer/roots.hpp"

using namespace lehmer;
using namespace lehmer::poly;

namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};

MultiPoly P(const std::string& s, Field f = gf2m::gf32()) { return parse_poly(s, f, kXYZ); }

FieldElement z(int k) { return FieldElement::gen(gf2m::gf32(), k); }

// All roots in GF(32) found by evaluating at every element.
std::vector<Bits> brute_roots(const UniPoly& p) {
  std::vector<Bits> out;
  for (Bits v = 0; v < p.field()->size(); ++v)
    if (p.eval({p.field(), v}).is_zero()) out.push_back(v);
  return out;
}

}  // namespace

TEST_SUITE("polynomial") {
  TEST_CASE("univariate arithmetic") {
    Field f = gf2m::gf32();
    UniPoly a(f, {1, 2, 3}), b(f, {5, 0, 1});
    auto [q, r] = divmod(a * b + UniPoly(f, {7}), b);
    CHECK(q == a);
    CHECK(r == UniPoly(f, {7}));
    CHECK(gcd(a * b, a * UniPoly(f, {1, 1})).degree() >= a.degree());
    CHECK(pow(UniPoly::x(f), 5) == UniPoly::x(f).shift(4));
    CHECK_THROWS_AS(divide_exact(a, UniPoly(f, {1, 1, 1, 1})), Error);
  }

  TEST_CASE("substitute and partial") {
    MultiPoly p = P("x + y");
    std::vector<MultiPoly> swap{P("y"), P("x"), P("z")};
    CHECK(substitute(p, swap) == p);
    MultiPoly g = P("x^2*y + g^2*x^2*z + g^19*x*y^2 + g^13*x*z^2 + g^7*y^2*z + g^30*y*z^2");
    std::vector<MultiPoly> id{P("x"), P("y"), P("z")};
    CHECK(substitute(g, id) == g);
    CHECK(partial(P("x^2*y"), 0).is_zero());
    CHECK(partial(P("x^3"), 0) == P("x^2"));
    std::vector<FieldElement> cusp{z(15), z(28), z(0)};
    for (int v = 0; v < 3; ++v) CHECK(partial(g, v).evaluate(cusp).is_zero());
  }

  TEST_CASE("multiplicity") {
    Field f = gf2m::gf32();
    std::vector<std::string> xy{"x", "y"};
    std::vector<FieldElement> origin{FieldElement::zero(f), FieldElement::zero(f)};
    CHECK(multiplicity_at(parse_poly("x^2*y + y^4", f, xy), origin) == 3);
    std::vector<FieldElement> one{FieldElement::one(f), FieldElement::zero(f)};
    CHECK(multiplicity_at(parse_poly("x^2*y + y^4 + 1", f, xy), one) == 0);
    // (x + 1)^2 y at (1, 0): lowest Taylor degree 3
    CHECK(multiplicity_at(parse_poly("x^2*y + y", f, xy), one) == 3);
  }

  TEST_CASE("resultants") {
    Field f = gf2m::gf32();
    std::vector<std::string> xab{"x", "a", "b"};
    MultiPoly r = resultant(parse_poly("x + a", f, xab), parse_poly("x + b", f, xab), 0);
    CHECK(r == parse_poly("a + b", f, xab));
    Field f2 = gf2m::gf2(1);
    std::vector<std::string> x{"x"};
    CHECK(resultant(parse_poly("x^2 + 1", f2, x), parse_poly("x + 1", f2, x), 0).is_zero());
    CHECK_THROWS_AS(resultant(parse_poly("a", f, xab), parse_poly("x", f, xab), 0), Error);

    // Oracle: Res_y(p, q)(x0) = 0 exactly when p(x0, y), q(x0, y) share a
    // root, checked over all x0 in GF(32) for random pairs whose leading y
    // coefficients are constants.
    std::mt19937 rng(3);
    std::vector<std::string> xy{"x", "y"};
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Term> tp, tq;
      tp.push_back({mono_unit(1, 3), 1});
      tq.push_back({mono_unit(1, 2), 1});
      for (int i = 0; i < 6; ++i) {
        tp.push_back({mono_unit(0, rng() % 3) | mono_unit(1, rng() % 3), rng() % 32});
        tq.push_back({mono_unit(0, rng() % 3) | mono_unit(1, rng() % 2), rng() % 32});
      }
      MultiPoly p = MultiPoly::from_terms(f, 2, tp), q = MultiPoly::from_terms(f, 2, tq);
      MultiPoly res = resultant(p, q, 1);
      for (Bits v = 0; v < 32; ++v) {
        FieldElement x0(f, v);
        std::vector<FieldElement> at{x0, FieldElement::zero(f)};
        UniPoly pu = p.to_univariate(1, at), qu = q.to_univariate(1, at);
        bool common = gcd(pu, qu).degree() > 0;
        std::vector<FieldElement> pt{x0, FieldElement::zero(f)};
        CHECK(res.evaluate(pt).is_zero() == common);
      }
    }
  }

  TEST_CASE("bivariate systems") {
    Field f = gf2m::gf2(1);
    std::vector<std::string> xy{"x", "y"};
    std::vector<MultiPoly> sys{parse_poly("x^2 + y", f, xy), parse_poly("y^2 + x", f, xy)};
    BivariateSolutions sol = solve_bivariate_system(sys, 10);
    // Oracle: x^4 = x, so x in GF(4); GF(4) sits in GF(2^10) but not GF(32).
    CHECK(sol.points.size() == 4);
    for (const auto& p : sol.points)
      for (const auto& q : sys) CHECK(q.embed(p[0].field()).evaluate(p).is_zero());
    std::vector<MultiPoly> line{parse_poly("x + y", f, xy), parse_poly("x^2 + x*y", f, xy)};
    CHECK_THROWS_AS(solve_bivariate_system(line, 10), Error);
  }

  TEST_CASE("root finding") {
    Field f = gf2m::gf32();
    UniPoly mod(f, {1, 0, 1, 0, 0, 1});
    RootSet rs = uni_roots(mod, 5);
    std::vector<Bits> got;
    for (const auto& r : rs.roots) {
      CHECK(r.multiplicity == 1);
      got.push_back(r.value.bits());
    }
    std::sort(got.begin(), got.end());
    CHECK(got == brute_roots(mod));
    std::vector<Bits> want;
    for (int k : {1, 2, 4, 8, 16}) want.push_back(z(k).bits());
    std::sort(want.begin(), want.end());
    CHECK(got == want);

    Field f2 = gf2m::gf2(1);
    RootSet sq = uni_roots(UniPoly(f2, {1, 0, 1}), 1);
    REQUIRE(sq.roots.size() == 1);
    CHECK(sq.roots[0].value.is_one());
    CHECK(sq.roots[0].multiplicity == 2);

    UniPoly p10 = cubic::lehmer_mod2(f);
    RootSet lr = uni_roots(p10, 5);
    CHECK(lr.roots.size() == 10);
    CHECK(brute_roots(p10).size() == 10);
    for (const auto& r : lr.roots) CHECK(f->multiplicative_order(r.value.bits()) == 31);

    // x^2 + x + 1 over GF(2): roots only in GF(4)
    RootSet ext = uni_roots(UniPoly(f2, {1, 1, 1}), 2);
    CHECK(ext.roots.size() == 2);
    CHECK(ext.roots[0].min_degree == 2);
    CHECK(uni_roots(UniPoly(f2, {1, 1, 1}), 1).bound_exceeded);
  }

  TEST_CASE("factorization reproduces its input") {
    Field f = gf2m::gf2(4);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Bits> c(1 + rng() % 12);
      for (auto& x : c) x = rng() % 16;
      c.push_back(1);
      UniPoly p(f, c);
      UniPoly prod = UniPoly::constant(FieldElement::one(f));
      for (const auto& fac : factor(p)) {
        CHECK(is_irreducible(fac.poly));
        prod = prod * pow(fac.poly, static_cast<unsigned>(fac.multiplicity));
      }
      CHECK(prod == p.monic());
    }
  }

  TEST_CASE("linear systems") {
    Field f = gf2m::gf32();
    FieldMatrix id(f, 3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    SolveResult r = linear_solve(id, {4, 5, 6});
    CHECK(r.status == SolveStatus::Unique);
    CHECK(r.particular == std::vector<Bits>{4, 5, 6});
    FieldMatrix two(f, 2, 1);
    two.at(0, 0) = 1;
    two.at(1, 0) = 1;
    CHECK(linear_solve(two, {0, 1}).status == SolveStatus::Inconsistent);
    FieldMatrix wide(f, 1, 2);
    wide.at(0, 0) = 1;
    wide.at(0, 1) = 1;
    SolveResult k = linear_solve(wide, {0});
    CHECK(k.status == SolveStatus::Kernel);
    CHECK(k.kernel.size() == 1);
  }

  TEST_CASE("data file format") {
    DataFile d = parse_data_file(
        "# comment\n"
        "vars: x y z; weights: 1 1 1; field: g^5=g^2+1\n"
        "q = g^3*x^2 + y*z\n"
        "    + z^2\n"
        "p = (g^14 : g^7 : 1)\n");
    CHECK(d.field == gf2m::gf32());
    CHECK(d.poly("q").size() == 3);
    CHECK(d.point("p") == ProjPoint({z(14), z(7), z(0)}));
    CHECK_THROWS_AS(parse_data_file(""), Error);
    CHECK_THROWS_AS(parse_data_file("vars: x; field: g^5=g^2+1\nq = x +\n").poly("q"), Error);
    CHECK(format(P("g^3*x^2 + y*z + z^2")) == "g^3*x^2 + y*z + z^2");
  }

  TEST_CASE("plane common zeros") {
    MultiPoly g = P("x^2*y + g^2*x^2*z + g^19*x*y^2 + g^13*x*z^2 + g^7*y^2*z + g^30*y*z^2");
    auto sing = cubic::plane_singular_points(g, 10);
    REQUIRE(sing.size() == 1);
    CHECK(sing[0] == ProjPoint({z(15), z(28), z(0)}));
  }
}
