#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "lehmer/polytext.hpp"
#include "lehmer/resultant.hpp"
#include "lehmer/surface.hpp"

using namespace lehmer;
using namespace lehmer::surface;

namespace fs = std::filesystem;

namespace {

const SurfaceModel& model() {
  static const SurfaceModel m = load_model(LEHMER_DATA_DIR);
  return m;
}

FieldElement z(int k) { return FieldElement::gen(gf2m::gf32(), k); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch_copy(const std::string& tag) {
  fs::path dir = fs::temp_directory_path() / ("lehmer-" + tag + "-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  for (const char* f : {"surface.poly", "automorphism.poly", "points.dat"})
    fs::copy_file(fs::path(LEHMER_DATA_DIR) / f, dir / f, fs::copy_options::overwrite_existing);
  return dir;
}

MultiPoly with_coefficient(const MultiPoly& p, std::size_t term, gf2m::Bits c) {
  std::vector<poly::Term> t = p.terms();
  t[term].coeff = c;
  return MultiPoly::from_terms(p.field(), p.nvars(), t);
}

}  // namespace

TEST_SUITE("surface") {
  TEST_CASE("bundled model") {
    const SurfaceModel& m = model();
    // Oracle: count the summands of the stored text directly.
    poly::DataFile d = poly::load_data_file(fs::path(LEHMER_DATA_DIR) / "surface.poly");
    const std::string& raw = d.raw("s");
    CHECK(std::count(raw.begin(), raw.end(), '+') + 1 == 42);
    CHECK(m.s.size() == 42);
    CHECK(m.points[0] == poly::ProjPoint({z(14), z(7), z(0)}));
    CHECK(m.cusp == poly::ProjPoint({z(15), z(28), z(0)}));
  }

  TEST_CASE("load errors") {
    fs::path dir = scratch_copy("empty");
    std::ofstream(dir / "surface.poly").close();
    try {
      load_model(dir);
      FAIL("empty file accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
    }

    // one coefficient of g altered: g(p_i) != 0 for some i
    std::string text = slurp(fs::path(LEHMER_DATA_DIR) / "surface.poly");
    auto at = text.find("g = x^2*y + g^2*x^2*z");
    REQUIRE(at != std::string::npos);
    text.replace(at, 21, "g = x^2*y + g^3*x^2*z");
    std::ofstream(dir / "surface.poly") << text;
    try {
      load_model(dir);
      FAIL("altered cubic accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvariantViolation);
    }
    fs::remove_all(dir);
  }

  TEST_CASE("orbit") {
    const SurfaceModel& m = model();
    std::vector<MultiPoly> f(m.f.begin(), m.f.end());
    CHECK(poly::apply_map(f, poly::ProjPoint({z(29), z(6), z(0)})) == poly::ProjPoint({z(18), z(11), z(0)}));
    auto p1 = poly::apply_map(f, poly::ProjPoint({z(23), z(29), z(0)}));
    REQUIRE(p1.has_value());
    CHECK(p1->coords()[0].is_zero());
    CHECK(p1->coords()[1].is_zero());
    CHECK(poly::apply_map(f, m.points[0]) == m.points[0]);
    CHECK(verify_orbit(m).passed());
  }

  TEST_CASE("cubic, equivariance and sigma(g)") {
    const SurfaceModel& m = model();
    CHECK(verify_cubic(m).passed());
    CHECK(verify_equivariance(m).passed());
    std::vector<MultiPoly> f(m.f.begin(), m.f.end());
    std::vector<std::string> xyz{"x", "y", "z"};
    MultiPoly xyz_g = poly::parse_poly("g^12*x*y*z", m.field, xyz) * m.g;
    CHECK(poly::substitute(m.g, f) == xyz_g);
  }

  TEST_CASE("resultant of the chart partials") {
    const SurfaceModel& m = model();
    MultiPoly s1 = poly::dehomogenize(m.s.remap(3, std::vector<int>{0, 1, 2}), 2);
    MultiPoly sx = poly::partial(s1, 0), sy = poly::partial(s1, 1);
    MultiPoly r = poly::resultant(sx, sy, 1);
    CHECK(r.degree_in(1) == 0);
    for (int i : {4, 5, 6, 7, 8, 9, 10, 0}) {
      std::vector<FieldElement> pt = m.points[i].affine(2);
      CAPTURE(i);
      // both partials vanish at the point, so the x-coordinate is a root
      CHECK(sx.evaluate(pt).is_zero());
      CHECK(sy.evaluate(pt).is_zero());
      std::vector<FieldElement> xonly{pt[0], FieldElement::zero(m.field)};
      CHECK(r.evaluate(xonly).is_zero());
    }
  }

  TEST_CASE("sigma inverse and derivation") {
    const SurfaceModel& m = model();
    SigmaInverse inv = derive_sigma_inverse(m);
    CHECK(inv.unknowns == inv.equations);
    CHECK(inv.eta_prime.size() == 40);
    std::vector<std::string> xyz{"x", "y", "z"};
    CHECK(inv.forward_factor == poly::parse_poly("x*y*z", m.field, xyz));
    DerivationCheck d = verify_derivation(m, inv);
    CHECK(d.report.passed());
    CHECK(d.lambda1 == z(8));
    AlphaCheck a = verify_alpha_consistency(m, d.lambda1);
    CHECK(a.report.passed());
    CHECK(a.alpha == z(19));
  }

  TEST_CASE("singular locus") {
    const SurfaceModel& m = model();
    SingularLocus loc = singular_locus(m);
    CHECK(loc.report.passed());
    REQUIRE(loc.points.size() == 11);
    for (const auto& p : m.points) CHECK(std::find(loc.points.begin(), loc.points.end(), p) != loc.points.end());
    // Oracle over GF(32) itself: w^2 = s is singular exactly where the three
    // partials of s vanish; brute force every chart.
    std::vector<MultiPoly> grad;
    for (int v = 0; v < 3; ++v) grad.push_back(poly::partial(m.s, v));
    int found = 0;
    for (int chart = 0; chart < 3; ++chart)
      for (gf2m::Bits a = 0; a < 32; ++a)
        for (gf2m::Bits b = 0; b < 32; ++b) {
          std::vector<FieldElement> c(3, FieldElement::zero(m.field));
          c[chart] = FieldElement::one(m.field);
          // points with a later nonzero coordinate belong to a later chart
          int k = 0;
          bool skip = false;
          for (int i = 0; i < 3; ++i) {
            if (i == chart) continue;
            FieldElement e(m.field, k++ == 0 ? a : b);
            if (i > chart && !e.is_zero()) skip = true;
            c[i] = e;
          }
          if (skip) continue;
          bool sing = std::all_of(grad.begin(), grad.end(), [&](const MultiPoly& g) { return g.evaluate(c).is_zero(); });
          found += sing;
        }
    CHECK(found == 11);
  }

  TEST_CASE("multiplicities") {
    const SurfaceModel& m = model();
    for (int i = 1; i <= 10; ++i) CHECK(multiplicity_mod_squares(m.s, m.points[i]) == 4);
    CHECK(multiplicity_mod_squares(m.s, m.points[0]) == 2);
    CHECK(verify_multiplicities(m).passed());
    CHECK(verify_chart_smoothness(m).passed());
  }

  TEST_CASE("single-coefficient mutations are detected") {
    const SurfaceModel& base = model();
    std::mt19937 rng(20241018);
    int detected = 0;
    for (int trial = 0; trial < 50; ++trial) {
      SurfaceModel m = base;
      int which = static_cast<int>(rng() % 5);
      MultiPoly* target = which == 0 ? &m.s : which == 1 ? &m.eta : &m.f[static_cast<std::size_t>(which - 2)];
      std::size_t term = rng() % target->size();
      gf2m::Bits old = target->terms()[term].coeff;
      gf2m::Bits c = old;
      while (c == old) c = rng() % 32;  // 0 drops the term
      *target = with_coefficient(*target, term, c);
      bool caught = !verify_equivariance(m).passed() || !verify_orbit(m).passed() || !verify_cubic(m).passed();
      CAPTURE(trial);
      CHECK(caught);
      detected += caught;
    }
    CHECK(detected == 50);
  }
}
