#include <doctest.h>

#include "lehmer/lattice.hpp"

using namespace lehmer;
using namespace lehmer::lattice;

namespace {

// Fraction-free (Bareiss) determinant; used to evaluate det(k I - M) at
// integer points as an oracle for the characteristic polynomial.
Int bareiss_det(IntMatrix a) {
  std::size_t n = a.rows();
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a.at(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

void check_char_poly_by_evaluation(const IntMatrix& m) {
  IntPoly p = char_poly(m);
  CHECK(p.degree() == static_cast<int>(m.rows()));
  for (long k = -6; k <= 6; ++k) {
    IntMatrix a = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) a.at(i, j) = (i == j ? Int(k) : Int(0)) - m.at(i, j);
    CHECK(p.eval(Rat(k)) == Rat(bareiss_det(a)));
  }
}

IntMatrix e10_restriction() { return restrict_to(coxeter_matrix(), default_e10_basis()); }
IntMatrix e10_gram() { return gram_on(default_e10_basis(), gram_z110()); }

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("coxeter element") {
    IntMatrix w = coxeter_matrix();
    std::vector<Int> e4(11, 0), e5(11, 0);
    e4[4] = 1;
    e5[5] = 1;
    CHECK(w * e4 == e5);
    CHECK(w * canonical_class() == canonical_class());
    CHECK(w.transpose() * gram_z110() * w == gram_z110());
    CHECK(char_poly(e10_restriction()) == lehmer_polynomial());
    CHECK(char_poly(w) == (IntPoly::x() - IntPoly::from_ints({1})) * lehmer_polynomial());
    check_char_poly_by_evaluation(w);
    check_char_poly_by_evaluation(e10_restriction());
    IntPoly cube = IntPoly::x() - IntPoly::from_ints({1});
    CHECK(char_poly(IntMatrix::identity(3)) == cube * cube * cube);
  }

  TEST_CASE("stored E10 basis") {
    IntMatrix b = load_e10_basis(LEHMER_DATA_DIR "/e10_basis.dat");
    CHECK(b.rows() == 10);
    CHECK(char_poly(restrict_to(coxeter_matrix(), b)) == lehmer_polynomial());
    // unimodular of signature (1, 9)
    CHECK(char_poly(gram_on(b, gram_z110())).coeff(0) == -1);
  }

  TEST_CASE("real roots") {
    Rat eps(1, 1000000);
    auto r = real_roots(lehmer_polynomial(), eps);
    REQUIRE(r.size() == 2);
    CHECK(std::abs(r[0].mid_double() - 0.85014) < 1e-5);
    CHECK(std::abs(r[1].mid_double() - 1.17628) < 1e-5);
    for (const auto& iv : r) {
      CHECK(iv.width() <= eps);
      Rat a = lehmer_polynomial().eval(iv.lo), b = lehmer_polynomial().eval(iv.hi);
      CHECK(a * b <= 0);
    }
    auto s = real_roots(IntPoly::from_ints({-2, 0, 1}), eps);
    REQUIRE(s.size() == 2);
    CHECK(std::abs(s[0].mid_double() + 1.414214) < 1e-6);
    CHECK(std::abs(s[1].mid_double() - 1.414214) < 1e-6);
    CHECK(real_roots(IntPoly::from_ints({1, 0, 1}), eps).empty());
  }

  TEST_CASE("dynamical degree") {
    Rat eps(1, 1000000000);
    Interval iv = dynamical_degree(coxeter_matrix(), eps);
    CHECK(iv.width() <= eps);
    CHECK(std::abs(iv.mid_double() - 1.176280818) < 1e-9);
    CHECK(dynamical_degree(IntMatrix::identity(4), eps).contains(1));
    CHECK(dynamical_degree(IntMatrix::from_rows({{2, 0}, {0, 1}}), eps).contains(2));
    // rotation by 90 degrees: the spectral radius is not a real eigenvalue
    try {
      dynamical_degree(IntMatrix::from_rows({{0, -1}, {1, 0}}), eps);
      FAIL("rotation certified");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SpectralRadiusNotRealCertified);
    }
  }

  TEST_CASE("trace polynomials and Salem certificates") {
    CHECK(trace_polynomial(IntPoly::from_ints({1, 0, 1})) == IntPoly::x());
    CHECK(trace_polynomial(IntPoly::from_ints({1, -3, 1})) == IntPoly::from_ints({-3, 1}));
    IntPoly r10 = trace_polynomial(lehmer_polynomial());
    CHECK(r10 == IntPoly::from_ints({3, 4, -5, -5, 1, 1}));
    CHECK(trace_expand(r10) == lehmer_polynomial());
    CHECK_THROWS_AS(trace_polynomial(IntPoly::from_ints({1, 2, 3})), Error);

    SalemCertificate c = salem_certify(lehmer_polynomial());
    CHECK(c.roots.size() == 5);
    CHECK(c.roots_above_two == 1);
    CHECK(c.positive_derivatives == 2);
    CHECK(std::abs(c.big_root.mid_double() - 2.02642) < 1e-5);
    CHECK(sign_vector_target(c) == std::vector<int>{-1, -1, 1, 1});
    // R' sign at each inner root, recomputed from the interval endpoints
    for (std::size_t i = 0; i < c.inner.size(); ++i) {
      Rat d = r10.derivative().eval(c.inner[i].mid());
      CHECK((d > 0 ? 1 : -1) == c.derivative_signs[i]);
    }
    try {
      salem_certify(IntPoly::from_ints({1, 1, 1}));
      FAIL("cyclotomic certified");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotSalem);
    }
  }

  TEST_CASE("mod 2 factorization") {
    auto f = mod2_reduce_and_factor(lehmer_polynomial());
    REQUIRE(f.size() == 2);
    CHECK(poly::format(f[0].poly) == "x^5 + x^3 + x^2 + x + 1");
    CHECK(poly::format(f[1].poly) == "x^5 + x^4 + x^3 + x^2 + 1");
    // the product of the factors is the reduction
    CHECK(f[0].poly * f[1].poly == reduce_mod2(lehmer_polynomial()));
    auto sq = mod2_reduce_and_factor(IntPoly::from_ints({-1, 0, 1}));
    REQUIRE(sq.size() == 1);
    CHECK(poly::format(sq[0].poly) == "x + 1");
    CHECK(sq[0].multiplicity == 2);
    auto lin = mod2_reduce_and_factor(IntPoly::from_ints({-1, 1}));
    REQUIRE(lin.size() == 1);
    CHECK(lin[0].multiplicity == 1);
  }

  TEST_CASE("mod 2 action") {
    Mod2Action a = mod2_action_analysis(e10_restriction(), e10_gram());
    CHECK(a.order == 31);
    // Oracle: T^31 = I and T != I mod 2, computed by repeated products.
    Mat2 t = reduce_mod2(e10_restriction()), p = Mat2::identity(10);
    for (int i = 0; i < 31; ++i) p = p * t;
    CHECK(p == Mat2::identity(10));
    CHECK(!(t == Mat2::identity(10)));
    for (const auto& s : a.subspaces) {
      CHECK(s.kernel.dim() == 5);
      CHECK(s.totally_isotropic);
      CHECK(invariant(s.kernel, t));
    }
    Mod2Action id = mod2_action_analysis(IntMatrix::identity(10), e10_gram());
    CHECK(id.order == 1);
    REQUIRE(id.subspaces.size() == 1);
    CHECK(id.subspaces[0].kernel.dim() == 10);
  }

  TEST_CASE("quadratic space and Lagrangians") {
    Mod2QuadSpace q(e10_gram());
    CHECK(q.nondegenerate());
    // Oracle: direct count of v with q(v) = 0.
    std::uint64_t zeros = 0;
    for (Mask v = 0; v < 1024; ++v) zeros += q.q(v) == 0;
    CHECK(zeros == 528);
    CHECK(q.singular_count() == 528);
    CHECK(q.arf() == 0);
    CHECK_THROWS_AS(Mod2QuadSpace{gram_z110()}, Error);

    Mat2 t = reduce_mod2(e10_restriction());
    LagrangianCensus c = enumerate_lagrangians(q, &t);
    // 2 (2 + 1)(2^2 + 1)(2^3 + 1)(2^4 + 1)
    CHECK(c.all.size() == 2u * 3 * 5 * 9 * 17);
    CHECK(c.class_sizes[0] == 2295);
    CHECK(c.class_sizes[1] == 2295);
    REQUIRE(c.invariant_members.size() == 2);
    CHECK(c.klass[c.invariant_members[0]] != c.klass[c.invariant_members[1]]);
    // same class iff 5 - dim(A cap B) is even
    for (std::size_t i = 1; i < c.all.size(); i += 97)
      CHECK(((5 - intersection_dim(c.all[0], c.all[i])) % 2 == 0) == (c.klass[i] == 0));
    for (std::size_t i = 0; i < c.all.size(); i += 211) CHECK(q.totally_singular(c.all[i].rows));
  }

  TEST_CASE("parity and W(2)") {
    CHECK(parity_check(e10_gram()).even);
    CHECK(!parity_check(gram_z110()).even);
    CHECK(parity_check(e8_gram()).even);
    IntMatrix g = e10_gram();
    auto v0 = coordinates(reference_positive_vector(), default_e10_basis());
    CHECK(weyl2_membership(IntMatrix::identity(10), g, v0));
    CHECK(!weyl2_membership(e10_restriction(), g, v0));
    std::vector<Int> r(10, 0);
    r[0] = 1;
    IntMatrix s = reflection(r, g);
    CHECK(preserves(s, g));
    CHECK(!weyl2_membership(s, g, v0));
    // the square of the reflection is the identity, which does lie in W(2)
    CHECK(weyl2_membership(s * s, g, v0));
  }
}
