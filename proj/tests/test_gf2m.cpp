#include <doctest.h>

#include <random>

#include "lehmer/gf2m.hpp"

using namespace lehmer;
using namespace lehmer::gf2m;

namespace {

// Schoolbook product in GF(2)[t] followed by long division; shares no code
// with the field's own multiplier.
Bits slow_mul(Bits a, Bits b, Bits modulus, int m) {
  Bits r = 0;
  for (int i = 0; i < 64; ++i)
    if ((b >> i) & 1) r ^= a << i;
  for (int d = 2 * m - 2; d >= m; --d)
    if ((r >> d) & 1) r ^= modulus << (d - m);
  return r;
}

}  // namespace

TEST_SUITE("gf2m") {
  TEST_CASE("field contexts") {
    Field f = field_make(5, 0b100101);
    CHECK(f->generator_check());
    CHECK(f->size() == 32);
    CHECK(f == gf32());
    CHECK(f == field_make(5, 0b100101));

    Field f2 = field_make(1, 0b11);
    CHECK(f2->size() == 2);
    CHECK(gf2(1) == f2);

    try {
      field_make(4, 0b10101);
      FAIL("reducible modulus accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ReducibleModulus);
    }
    // t^4 + t^2 + 1 = (t^2 + t + 1)^2
    CHECK(slow_mul(0b111, 0b111, 0, 0) == 0b10101);
    CHECK_THROWS_AS(field_make(3, 0b10011), Error);
  }

  TEST_CASE("arithmetic in GF(32)") {
    Field f = gf32();
    auto z = [&](int k) { return FieldElement::gen(f, k); };
    CHECK(z(5) + z(2) == FieldElement::one(f));
    CHECK(field_arith(ArithOp::Add, z(5), z(2)).is_one());
    CHECK(z(16) * z(20) == z(5));
    CHECK(field_arith(ArithOp::Mul, z(16), z(20)) == z(5));
    CHECK(z(31).is_one());
    CHECK(z(-1) == z(30));
    for (Bits a = 0; a < 32; ++a) {
      FieldElement x(f, a);
      CHECK((x + x).is_zero());
      if (a != 0) {
        CHECK((x * x.inv()).is_one());
        CHECK(field_arith(ArithOp::Pow, x, {}, 31).is_one());
      }
      CHECK(x.sqrt() * x.sqrt() == x);
    }
    CHECK_THROWS_AS(FieldElement::zero(f).inv(), Error);
  }

  TEST_CASE("multiplication agrees with schoolbook reduction") {
    std::mt19937_64 rng(7);
    for (int m : {1, 5, 8, 10, 13, 20, 25, 32}) {
      Field f = gf2(m);
      Bits mask = f->size() - 1;
      for (int i = 0; i < 200; ++i) {
        Bits a = rng() & mask, b = rng() & mask;
        CHECK(f->mul(a, b) == slow_mul(a, b, f->modulus(), m));
      }
    }
  }

  TEST_CASE("dlog") {
    Field f = gf32();
    CHECK(dlog(FieldElement::one(f)) == 0);
    CHECK(dlog(FieldElement::gen(f, 2) + FieldElement::one(f)) == 5);
    try {
      dlog(FieldElement::zero(f));
      FAIL("dlog(0)");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::LogOfZero);
    }
    // beyond the table size the baby-step giant-step path is used
    Field big = gf2(27);
    if (big->generator_check()) {
      FieldElement x = FieldElement::gen(big, 123456789);
      CHECK(dlog(x) == 123456789u % big->group_order());
    }
  }

  TEST_CASE("embedding and frobenius") {
    Field f = gf32();
    Field e = gf2(10);
    FieldElement z = FieldElement::gen(f);
    CHECK(embed(FieldElement::zero(f), e).is_zero());
    FieldElement ez = embed(z, e);
    CHECK(ez.pow(31).is_one());
    CHECK(!ez.is_one());
    for (int k = 0; k < 31; ++k)
      for (int l = 0; l < 31; l += 7) {
        FieldElement a = FieldElement::gen(f, k), b = FieldElement::gen(f, l);
        CHECK(embed(a * b, e) == embed(a, e) * embed(b, e));
        CHECK(embed(a + b, e) == embed(a, e) + embed(b, e));
      }
    CHECK(restrict_to(ez, f) == z);
    CHECK(minimal_degree(ez) == 5);
    CHECK(frobenius(z, 5) == z);
    CHECK(frobenius(z, 1) == z * z);
  }

  TEST_CASE("text format") {
    Field f = gf32();
    CHECK(format(FieldElement::gen(f, 14)) == "g^14");
    CHECK(format(FieldElement::one(f)) == "1");
    CHECK(format(FieldElement::zero(f)) == "0");
    CHECK(parse_element("g^30", f) == FieldElement::gen(f, 30));
    CHECK(format_field_header(f) == "g^5=g^2+1");
    CHECK(parse_field_header("g^5=g^2+1") == f);
  }
}
