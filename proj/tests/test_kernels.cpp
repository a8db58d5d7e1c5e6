#include <doctest.h>

#include <random>

#include "lehmer/gf2m.hpp"

using namespace lehmer;
using kernels::Bits;

TEST_SUITE("kernels") {
  TEST_CASE("every supported ISA matches the scalar reference") {
    const auto& ref = kernels::scalar_table();
    std::mt19937_64 rng(11);
    for (int m : {2, 5, 10, 16, 23, 31, 32}) {
      gf2m::Field f = gf2m::gf2(m);
      const auto& red = f->reducer();
      Bits mask = f->size() - 1;
      for (kernels::Isa isa : kernels::supported_isas()) {
        CAPTURE(m);
        CAPTURE(kernels::table_for(isa).name);
        const auto& t = kernels::table_for(isa);
        for (std::size_t n : {0u, 1u, 2u, 3u, 7u, 64u, 129u}) {
          std::vector<Bits> a(n), b(n), y1(n), y2(n), o1(n), o2(n);
          for (std::size_t i = 0; i < n; ++i) {
            a[i] = rng() & mask;
            b[i] = rng() & mask;
            y1[i] = y2[i] = rng() & mask;
          }
          CHECK(t.dot(red, a.data(), b.data(), n) == ref.dot(red, a.data(), b.data(), n));
          Bits c = rng() & mask;
          t.axpy(red, c, a.data(), y1.data(), n);
          ref.axpy(red, c, a.data(), y2.data(), n);
          CHECK(y1 == y2);
          t.mul_many(red, a.data(), b.data(), o1.data(), n);
          ref.mul_many(red, a.data(), b.data(), o2.data(), n);
          CHECK(o1 == o2);
          for (std::size_t i = 0; i < n; ++i) CHECK(o2[i] == f->mul(a[i], b[i]));
        }
      }
    }
  }

  TEST_CASE("forcing an ISA") {
    for (kernels::Isa isa : kernels::supported_isas()) {
      kernels::force_isa(isa);
      CHECK(kernels::active().isa == isa);
    }
    kernels::force_isa(kernels::supported_isas().back());
  }
}
