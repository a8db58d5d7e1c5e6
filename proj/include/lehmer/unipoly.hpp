#pragma once

// Dense univariate polynomials over a binary field, low degree first.

#include <string>
#include <utility>
#include <vector>

#include "lehmer/gf2m.hpp"

namespace lehmer::poly {

using gf2m::Bits;
using gf2m::Field;
using gf2m::FieldElement;

class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(Field f) : field_(f) {}
  UniPoly(Field f, std::vector<Bits> coeffs);
  UniPoly(Field f, std::initializer_list<Bits> coeffs) : UniPoly(f, std::vector<Bits>(coeffs)) {}

  static UniPoly constant(const FieldElement& c);
  static UniPoly x(Field f) { return UniPoly(f, {0, 1}); }
  // x - r (equivalently x + r)
  static UniPoly linear(const FieldElement& r);
  // Coefficients from GF(2) bits: bit i of mask is the coefficient of x^i.
  static UniPoly from_mask(Field f, Bits mask);

  Field field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  Bits coeff_bits(int i) const noexcept { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  FieldElement coeff(int i) const { return {field_, coeff_bits(i)}; }
  FieldElement lead() const { return coeff(degree()); }
  const std::vector<Bits>& coeffs() const noexcept { return c_; }

  UniPoly monic() const;
  UniPoly derivative() const;
  FieldElement eval(const FieldElement& x) const;
  // Evaluate at a point of an extension field; coefficients are embedded.
  FieldElement eval_in(const FieldElement& x) const;
  // Coefficients embedded into sup.
  UniPoly embed(Field sup) const;
  // Square root of a polynomial with only even exponents.
  UniPoly sqrt() const;
  UniPoly scale(const FieldElement& c) const;
  UniPoly shift(int k) const;  // multiply by x^k

  UniPoly& operator+=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) noexcept {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  void normalize();
  void check(const UniPoly& o) const;

  Field field_ = nullptr;
  std::vector<Bits> c_;
};

// a = q*b + r with deg r < deg b.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
// Throws DivisionNotExact when b does not divide a.
UniPoly divide_exact(const UniPoly& a, const UniPoly& b);
// Monic gcd (zero if both are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& m);
UniPoly pow(const UniPoly& a, unsigned e);
// a^(2^k) mod m
UniPoly frobenius_mod(const UniPoly& a, unsigned k, const UniPoly& m);

std::string format(const UniPoly& p, const std::string& var = "x");

}  // namespace lehmer::poly
