#pragma once

// Elements of the function field k(x, y, z)[w] / (w^2 - s) of a double plane,
// kept as num / den with den free of w and num of degree <= 1 in w.

#include <optional>
#include <span>

#include "lehmer/multipoly.hpp"

namespace lehmer::poly {

class DoublePlane {
 public:
  // s in the variables x, y, z, w (w absent); w is variable 3.
  explicit DoublePlane(MultiPoly s);

  const MultiPoly& s() const noexcept { return s_; }
  // Rewrites w^2 -> s until the w-degree is at most 1.
  MultiPoly reduce(const MultiPoly& p) const;

 private:
  MultiPoly s_;
};

class RationalFunction {
 public:
  // Throws DivisionByZero for a zero denominator and InvariantViolation when
  // the denominator involves w.
  RationalFunction(const DoublePlane& plane, MultiPoly num, MultiPoly den);

  const MultiPoly& num() const noexcept { return num_; }
  const MultiPoly& den() const noexcept { return den_; }

  // Pullback along x_i -> map[i]; the images of x, y, z must be free of w.
  RationalFunction pullback(std::span<const MultiPoly> map) const;
  // D = h * d/dw.
  RationalFunction derive_w(const MultiPoly& h) const;
  RationalFunction scale(const FieldElement& c) const;

  bool is_zero() const noexcept { return num_.is_zero(); }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);
  // c with a = c * b, when one exists.
  friend std::optional<FieldElement> constant_ratio(const RationalFunction& a, const RationalFunction& b);

 private:
  const DoublePlane* plane_;
  MultiPoly num_, den_;
};

}  // namespace lehmer::poly
