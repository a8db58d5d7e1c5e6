#pragma once

// Sparse multivariate polynomials over a binary field.
//
// Up to four variables; an exponent vector is packed into one 64-bit word
// with 16 bits per variable, variable 0 in the most significant lane, so
// comparing packed words is lexicographic order with x > y > z > w. Terms are
// kept sorted in descending graded-lex order with no zero coefficients.

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lehmer/gf2m.hpp"
#include "lehmer/unipoly.hpp"

namespace lehmer::poly {

inline constexpr int kMaxVars = 4;

using Monomial = std::uint64_t;

constexpr int mono_exp(Monomial m, int var) noexcept {
  return static_cast<int>((m >> (16 * (kMaxVars - 1 - var))) & 0xffff);
}
constexpr Monomial mono_unit(int var, int e = 1) noexcept {
  return static_cast<Monomial>(e) << (16 * (kMaxVars - 1 - var));
}
Monomial mono_make(std::span<const int> exps);
int mono_degree(Monomial m) noexcept;
bool mono_divides(Monomial a, Monomial b) noexcept;  // a | b

struct Term {
  Monomial mono;
  Bits coeff;
};

class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(Field f, int nvars);

  static MultiPoly constant(const FieldElement& c, int nvars);
  static MultiPoly variable(Field f, int nvars, int var);
  static MultiPoly monomial(const FieldElement& c, int nvars, std::span<const int> exps);
  // Builds from unsorted terms, combining duplicates.
  static MultiPoly from_terms(Field f, int nvars, std::vector<Term> terms);

  Field field() const noexcept { return field_; }
  int nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  FieldElement coeff(Monomial m) const;
  // Leading term in graded-lex order.
  const Term& lead() const;

  int total_degree() const noexcept;
  int degree_in(int var) const noexcept;
  // Minimal total degree over all terms (-1 for zero).
  int min_total_degree() const noexcept;
  // Terms of exactly this total degree.
  MultiPoly homogeneous_part(int degree) const;
  // Weighted degree if every term has the same one, else -1.
  int weighted_homogeneous_degree(std::span<const int> weights) const;

  MultiPoly& operator+=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scale(const FieldElement& c) const;
  MultiPoly mul_monomial(Monomial m) const;
  MultiPoly pow(unsigned e) const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) noexcept {
    return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_.size() == b.terms_.size() &&
           std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                      [](const Term& s, const Term& t) { return s.mono == t.mono && s.coeff == t.coeff; });
  }

  // Coefficients embedded into an extension field.
  MultiPoly embed(Field sup) const;
  // Value at a point; the point may lie in an extension of field().
  FieldElement evaluate(std::span<const FieldElement> point) const;
  // Coefficient of var^k as a polynomial in the same ring (var absent).
  MultiPoly coeff_in(int var, int k) const;
  // Replace var by a constant.
  MultiPoly specialize(int var, const FieldElement& value) const;
  // Polynomial in one remaining variable after all others are set; the result
  // lives in the field of the values. `keep` names the surviving variable.
  UniPoly to_univariate(int keep, std::span<const FieldElement> values) const;
  // Same polynomial with variables renumbered into a ring of new_nvars
  // variables: old variable i becomes new variable mapping[i].
  MultiPoly remap(int new_nvars, std::span<const int> mapping) const;

 private:
  void check(const MultiPoly& o) const;

  Field field_ = nullptr;
  int nvars_ = 0;
  std::vector<Term> terms_;
};

// p(map_0, ..., map_{n-1}); all maps share one ring.
MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> map);
MultiPoly partial(const MultiPoly& p, int var);
// p(x + pt), coefficients in the field of pt.
MultiPoly translate(const MultiPoly& p, std::span<const FieldElement> pt);
// Lowest total degree of the Taylor expansion at pt; 0 when p(pt) != 0.
int multiplicity_at(const MultiPoly& p, std::span<const FieldElement> pt);
// Throws DivisionNotExact.
MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);
// Affine chart var = 1 of a polynomial; the remaining variables keep their
// order.
MultiPoly dehomogenize(const MultiPoly& p, int var);

// Exact division by var^k.
MultiPoly divide_by_var_power(const MultiPoly& a, int var, int k);

// Variable names default to x, y, z, w.
std::string format(const MultiPoly& p, std::span<const std::string> names = {});

}  // namespace lehmer::poly
