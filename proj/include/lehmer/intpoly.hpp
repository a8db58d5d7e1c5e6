#pragma once

// Exact integer polynomials and matrices (GMP), real-root isolation by Sturm
// sequences, trace polynomials and Salem certification.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "lehmer/roots.hpp"

namespace lehmer::lattice {

using Int = mpz_class;
using Rat = mpq_class;

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);  // low degree first
  static IntPoly from_ints(std::initializer_list<long> coeffs);
  static IntPoly x() { return from_ints({0, 1}); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const Int& coeff(int i) const;
  const Int& lead() const { return c_.back(); }
  const std::vector<Int>& coeffs() const noexcept { return c_; }

  Rat eval(const Rat& x) const;
  IntPoly derivative() const;
  IntPoly reversed() const;  // x^deg p(1/x)
  bool is_reciprocal() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

 private:
  void normalize();
  std::vector<Int> c_;
};

// Quotient by a divisor with leading coefficient +-1; throws DivisionNotExact.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);
// Primitive gcd over Q, positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);
// Composition p(q(x)).
IntPoly compose(const IntPoly& p, const IntPoly& q);
std::string format(const IntPoly& p, const std::string& var = "x");

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  std::vector<Int> column(std::size_t j) const;

  IntMatrix transpose() const;
  Int trace() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend std::vector<Int> operator*(const IntMatrix& a, const std::vector<Int>& v);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

// Faddeev-LeVerrier; monic det(x I - M).
IntPoly char_poly(const IntMatrix& m);
// p(M) by Horner.
IntMatrix eval_matrix(const IntPoly& p, const IntMatrix& m);

IntPoly lehmer_polynomial();

struct Interval {
  Rat lo, hi;
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  double mid_double() const { return mid().get_d(); }
};

// Number of distinct real roots in (a, b].
int sturm_count(const IntPoly& p, const Rat& a, const Rat& b);
int real_root_count(const IntPoly& p);
// Isolating intervals, increasing, each of width <= width; exact roots give
// degenerate intervals. Throws NotSquarefree.
std::vector<Interval> real_roots(const IntPoly& p, const Rat& width);
// Shrink an isolating interval of a simple root of p to the given width.
Interval refine(const IntPoly& p, Interval iv, const Rat& width);
// Sign of p on [lo, hi] by interval Horner, 0 when the range straddles 0.
int interval_sign(const IntPoly& p, const Interval& iv);

// R of degree d with x^d R(x + 1/x) = p(x). Throws NotReciprocal, OddDegree.
IntPoly trace_polynomial(const IntPoly& p);
// x^d R(x + 1/x) for deg R = d.
IntPoly trace_expand(const IntPoly& r);

struct SalemCertificate {
  IntPoly trace;                  // R
  std::vector<Interval> roots;    // all real roots of R, increasing
  int roots_above_two = 0;
  Interval big_root;              // t0 > 2
  Interval salem_number;          // largest real root of p
  std::vector<Interval> inner;    // roots in (-2, 2), positive R' first
  std::vector<int> derivative_signs;  // sign of R' at each inner root
  int positive_derivatives = 0;
};

// Throws NotReciprocal / OddDegree from trace_polynomial and NotSalem.
SalemCertificate salem_certify(const IntPoly& p, const Rat& width = Rat(1, 1000000000));
// sgn u(t_i) forced by signature (1, n-1): -1 where R' > 0, +1 where R' < 0,
// in the order of cert.inner.
std::vector<int> sign_vector_target(const SalemCertificate& cert);

// Interval around the spectral radius when it is a real eigenvalue that
// provably dominates the other eigenvalues in modulus. Throws
// SpectralRadiusNotRealCertified.
Interval dynamical_degree(const IntMatrix& m, const Rat& width);

// Reduction mod 2 and full factorization over GF(2).
poly::UniPoly reduce_mod2(const IntPoly& p);
std::vector<poly::Factor> mod2_reduce_and_factor(const IntPoly& p);

std::string format(const Rat& q);

}  // namespace lehmer::lattice
