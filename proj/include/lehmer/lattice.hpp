#pragma once

// The lattice Z^{1,10} = <H, E_1..E_10>, its sublattice E10 = K^perp, the
// Coxeter element and the mod-2 quadratic space E10/2E10.

#include <cstdint>
#include <filesystem>
#include <vector>

#include "lehmer/intpoly.hpp"

namespace lehmer::lattice {

// diag(1, -1, ..., -1) on H, E_1..E_10.
IntMatrix gram_z110();
// K = -3H + sum E_i
std::vector<Int> canonical_class();
// Columns are the images of H, E_1, ..., E_10.
IntMatrix coxeter_matrix();

// Rows are vectors of K^perp in the coordinates (H, E_1..E_10):
// E_i - E_{i+1} (i = 1..9) and H - E_1 - E_2 - E_3.
IntMatrix default_e10_basis();
// Same format as data/e10_basis.dat: one row of 11 integers per line.
IntMatrix load_e10_basis(const std::filesystem::path& path);
// B^T G B for the basis rows B.
IntMatrix gram_on(const IntMatrix& basis_rows, const IntMatrix& gram);
// A with M B^T = B^T A; throws NotPreserved when the span is not invariant
// or the action is not integral.
IntMatrix restrict_to(const IntMatrix& m, const IntMatrix& basis_rows);
// Coordinates of v in the basis; throws NoSolution when v is outside the
// integral span.
std::vector<Int> coordinates(const std::vector<Int>& v, const IntMatrix& basis_rows);
// Cartan matrix of E8 (positive definite, diagonal 2).
IntMatrix e8_gram();
// 10H - 3 sum E_i: in K^perp with norm 10.
std::vector<Int> reference_positive_vector();

// M^T G M == G
bool preserves(const IntMatrix& m, const IntMatrix& gram);

struct ParityWitness {
  bool even = false;
  std::vector<Int> diagonal;
};
// Even iff every diagonal entry of the Gram matrix is even; then all norms
// are even and the scaled lattice L(2) has all norms divisible by 4.
ParityWitness parity_check(const IntMatrix& gram);

// Reflection in a vector r of norm -2 or 2 in basis coordinates.
IntMatrix reflection(const std::vector<Int>& r, const IntMatrix& gram);

// True iff M is an isometry, M = I mod 2 and M keeps the positive cone,
// tested on the reference vector v0 (given in basis coordinates):
// (M v0) . v0 > 0. Throws NotIsometry.
bool weyl2_membership(const IntMatrix& m, const IntMatrix& gram, const std::vector<Int>& v0);

// ---- mod 2 ----

using Mask = std::uint32_t;  // vectors of F_2^n, bit i = coordinate i

// Square matrix over F_2 stored by columns.
struct Mat2 {
  int n = 0;
  std::vector<Mask> cols;
  Mask apply(Mask v) const;
  static Mat2 identity(int n);
  friend Mat2 operator*(const Mat2& a, const Mat2& b);
  friend bool operator==(const Mat2& a, const Mat2& b) { return a.n == b.n && a.cols == b.cols; }
};
Mat2 reduce_mod2(const IntMatrix& m);

class Mod2QuadSpace {
 public:
  // q(v) = v.G.v / 2 mod 2; needs an even Gram matrix. Throws WrongDimension
  // for odd lattices.
  explicit Mod2QuadSpace(const IntMatrix& even_gram);

  int dim() const noexcept { return n_; }
  int q(Mask v) const noexcept;
  int b(Mask u, Mask v) const noexcept;
  // Number of singular vectors including 0; 2^(2k-1) + 2^(k-1) for plus type.
  std::uint64_t singular_count() const;
  // 0 for plus type, 1 for minus type (needs b nondegenerate).
  int arf() const;
  bool nondegenerate() const;
  bool totally_singular(const std::vector<Mask>& span_basis) const;

 private:
  int n_;
  std::vector<int> qdiag_;
  std::vector<Mask> brows_;
};

// Basis of a subspace in reduced echelon form keyed on the highest bit.
struct Subspace {
  std::vector<Mask> rows;  // pivots strictly decreasing
  int dim() const { return static_cast<int>(rows.size()); }
  bool contains(Mask v) const;
  std::vector<Mask> elements() const;
  friend bool operator==(const Subspace& a, const Subspace& b) { return a.rows == b.rows; }
  friend bool operator<(const Subspace& a, const Subspace& b) { return a.rows < b.rows; }
};
Subspace span(const std::vector<Mask>& vectors);
int intersection_dim(const Subspace& a, const Subspace& b);
bool invariant(const Subspace& s, const Mat2& t);
// Kernel of a mod-2 matrix.
Subspace kernel(const Mat2& m);

struct LagrangianCensus {
  std::vector<Subspace> all;        // canonically sorted
  std::vector<int> klass;           // 0 or 1 per member; member 0 is class 0
  std::size_t class_sizes[2] = {0, 0};
  std::vector<std::size_t> invariant_members;  // indices, when an isometry is given
  std::size_t duplicates_rejected = 0;
};

// Throws WrongDimension unless the space is 10-dimensional.
LagrangianCensus enumerate_lagrangians(const Mod2QuadSpace& space, const Mat2* isometry = nullptr);

struct InvariantSubspace {
  poly::UniPoly factor;  // irreducible over GF(2)
  int multiplicity = 1;
  Subspace kernel;        // ker factor(T)^multiplicity
  bool totally_isotropic = false;
  std::size_t nonzero_checked = 0;
};

struct Mod2Action {
  std::uint64_t order = 0;
  IntPoly char_poly;
  std::vector<InvariantSubspace> subspaces;
};

// M acts on E10 in basis coordinates; throws NotIsometry.
Mod2Action mod2_action_analysis(const IntMatrix& m, const IntMatrix& gram);

}  // namespace lehmer::lattice
