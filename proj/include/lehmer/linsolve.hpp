#pragma once

// Dense linear algebra over a binary field by Gaussian elimination.

#include <cstddef>
#include <vector>

#include "lehmer/gf2m.hpp"

namespace lehmer::poly {

using gf2m::Bits;
using gf2m::Field;
using gf2m::FieldElement;

class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(Field f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Bits& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  Bits at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  FieldElement element(std::size_t i, std::size_t j) const { return {field_, at(i, j)}; }
  void set(std::size_t i, std::size_t j, const FieldElement& x);
  Bits* row(std::size_t i) { return a_.data() + i * cols_; }
  const Bits* row(std::size_t i) const { return a_.data() + i * cols_; }

 private:
  Field field_ = nullptr;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Bits> a_;
};

enum class SolveStatus { Unique, Kernel, Inconsistent };

struct SolveResult {
  SolveStatus status = SolveStatus::Inconsistent;
  std::vector<Bits> particular;           // empty when inconsistent
  std::vector<std::vector<Bits>> kernel;  // basis of the null space
  std::size_t rank = 0;
};

// A x = b. Throws DimensionMismatch.
SolveResult linear_solve(const FieldMatrix& a, const std::vector<Bits>& b);
// Null-space basis of A, one vector per free column, free entry set to 1.
std::vector<std::vector<Bits>> kernel_basis(const FieldMatrix& a);
std::size_t rank(const FieldMatrix& a);

}  // namespace lehmer::poly
