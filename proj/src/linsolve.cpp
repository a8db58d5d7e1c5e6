#include "lehmer/linsolve.hpp"

namespace lehmer::poly {

namespace {

// Reduced row-echelon form of the augmented matrix in place; returns the
// pivot column of each pivot row.
std::vector<std::size_t> rref(Field f, std::vector<std::vector<Bits>>& m, std::size_t ncols) {
  const auto& red = f->reducer();
  const auto& kt = kernels::active();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Bits inv = f->inv(m[r][c]);
    for (auto& x : m[r]) x = f->mul(x, inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      kt.axpy(red, m[i][c], m[r].data(), m[i].data(), m[r].size());
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

void FieldMatrix::set(std::size_t i, std::size_t j, const FieldElement& x) {
  if (x.field() != field_) throw Error(ErrorKind::ContextMismatch, "matrix entry from another field");
  at(i, j) = x.bits();
}

SolveResult linear_solve(const FieldMatrix& a, const std::vector<Bits>& b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "right side length differs from row count");
  const std::size_t n = a.cols();
  std::vector<std::vector<Bits>> m(a.rows(), std::vector<Bits>(n + 1));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::copy(a.row(i), a.row(i) + n, m[i].begin());
    m[i][n] = b[i];
  }
  auto pivots = rref(a.field(), m, n + 1);
  SolveResult res;
  if (!pivots.empty() && pivots.back() == n) {
    res.rank = pivots.size() - 1;
    res.status = SolveStatus::Inconsistent;
    return res;
  }
  res.rank = pivots.size();
  res.particular.assign(n, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) res.particular[pivots[r]] = m[r][n];
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Bits> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = m[r][free];  // -x = x
    res.kernel.push_back(std::move(v));
  }
  res.status = res.kernel.empty() ? SolveStatus::Unique : SolveStatus::Kernel;
  return res;
}

std::vector<std::vector<Bits>> kernel_basis(const FieldMatrix& a) {
  return linear_solve(a, std::vector<Bits>(a.rows(), 0)).kernel;
}

std::size_t rank(const FieldMatrix& a) { return linear_solve(a, std::vector<Bits>(a.rows(), 0)).rank; }

}  // namespace lehmer::poly
