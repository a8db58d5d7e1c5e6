#include "lehmer/lattice.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

namespace lehmer::lattice {

namespace {

constexpr std::size_t kRank = 11;

// Exact solution of A x = b over Q, if one exists.
std::optional<std::vector<Rat>> solve_rational(const IntMatrix& a, const std::vector<Int>& b) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a.at(i, j);
    m[i][cols] = b[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rat inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (m[i][cols] != 0) return std::nullopt;
  std::vector<Rat> x(cols, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][cols];
  return x;
}

int top_bit(Mask v) { return 31 - __builtin_clz(v); }

Mask reduce(const std::vector<Mask>& rows, Mask v) {
  for (Mask r : rows)
    if (v >> top_bit(r) & 1) v ^= r;
  return v;
}

Mat2 add(const Mat2& a, const Mat2& b) {
  Mat2 c = a;
  for (int j = 0; j < a.n; ++j) c.cols[static_cast<std::size_t>(j)] ^= b.cols[static_cast<std::size_t>(j)];
  return c;
}

Mat2 eval_mat2(const poly::UniPoly& p, const Mat2& t) {
  Mat2 acc{t.n, std::vector<Mask>(static_cast<std::size_t>(t.n), 0)};
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * t;
    if (p.coeff_bits(i) != 0) acc = add(acc, Mat2::identity(t.n));
  }
  return acc;
}

}  // namespace

IntMatrix gram_z110() {
  IntMatrix g(kRank, kRank);
  g.at(0, 0) = 1;
  for (std::size_t i = 1; i < kRank; ++i) g.at(i, i) = -1;
  return g;
}

std::vector<Int> canonical_class() {
  std::vector<Int> k(kRank, 1);
  k[0] = -3;
  return k;
}

IntMatrix coxeter_matrix() {
  // images in coordinates (H, E1..E10)
  IntMatrix w(kRank, kRank);
  auto set = [&](std::size_t col, std::initializer_list<std::pair<std::size_t, long>> entries) {
    for (auto [row, v] : entries) w.at(row, col) = v;
  };
  set(0, {{0, 2}, {2, -1}, {3, -1}, {4, -1}});  // H  -> 2H - E2 - E3 - E4
  set(1, {{0, 1}, {3, -1}, {4, -1}});           // E1 -> H - E3 - E4
  set(2, {{0, 1}, {2, -1}, {4, -1}});           // E2 -> H - E2 - E4
  set(3, {{0, 1}, {2, -1}, {3, -1}});           // E3 -> H - E2 - E3
  for (std::size_t n = 4; n <= 9; ++n) set(n, {{n + 1, 1}});  // E_n -> E_{n+1}
  set(10, {{1, 1}});                            // E10 -> E1
  return w;
}

IntMatrix default_e10_basis() {
  IntMatrix b(10, kRank);
  for (std::size_t i = 0; i < 9; ++i) {
    b.at(i, i + 1) = 1;
    b.at(i, i + 2) = -1;
  }
  b.at(9, 0) = 1;
  b.at(9, 1) = b.at(9, 2) = b.at(9, 3) = -1;
  return b;
}

IntMatrix load_e10_basis(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::vector<std::vector<long>> rows;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<long> row;
    long v;
    while (ls >> v) row.push_back(v);
    if (!ls.eof()) throw Error(ErrorKind::ParseError, "non-integer entry in " + path.string());
    if (row.empty()) continue;
    if (row.size() != kRank) throw Error(ErrorKind::ParseError, "basis rows need 11 entries");
    rows.push_back(std::move(row));
  }
  if (rows.size() != 10) throw Error(ErrorKind::ParseError, "E10 basis needs 10 rows");
  return IntMatrix::from_rows(rows);
}

IntMatrix gram_on(const IntMatrix& basis_rows, const IntMatrix& gram) {
  return basis_rows * gram * basis_rows.transpose();
}

IntMatrix restrict_to(const IntMatrix& m, const IntMatrix& basis_rows) {
  const IntMatrix bt = basis_rows.transpose();
  const IntMatrix image = m * bt;
  IntMatrix a(basis_rows.rows(), basis_rows.rows());
  for (std::size_t j = 0; j < basis_rows.rows(); ++j) {
    auto x = solve_rational(bt, image.column(j));
    if (!x) throw Error(ErrorKind::NotPreserved, "sublattice is not invariant");
    for (std::size_t i = 0; i < x->size(); ++i) {
      if ((*x)[i].get_den() != 1) throw Error(ErrorKind::NotPreserved, "restricted action is not integral");
      a.at(i, j) = (*x)[i].get_num();
    }
  }
  return a;
}

std::vector<Int> coordinates(const std::vector<Int>& v, const IntMatrix& basis_rows) {
  auto x = solve_rational(basis_rows.transpose(), v);
  if (!x) throw Error(ErrorKind::NoSolution, "vector outside the span");
  std::vector<Int> out;
  for (const auto& q : *x) {
    if (q.get_den() != 1) throw Error(ErrorKind::NoSolution, "vector outside the integral span");
    out.push_back(q.get_num());
  }
  return out;
}

IntMatrix e8_gram() {
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g.at(i, i) = 2;
  // Bourbaki labels 1..8: 1-3, 3-4, 4-5, 5-6, 6-7, 7-8, 2-4
  const std::pair<std::size_t, std::size_t> edges[] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
  for (auto [a, b] : edges) g.at(a, b) = g.at(b, a) = -1;
  return g;
}

std::vector<Int> reference_positive_vector() {
  std::vector<Int> v(kRank, -3);
  v[0] = 10;
  return v;
}

bool preserves(const IntMatrix& m, const IntMatrix& gram) { return m.transpose() * gram * m == gram; }

ParityWitness parity_check(const IntMatrix& gram) {
  ParityWitness w;
  w.even = true;
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    w.diagonal.push_back(gram.at(i, i));
    if (mpz_odd_p(gram.at(i, i).get_mpz_t())) w.even = false;
  }
  return w;
}

IntMatrix reflection(const std::vector<Int>& r, const IntMatrix& gram) {
  const std::size_t n = r.size();
  std::vector<Int> gr = gram * r;
  Int rr = 0;
  for (std::size_t i = 0; i < n; ++i) rr += r[i] * gr[i];
  if (rr != 2 && rr != -2) throw Error(ErrorKind::InvariantViolation, "reflection needs a root of norm +-2");
  IntMatrix s = IntMatrix::identity(n);
  // s(v) = v - 2 (v.r)/(r.r) r
  for (std::size_t j = 0; j < n; ++j) {
    Int c = -2 * gr[j] / rr;
    for (std::size_t i = 0; i < n; ++i) s.at(i, j) += c * r[i];
  }
  return s;
}

bool weyl2_membership(const IntMatrix& m, const IntMatrix& gram, const std::vector<Int>& v0) {
  if (!preserves(m, gram)) throw Error(ErrorKind::NotIsometry, "matrix does not preserve the form");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Int d = m.at(i, j) - (i == j ? 1 : 0);
      if (mpz_odd_p(d.get_mpz_t())) return false;
    }
  std::vector<Int> mv = m * v0;
  std::vector<Int> gv = gram * v0;
  Int pairing = 0;
  for (std::size_t i = 0; i < mv.size(); ++i) pairing += mv[i] * gv[i];
  return pairing > 0;
}

Mask Mat2::apply(Mask v) const {
  Mask out = 0;
  for (int j = 0; j < n; ++j)
    if (v >> j & 1) out ^= cols[static_cast<std::size_t>(j)];
  return out;
}

Mat2 Mat2::identity(int n) {
  Mat2 m{n, std::vector<Mask>(static_cast<std::size_t>(n))};
  for (int j = 0; j < n; ++j) m.cols[static_cast<std::size_t>(j)] = Mask{1} << j;
  return m;
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  Mat2 c{a.n, std::vector<Mask>(static_cast<std::size_t>(a.n))};
  for (int j = 0; j < a.n; ++j) c.cols[static_cast<std::size_t>(j)] = a.apply(b.cols[static_cast<std::size_t>(j)]);
  return c;
}

Mat2 reduce_mod2(const IntMatrix& m) {
  if (!m.square() || m.rows() > 32) throw Error(ErrorKind::DimensionMismatch, "mod-2 matrices are square of size <= 32");
  Mat2 t{static_cast<int>(m.rows()), std::vector<Mask>(m.rows(), 0)};
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (mpz_odd_p(m.at(i, j).get_mpz_t())) t.cols[j] |= Mask{1} << i;
  return t;
}

Mod2QuadSpace::Mod2QuadSpace(const IntMatrix& gram) : n_(static_cast<int>(gram.rows())) {
  if (!gram.square() || n_ > 32) throw Error(ErrorKind::WrongDimension, "quadratic space needs a square Gram matrix");
  if (!parity_check(gram).even) throw Error(ErrorKind::WrongDimension, "quadratic form needs an even lattice");
  for (int i = 0; i < n_; ++i) {
    Int half = gram.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) / 2;
    qdiag_.push_back(mpz_odd_p(half.get_mpz_t()) ? 1 : 0);
    Mask row = 0;
    for (int j = 0; j < n_; ++j)
      if (mpz_odd_p(gram.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).get_mpz_t())) row |= Mask{1} << j;
    brows_.push_back(row);
  }
}

int Mod2QuadSpace::q(Mask v) const noexcept {
  int acc = 0;
  for (int i = 0; i < n_; ++i) {
    if (!(v >> i & 1)) continue;
    acc += qdiag_[static_cast<std::size_t>(i)];
    Mask lower = v & brows_[static_cast<std::size_t>(i)] & ((Mask{1} << i) - 1);
    acc += __builtin_popcount(lower);
  }
  return acc & 1;
}

int Mod2QuadSpace::b(Mask u, Mask v) const noexcept {
  int acc = 0;
  for (int i = 0; i < n_; ++i)
    if (u >> i & 1) acc += __builtin_popcount(brows_[static_cast<std::size_t>(i)] & v);
  return acc & 1;
}

std::uint64_t Mod2QuadSpace::singular_count() const {
  std::uint64_t c = 0;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n_); ++v)
    if (q(static_cast<Mask>(v)) == 0) ++c;
  return c;
}

int Mod2QuadSpace::arf() const { return singular_count() > (std::uint64_t{1} << (n_ - 1)) ? 0 : 1; }

bool Mod2QuadSpace::nondegenerate() const {
  Mat2 m{n_, brows_};  // symmetric, so rows serve as columns
  return kernel(m).dim() == 0;
}

bool Mod2QuadSpace::totally_singular(const std::vector<Mask>& basis) const {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (q(basis[i]) != 0) return false;
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (b(basis[i], basis[j]) != 0) return false;
  }
  return true;
}

bool Subspace::contains(Mask v) const { return reduce(rows, v) == 0; }

std::vector<Mask> Subspace::elements() const {
  std::vector<Mask> out{0};
  for (Mask r : rows) {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] ^ r);
  }
  return out;
}

Subspace span(const std::vector<Mask>& vectors) {
  Subspace s;
  for (Mask v : vectors) {
    v = reduce(s.rows, v);
    if (v == 0) continue;
    const int p = top_bit(v);
    for (Mask& r : s.rows)
      if (r >> p & 1) r ^= v;
    s.rows.push_back(v);
    std::sort(s.rows.begin(), s.rows.end(), std::greater<>());
  }
  return s;
}

int intersection_dim(const Subspace& a, const Subspace& b) {
  std::vector<Mask> all = a.rows;
  all.insert(all.end(), b.rows.begin(), b.rows.end());
  return a.dim() + b.dim() - span(all).dim();
}

bool invariant(const Subspace& s, const Mat2& t) {
  for (Mask r : s.rows)
    if (!s.contains(t.apply(r))) return false;
  return true;
}

Subspace kernel(const Mat2& m) {
  // rows of m as masks over the column index
  std::vector<Mask> rows(static_cast<std::size_t>(m.n), 0);
  for (int j = 0; j < m.n; ++j)
    for (int i = 0; i < m.n; ++i)
      if (m.cols[static_cast<std::size_t>(j)] >> i & 1) rows[static_cast<std::size_t>(i)] |= Mask{1} << j;
  std::vector<int> pivot_of_row;
  std::size_t r = 0;
  for (int c = 0; c < m.n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !(rows[p] >> c & 1)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && (rows[i] >> c & 1)) rows[i] ^= rows[r];
    pivot_of_row.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.n), false);
  for (int c : pivot_of_row) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Mask> basis;
  for (int f = 0; f < m.n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Mask v = Mask{1} << f;
    for (std::size_t i = 0; i < pivot_of_row.size(); ++i)
      if (rows[i] >> f & 1) v |= Mask{1} << pivot_of_row[i];
    basis.push_back(v);
  }
  return span(basis);
}

LagrangianCensus enumerate_lagrangians(const Mod2QuadSpace& space, const Mat2* isometry) {
  if (space.dim() != 10) throw Error(ErrorKind::WrongDimension, "Lagrangian census expects a 10-dimensional space");
  const int half = space.dim() / 2;
  LagrangianCensus census;
  std::set<Subspace> seen;
  std::vector<Mask> rows;
  // Rows of a reduced echelon basis are chosen with strictly decreasing top
  // bits; a new row must vanish at the earlier pivots (automatic, they are
  // higher) and the earlier rows must vanish at its pivot.
  auto dfs = [&](auto&& self, Mask limit) -> void {
    if (static_cast<int>(rows.size()) == half) {
      Subspace s{rows};
      if (!seen.insert(s).second) ++census.duplicates_rejected;
      return;
    }
    for (Mask v = 1; v < limit; ++v) {
      if (space.q(v) != 0) continue;
      const int p = top_bit(v);
      bool ok = true;
      for (Mask r : rows)
        if ((r >> p & 1) || space.b(r, v) != 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      rows.push_back(v);
      self(self, Mask{1} << p);
      rows.pop_back();
    }
  };
  dfs(dfs, Mask{1} << space.dim());
  census.all.assign(seen.begin(), seen.end());
  const Subspace& l0 = census.all.front();
  for (const auto& l : census.all) {
    int k = intersection_dim(l, l0) % 2 == half % 2 ? 0 : 1;
    census.klass.push_back(k);
    ++census.class_sizes[k];
  }
  if (isometry != nullptr)
    for (std::size_t i = 0; i < census.all.size(); ++i)
      if (invariant(census.all[i], *isometry)) census.invariant_members.push_back(i);
  return census;
}

Mod2Action mod2_action_analysis(const IntMatrix& m, const IntMatrix& gram) {
  if (!preserves(m, gram)) throw Error(ErrorKind::NotIsometry, "matrix does not preserve the form");
  Mod2QuadSpace space(gram);
  Mod2Action out;
  const Mat2 t = reduce_mod2(m);
  const Mat2 id = Mat2::identity(t.n);
  Mat2 pw = t;
  for (std::uint64_t k = 1; k <= (std::uint64_t{1} << 20); ++k) {
    if (pw == id) {
      out.order = k;
      break;
    }
    pw = pw * t;
  }
  out.char_poly = char_poly(m);
  for (const auto& f : mod2_reduce_and_factor(out.char_poly)) {
    InvariantSubspace sub;
    sub.factor = f.poly;
    sub.multiplicity = f.multiplicity;
    sub.kernel = kernel(eval_mat2(poly::pow(f.poly, static_cast<unsigned>(f.multiplicity)), t));
    sub.totally_isotropic = true;
    for (Mask v : sub.kernel.elements()) {
      if (v == 0) continue;
      ++sub.nonzero_checked;
      if (space.q(v) != 0) sub.totally_isotropic = false;
    }
    out.subspaces.push_back(std::move(sub));
  }
  return out;
}

}  // namespace lehmer::lattice
