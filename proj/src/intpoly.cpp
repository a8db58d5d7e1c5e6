#include "lehmer/intpoly.hpp"

#include <algorithm>
#include <map>

namespace lehmer::lattice {

namespace {

using QPoly = std::vector<Rat>;  // low degree first

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_q(const IntPoly& p) {
  QPoly q;
  for (const auto& c : p.coeffs()) q.emplace_back(c);
  return q;
}

QPoly qrem(QPoly a, const QPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    Rat f = a.back() / b.back();
    for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(i + shift)] -= f * b[static_cast<std::size_t>(i)];
    a.pop_back();
    trim(a);
  }
  return a;
}

Rat qeval(const QPoly& p, const Rat& x) {
  Rat acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<QPoly> sturm_sequence(const IntPoly& p) {
  std::vector<QPoly> seq{to_q(p), to_q(p.derivative())};
  trim(seq[1]);
  while (!seq.back().empty()) {
    QPoly r = qrem(seq[seq.size() - 2], seq.back());
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    seq.push_back(std::move(r));
  }
  if (seq.back().empty()) seq.pop_back();
  return seq;
}

int variations(const std::vector<QPoly>& seq, const Rat& x) {
  int v = 0, last = 0;
  for (const auto& p : seq) {
    int s = sgn(qeval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int count_in(const std::vector<QPoly>& seq, const Rat& a, const Rat& b) { return variations(seq, a) - variations(seq, b); }

// Strict bound on the moduli of all roots.
Rat cauchy_bound(const IntPoly& p) {
  Rat m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rat r(abs(p.coeff(i)), abs(p.lead()));
    if (r > m) m = r;
  }
  return m + 1;
}

IntPoly squarefree_part(const IntPoly& p) {
  IntPoly g = gcd(p, p.derivative());
  return g.degree() <= 0 ? p : divide_exact(p, g);
}

std::vector<Int> divisors(Int n) {
  n = abs(n);
  std::vector<Int> out;
  for (Int d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

IntPoly cyclotomic(int n, std::map<int, IntPoly>& cache) {
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Int> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = -1;
  c[static_cast<std::size_t>(n)] = 1;
  IntPoly p(c);
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_exact(p, cyclotomic(d, cache));
  cache.emplace(n, p);
  return p;
}

bool divides(const IntPoly& b, const IntPoly& a) {
  try {
    divide_exact(a, b);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::from_ints(std::initializer_list<long> coeffs) {
  std::vector<Int> c;
  for (long v : coeffs) c.emplace_back(v);
  return IntPoly(std::move(c));
}

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::coeff(int i) const {
  static const Int zero = 0;
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : zero;
}

Rat IntPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::derivative() const {
  std::vector<Int> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return IntPoly(std::move(d));
}

IntPoly IntPoly::reversed() const { return IntPoly(std::vector<Int>(c_.rbegin(), c_.rend())); }

bool IntPoly::is_reciprocal() const { return !c_.empty() && std::equal(c_.begin(), c_.end(), c_.rbegin()); }

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(c));
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "integer polynomial division by zero");
  std::vector<Int> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) {
    if (a.is_zero()) return {};
    throw Error(ErrorKind::DivisionNotExact, "divisor has larger degree");
  }
  std::vector<Int> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
  for (int i = a.degree(); i >= db; --i) {
    Int& top = r[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (top % b.lead() != 0) throw Error(ErrorKind::DivisionNotExact, "integer polynomial division leaves a remainder");
    Int f = top / b.lead();
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.coeff(j);
  }
  for (int i = 0; i < db; ++i)
    if (r[static_cast<std::size_t>(i)] != 0) throw Error(ErrorKind::DivisionNotExact, "integer polynomial division leaves a remainder");
  return IntPoly(std::move(q));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  QPoly x = to_q(a), y = to_q(b);
  while (!y.empty()) {
    QPoly r = qrem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.empty()) return {};
  Int den = 1;
  for (const auto& c : x) den = lcm(den, c.get_den());
  std::vector<Int> c;
  Int g = 0;
  for (const auto& q : x) {
    c.push_back(Int(q * den));
    g = gcd(g, c.back());
  }
  if (c.back() < 0) g = -g;
  for (auto& v : c) v /= g;
  return IntPoly(std::move(c));
}

IntPoly compose(const IntPoly& p, const IntPoly& q) {
  IntPoly acc;
  for (int i = p.degree(); i >= 0; --i) acc = acc * q + IntPoly(std::vector<Int>{p.coeff(i)});
  return acc;
}

std::string format(const IntPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int i = p.degree(); i >= 0; --i) {
    const Int& c = p.coeff(i);
    if (c == 0) continue;
    Int a = abs(c);
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (a != 1 || i == 0) s += a.get_str();
    if (i > 0) s += var;
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
  std::vector<Int> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Int IntMatrix::trace() const {
  Int t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shapes");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += x * b.at(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sum shapes");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

std::vector<Int> operator*(const IntMatrix& a, const std::vector<Int>& v) {
  if (a.cols_ != v.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shapes");
  std::vector<Int> out(a.rows_, 0);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a.at(i, j) * v[j];
  return out;
}

IntPoly char_poly(const IntMatrix& a) {
  if (!a.square()) throw Error(ErrorKind::DimensionMismatch, "characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Int> c(n + 1, 0);
  c[n] = 1;
  IntMatrix m(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) += c[n - k + 1];
    Int t = (a * m).trace();
    // exact by construction
    c[n - k] = -t / static_cast<long>(k);
  }
  return IntPoly(std::move(c));
}

IntMatrix eval_matrix(const IntPoly& p, const IntMatrix& m) {
  IntMatrix acc(m.rows(), m.cols());
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * m;
    for (std::size_t j = 0; j < m.rows(); ++j) acc.at(j, j) += p.coeff(i);
  }
  return acc;
}

IntPoly lehmer_polynomial() { return IntPoly::from_ints({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}); }

int sturm_count(const IntPoly& p, const Rat& a, const Rat& b) { return count_in(sturm_sequence(p), a, b); }

int real_root_count(const IntPoly& p) {
  if (p.degree() <= 0) return 0;
  Rat bound = cauchy_bound(p);
  return sturm_count(squarefree_part(p), -bound, bound);
}

Interval refine(const IntPoly& p, Interval iv, const Rat& width) {
  auto seq = sturm_sequence(p);
  if (iv.lo == iv.hi) return iv;
  if (p.eval(iv.hi) == 0) return {iv.hi, iv.hi};
  while (iv.width() > width) {
    Rat mid = iv.mid();
    if (p.eval(mid) == 0) return {mid, mid};
    if (count_in(seq, iv.lo, mid) >= 1)
      iv.hi = mid;
    else
      iv.lo = mid;
  }
  return iv;
}

std::vector<Interval> real_roots(const IntPoly& p, const Rat& width) {
  if (p.degree() <= 0) return {};
  if (gcd(p, p.derivative()).degree() > 0) throw Error(ErrorKind::NotSquarefree, "real_roots needs a squarefree polynomial");
  auto seq = sturm_sequence(p);
  Rat bound = cauchy_bound(p);
  std::vector<Interval> isolated;
  std::vector<std::pair<Interval, int>> stack{{{-bound, bound}, count_in(seq, -bound, bound)}};
  while (!stack.empty()) {
    auto [iv, n] = stack.back();
    stack.pop_back();
    if (n == 0) continue;
    if (n == 1) {
      isolated.push_back(iv);
      continue;
    }
    Rat mid = iv.mid();
    stack.push_back({{iv.lo, mid}, count_in(seq, iv.lo, mid)});
    stack.push_back({{mid, iv.hi}, count_in(seq, mid, iv.hi)});
  }
  std::vector<Interval> out;
  for (auto& iv : isolated) out.push_back(refine(p, iv, width));
  std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  return out;
}

int interval_sign(const IntPoly& p, const Interval& iv) {
  Rat lo = 0, hi = 0;
  for (int i = p.degree(); i >= 0; --i) {
    Rat cands[4] = {lo * iv.lo, lo * iv.hi, hi * iv.lo, hi * iv.hi};
    lo = *std::min_element(cands, cands + 4) + p.coeff(i);
    hi = *std::max_element(cands, cands + 4) + p.coeff(i);
  }
  if (lo > 0) return 1;
  if (hi < 0) return -1;
  return 0;
}

IntPoly trace_polynomial(const IntPoly& p) {
  if (p.degree() % 2 != 0) throw Error(ErrorKind::OddDegree, "trace polynomial needs even degree");
  if (!p.is_reciprocal()) throw Error(ErrorKind::NotReciprocal, "trace polynomial needs a palindromic polynomial");
  const int d = p.degree() / 2;
  std::vector<Int> r(static_cast<std::size_t>(d) + 1, 0);
  // coefficient of x^(d+k) in x^(d-j)(x^2+1)^j is C(j, (j+k)/2) when j = k mod 2
  for (int k = d; k >= 0; --k) {
    Int v = p.coeff(d + k);
    for (int j = k + 2; j <= d; j += 2) {
      Int b;
      mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>((j + k) / 2));
      v -= r[static_cast<std::size_t>(j)] * b;
    }
    r[static_cast<std::size_t>(k)] = v;
  }
  IntPoly out(std::move(r));
  if (!(trace_expand(out) == p)) throw Error(ErrorKind::NotReciprocal, "trace polynomial does not re-expand");
  return out;
}

IntPoly trace_expand(const IntPoly& r) {
  const int d = r.degree();
  IntPoly acc;
  IntPoly x2p1 = IntPoly::from_ints({1, 0, 1});
  IntPoly pw = IntPoly::from_ints({1});
  for (int k = 0; k <= d; ++k) {
    std::vector<Int> shift(static_cast<std::size_t>(d - k) + 1, 0);
    shift.back() = r.coeff(k);
    acc = acc + IntPoly(std::move(shift)) * pw;
    pw = pw * x2p1;
  }
  return acc;
}

SalemCertificate salem_certify(const IntPoly& p, const Rat& width) {
  SalemCertificate cert;
  cert.trace = trace_polynomial(p);
  const IntPoly& r = cert.trace;
  if (r.degree() < 1) throw Error(ErrorKind::NotSalem, "constant trace polynomial");
  if (gcd(r, r.derivative()).degree() > 0) throw Error(ErrorKind::NotSalem, "trace polynomial has a repeated root");
  if (r.eval(2) == 0 || r.eval(-2) == 0) throw Error(ErrorKind::NotSalem, "trace polynomial vanishes at +-2");
  cert.roots = real_roots(r, width);
  if (static_cast<int>(cert.roots.size()) != r.degree())
    throw Error(ErrorKind::NotSalem, std::to_string(cert.roots.size()) + " of " + std::to_string(r.degree()) + " trace roots are real");
  const Rat bound = cauchy_bound(r);
  cert.roots_above_two = sturm_count(r, 2, bound);
  const int inner = sturm_count(r, -2, 2);
  if (cert.roots_above_two != 1) throw Error(ErrorKind::NotSalem, std::to_string(cert.roots_above_two) + " trace roots above 2");
  if (inner != r.degree() - 1) throw Error(ErrorKind::NotSalem, "a trace root lies at or below -2");
  if (inner == 0) throw Error(ErrorKind::NotSalem, "no conjugate on the unit circle");

  // keep every isolating interval clear of +-2
  for (auto& iv : cert.roots) {
    Rat w = width;
    while ((iv.lo < 2 && iv.hi > 2) || (iv.lo < -2 && iv.hi > -2)) {
      w /= 2;
      iv = refine(r, iv, w);
    }
  }
  const IntPoly dr = r.derivative();
  std::vector<std::pair<Interval, int>> inner_roots;
  for (auto iv : cert.roots) {
    if (iv.lo >= 2) {
      cert.big_root = iv;
      continue;
    }
    int s = interval_sign(dr, iv);
    Rat w = iv.width();
    for (int it = 0; s == 0 && it < 400; ++it) {
      w /= 2;
      iv = refine(r, iv, w);
      s = interval_sign(dr, iv);
    }
    if (s == 0) throw Error(ErrorKind::NotSalem, "derivative sign not resolved");
    // a simple root: R has the sign of R'(t) just to its right
    if (iv.hi != iv.lo && sgn(r.eval(iv.hi)) != s) throw Error(ErrorKind::NotSalem, "derivative sign disagrees with the sign change");
    inner_roots.emplace_back(iv, s);
  }
  std::stable_sort(inner_roots.begin(), inner_roots.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  for (const auto& [iv, s] : inner_roots) {
    cert.inner.push_back(iv);
    cert.derivative_signs.push_back(s);
    if (s > 0) ++cert.positive_derivatives;
  }
  auto proots = real_roots(squarefree_part(p), width);
  cert.salem_number = proots.back();
  return cert;
}

std::vector<int> sign_vector_target(const SalemCertificate& cert) {
  std::vector<int> out;
  for (int s : cert.derivative_signs) out.push_back(-s);
  return out;
}

Interval dynamical_degree(const IntMatrix& m, const Rat& width) {
  IntPoly p = char_poly(m);
  Rat stripped_max = 0;
  bool positive_attains = false;  // a stripped eigenvalue equals +stripped_max
  auto note = [&](const Rat& modulus, bool positive) {
    if (modulus > stripped_max) {
      stripped_max = modulus;
      positive_attains = positive;
    } else if (modulus == stripped_max) {
      positive_attains = positive_attains || positive;
    }
  };
  // integer eigenvalues
  if (p.degree() > 0) {
    std::vector<Int> cands{0};
    if (p.coeff(0) != 0)
      for (const auto& d : divisors(p.coeff(0))) {
        cands.push_back(d);
        cands.push_back(-d);
      }
    for (const auto& r : cands) {
      IntPoly lin(std::vector<Int>{-r, 1});
      while (p.degree() > 0 && p.eval(Rat(r)) == 0) {
        p = divide_exact(p, lin);
        note(Rat(abs(r)), r > 0);
      }
    }
  }
  // cyclotomic factors
  // phi(n) >= sqrt(n/2), so only n <= 2 deg^2 can contribute
  std::map<int, IntPoly> cache;
  const int limit = 2 * p.degree() * p.degree();
  for (int n = 2; p.degree() > 0 && n <= limit; ++n) {
    IntPoly phi = cyclotomic(n, cache);
    while (phi.degree() <= p.degree() && divides(phi, p)) {
      p = divide_exact(p, phi);
      note(1, false);
    }
  }
  if (p.degree() <= 0) {
    if (!positive_attains) throw Error(ErrorKind::SpectralRadiusNotRealCertified, "spectral radius is not a positive eigenvalue");
    return {stripped_max, stripped_max};
  }
  IntPoly core = squarefree_part(p);
  SalemCertificate cert;
  try {
    cert = salem_certify(core, width);
  } catch (const Error& e) {
    throw Error(ErrorKind::SpectralRadiusNotRealCertified, std::string("remaining factor not certified: ") + e.what());
  }
  Interval lam = cert.salem_number;
  if (lam.width() > width) lam = refine(core, lam, width);
  if (!(lam.lo > 1 && lam.lo > stripped_max))
    throw Error(ErrorKind::SpectralRadiusNotRealCertified, "dominance over the stripped eigenvalues not shown");
  return lam;
}

poly::UniPoly reduce_mod2(const IntPoly& p) {
  std::vector<gf2m::Bits> c;
  for (const auto& v : p.coeffs()) c.push_back(mpz_odd_p(v.get_mpz_t()) ? 1 : 0);
  return poly::UniPoly(gf2m::gf2(1), std::move(c));
}

std::vector<poly::Factor> mod2_reduce_and_factor(const IntPoly& p) {
  poly::UniPoly q = reduce_mod2(p);
  if (q.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "polynomial vanishes mod 2");
  return poly::factor(q);
}

std::string format(const Rat& q) { return q.get_str(); }

}  // namespace lehmer::lattice
