#include "lehmer/roots.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace lehmer::poly {

namespace {

void sfd_rec(const UniPoly& f, int factor_mult, std::map<int, UniPoly>& out) {
  UniPoly c = gcd(f, f.derivative());
  UniPoly w = divide_exact(f, c);
  int i = 1;
  while (w.degree() > 0) {
    UniPoly y = gcd(w, c);
    UniPoly z = divide_exact(w, y);
    if (z.degree() > 0) {
      auto [it, inserted] = out.try_emplace(i * factor_mult, z);
      if (!inserted) it->second = it->second * z;
    }
    ++i;
    w = y;
    c = divide_exact(c, y);
  }
  // what is left is a perfect square in characteristic 2
  if (c.degree() > 0) sfd_rec(c.sqrt(), factor_mult * 2, out);
}

bool canonical_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.coeff_bits(i) != b.coeff_bits(i)) return a.coeff_bits(i) < b.coeff_bits(i);
  return false;
}

UniPoly random_poly(Field f, int below_degree, std::mt19937_64& rng) {
  std::vector<Bits> c(static_cast<std::size_t>(below_degree));
  const Bits mask = f->size() - 1;
  for (auto& x : c) x = rng() & mask;
  return UniPoly(f, std::move(c));
}

void edf_rec(const UniPoly& f, int d, std::mt19937_64& rng, std::vector<UniPoly>& out) {
  if (f.degree() <= d) {
    out.push_back(f.monic());
    return;
  }
  // absolute trace Tr_{GF(2^(m d))/GF(2)} of a(x) in K[x]/(f)
  const unsigned trace_len = static_cast<unsigned>(f.field()->degree() * d);
  for (;;) {
    UniPoly a = random_poly(f.field(), f.degree(), rng);
    if (a.degree() <= 0) continue;
    UniPoly t = a % f;
    UniPoly acc = t;
    for (unsigned i = 1; i < trace_len; ++i) {
      t = mulmod(t, t, f);
      acc += t;
    }
    UniPoly g = gcd(f, acc);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      edf_rec(g, d, rng, out);
      edf_rec(divide_exact(f, g), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Factor> squarefree_decomposition(const UniPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree decomposition of zero");
  std::map<int, UniPoly> parts;
  if (f.degree() > 0) sfd_rec(f.monic(), 1, parts);
  std::vector<Factor> out;
  for (auto& [mult, g] : parts) out.push_back({g.monic(), mult});
  return out;
}

std::vector<std::pair<UniPoly, int>> distinct_degree(const UniPoly& f_in) {
  std::vector<std::pair<UniPoly, int>> out;
  UniPoly f = f_in.monic();
  const unsigned m = static_cast<unsigned>(f.field()->degree());
  const UniPoly x = UniPoly::x(f.field());
  UniPoly h = x % f;
  int e = 0;
  while (f.degree() >= 2 * (e + 1)) {
    ++e;
    h = frobenius_mod(h, m, f);
    UniPoly g = gcd(f, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, e);
      f = divide_exact(f, g);
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

std::vector<UniPoly> equal_degree(const UniPoly& f, int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<UniPoly> out;
  if (f.degree() <= 0) return out;
  edf_rec(f.monic(), d, rng, out);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<Factor> factor(const UniPoly& f, std::uint64_t seed) {
  std::vector<Factor> out;
  for (const auto& [g, mult] : squarefree_decomposition(f))
    for (const auto& [h, d] : distinct_degree(g))
      for (const auto& irr : equal_degree(h, d, seed)) out.push_back({irr, mult});
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.poly == b.poly) return a.multiplicity < b.multiplicity;
    return canonical_less(a.poly, b.poly);
  });
  return out;
}

bool is_irreducible(const UniPoly& f) {
  if (f.degree() < 1) return false;
  auto fs = factor(f);
  return fs.size() == 1 && fs[0].multiplicity == 1;
}

RootSet uni_roots(const UniPoly& p, int bound, std::uint64_t seed) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
  RootSet result;
  Field base = p.field();
  const int m = base->degree();
  result.cofactor = UniPoly(base, {1});
  for (const auto& [g, mult] : squarefree_decomposition(p)) {
    for (const auto& [h, e] : distinct_degree(g)) {
      const int abs_degree = m * e;
      if (abs_degree > bound) {
        result.bound_exceeded = true;
        result.cofactor = result.cofactor * pow(h, static_cast<unsigned>(mult));
        continue;
      }
      Field ext = e == 1 ? base : gf2m::gf2(abs_degree);
      for (const auto& lin : equal_degree(h.embed(ext), 1, seed)) {
        FieldElement r = lin.coeff(0);  // x + r
        result.roots.push_back({r, mult, gf2m::minimal_degree(r)});
      }
    }
  }
  std::sort(result.roots.begin(), result.roots.end(), [](const Root& a, const Root& b) {
    if (a.value.field()->degree() != b.value.field()->degree())
      return a.value.field()->degree() < b.value.field()->degree();
    return a.value.bits() < b.value.bits();
  });
  return result;
}

}  // namespace lehmer::poly
