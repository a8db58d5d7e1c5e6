#include "lehmer/resultant.hpp"

#include <algorithm>

#include "lehmer/projpoint.hpp"

namespace lehmer::poly {

namespace {

// Polynomial in one variable with coefficients in the ring of the others.
using Dense = std::vector<MultiPoly>;

Dense to_dense(const MultiPoly& p, int var) {
  Dense d(static_cast<std::size_t>(p.degree_in(var)) + 1);
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = p.coeff_in(var, static_cast<int>(k));
  return d;
}

void trim(Dense& d) {
  while (!d.empty() && d.back().is_zero()) d.pop_back();
}

int degree(const Dense& d) { return static_cast<int>(d.size()) - 1; }

MultiPoly power(const MultiPoly& p, int e) { return p.pow(static_cast<unsigned>(e)); }

// lc(b)^(deg a - deg b + 1) * a mod b
Dense prem(Dense a, const Dense& b) {
  const MultiPoly& lb = b.back();
  const int db = degree(b);
  int steps = degree(a) - db + 1;
  while (degree(a) >= db) {
    const MultiPoly la = a.back();
    const int shift = degree(a) - db;
    for (auto& c : a) c = c * lb;
    for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(i + shift)] += la * b[static_cast<std::size_t>(i)];
    trim(a);
    --steps;
  }
  if (steps > 0) {
    MultiPoly f = power(lb, steps);
    for (auto& c : a) c = c * f;
  }
  return a;
}

FieldElement lead_y(const MultiPoly& p, const FieldElement& x0) {
  return p.coeff_in(1, p.degree_in(1)).specialize(0, x0).coeff(0);
}

bool point_less(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    int da = a[i].field()->degree(), db = b[i].field()->degree();
    if (da != db) return da < db;
    if (a[i].bits() != b[i].bits()) return a[i].bits() < b[i].bits();
  }
  return false;
}

// Both coordinates in the smallest field containing them, preferring base.
std::vector<FieldElement> minimal_pair(const FieldElement& x, const FieldElement& y, Field base) {
  Field f = common_field(x.field(), y.field());
  FieldElement ex = gf2m::embed(x, f), ey = gf2m::embed(y, f);
  ProjPoint p({ex, ey, FieldElement::one(f)});
  ProjPoint m = p.minimal(base);
  return {m[0], m[1]};
}

}  // namespace

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, int var) {
  if (p.degree_in(var) <= 0 || q.degree_in(var) <= 0)
    throw Error(ErrorKind::VariableAbsent, "resultant variable does not occur in both polynomials");
  Dense a = to_dense(p, var), b = to_dense(q, var);
  if (degree(a) < degree(b)) std::swap(a, b);  // sign is irrelevant in characteristic 2
  const MultiPoly one = MultiPoly::constant(FieldElement::one(p.field()), p.nvars());
  MultiPoly g = one, h = one;
  for (;;) {
    const int delta = degree(a) - degree(b);
    Dense r = prem(a, b);
    if (r.empty()) return MultiPoly(p.field(), p.nvars());
    MultiPoly div = g * power(h, delta);
    for (auto& c : r) c = divide_exact(c, div);
    a = std::move(b);
    b = std::move(r);
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = divide_exact(power(g, delta), power(h, delta - 1));
    }
    if (degree(b) == 0) {
      const int da = degree(a);
      if (da == 0) return one;
      return divide_exact(power(b[0], da), power(h, da - 1));
    }
  }
}

BivariateSolutions solve_bivariate_system(std::span<const MultiPoly> polys, int ext_bound) {
  if (polys.empty()) throw Error(ErrorKind::PositiveDimensional, "empty system");
  Field base = polys[0].field();
  for (const auto& p : polys) {
    if (p.nvars() != 2) throw Error(ErrorKind::ArityMismatch, "bivariate system expected");
    if (p.field() != base) throw Error(ErrorKind::ContextMismatch, "system over different fields");
  }
  std::vector<const MultiPoly*> live;
  for (const auto& p : polys)
    if (!p.is_zero()) live.push_back(&p);
  if (live.empty()) throw Error(ErrorKind::PositiveDimensional, "all equations vanish");

  BivariateSolutions out;
  MultiPoly elim;
  std::pair<const MultiPoly*, const MultiPoly*> used{nullptr, nullptr};
  for (const MultiPoly* p : live)
    if (p->degree_in(1) == 0) {
      elim = *p;
      break;
    }
  for (std::size_t i = 0; elim.is_zero() && i < live.size(); ++i)
    for (std::size_t j = i + 1; elim.is_zero() && j < live.size(); ++j) {
      MultiPoly r = resultant(*live[i], *live[j], 1);
      if (!r.is_zero()) {
        elim = r;
        used = {live[i], live[j]};
      }
    }
  if (elim.is_zero()) throw Error(ErrorKind::PositiveDimensional, "every eliminant vanishes identically");

  out.eliminant = elim.to_univariate(0, std::vector<FieldElement>{FieldElement::zero(base), FieldElement::zero(base)});
  if (out.eliminant.degree() <= 0) return out;
  RootSet xs = uni_roots(out.eliminant, ext_bound);
  out.bound_exceeded = xs.bound_exceeded;
  out.unsplit_degree = std::max(xs.cofactor.degree(), 0);

  for (const Root& xr : xs.roots) {
    const FieldElement& x0 = xr.value;
    if (used.first != nullptr && lead_y(*used.first, x0).is_zero() && lead_y(*used.second, x0).is_zero())
      out.degenerate_x.push_back(x0);
    UniPoly g;
    for (const MultiPoly* p : live) {
      UniPoly u = p->to_univariate(1, std::vector<FieldElement>{x0, FieldElement::zero(x0.field())});
      g = g.field() == nullptr ? u : gcd(g, u);
    }
    if (g.is_zero()) throw Error(ErrorKind::PositiveDimensional, "a vertical line lies in the solution set");
    if (g.degree() == 0) continue;
    RootSet ys = uni_roots(g, ext_bound);
    if (ys.bound_exceeded) {
      out.bound_exceeded = true;
      out.unsplit_degree += ys.cofactor.degree();
    }
    for (const Root& yr : ys.roots) {
      auto pt = minimal_pair(gf2m::embed(x0, common_field(x0.field(), yr.value.field())), yr.value, base);
      for (const auto& p : polys)
        if (!p.evaluate(pt).is_zero()) throw Error(ErrorKind::InvariantViolation, "candidate solution fails back-substitution");
      out.points.push_back(std::move(pt));
    }
  }
  std::sort(out.points.begin(), out.points.end(), point_less);
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  return out;
}

std::vector<ProjPoint> plane_common_zeros(std::span<const MultiPoly> polys, int ext_bound) {
  if (polys.empty()) throw Error(ErrorKind::PositiveDimensional, "empty system");
  Field base = polys[0].field();
  std::vector<ProjPoint> out;
  for (int var : {2, 1, 0}) {
    std::vector<MultiPoly> sys;
    for (const auto& p : polys) {
      if (p.nvars() != 3) throw Error(ErrorKind::ArityMismatch, "plane system expected");
      sys.push_back(dehomogenize(p, var));
    }
    BivariateSolutions sol = solve_bivariate_system(sys, ext_bound);
    if (sol.bound_exceeded) throw Error(ErrorKind::ExtensionBoundExceeded, "solutions beyond the extension bound");
    for (const auto& uv : sol.points) {
      std::vector<FieldElement> c;
      for (int i = 0, k = 0; i < 3; ++i)
        c.push_back(i == var ? FieldElement::one(uv[0].field()) : uv[static_cast<std::size_t>(k++)]);
      ProjPoint p = ProjPoint(std::move(c)).minimal(base);
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace lehmer::poly
