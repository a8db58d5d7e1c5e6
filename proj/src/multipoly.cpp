#include "lehmer/multipoly.hpp"

#include <map>
#include <unordered_map>

namespace lehmer::poly {

namespace {

bool grlex_greater(Monomial a, Monomial b) noexcept {
  int da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da > db;
  return a > b;
}

struct GrlexGreater {
  bool operator()(Monomial a, Monomial b) const noexcept { return grlex_greater(a, b); }
};

const std::string kDefaultNames[kMaxVars] = {"x", "y", "z", "w"};

}  // namespace

Monomial mono_make(std::span<const int> exps) {
  if (exps.size() > static_cast<std::size_t>(kMaxVars)) throw Error(ErrorKind::ArityMismatch, "too many variables");
  Monomial m = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > 0xffff) throw Error(ErrorKind::ArityMismatch, "exponent out of range");
    m |= mono_unit(static_cast<int>(i), exps[i]);
  }
  return m;
}

int mono_degree(Monomial m) noexcept {
  int d = 0;
  for (int v = 0; v < kMaxVars; ++v) d += mono_exp(m, v);
  return d;
}

bool mono_divides(Monomial a, Monomial b) noexcept {
  for (int v = 0; v < kMaxVars; ++v)
    if (mono_exp(a, v) > mono_exp(b, v)) return false;
  return true;
}

MultiPoly::MultiPoly(Field f, int nvars) : field_(f), nvars_(nvars) {
  if (nvars < 1 || nvars > kMaxVars) throw Error(ErrorKind::ArityMismatch, "between 1 and 4 variables supported");
}

MultiPoly MultiPoly::constant(const FieldElement& c, int nvars) {
  MultiPoly p(c.field(), nvars);
  if (!c.is_zero()) p.terms_.push_back({0, c.bits()});
  return p;
}

MultiPoly MultiPoly::variable(Field f, int nvars, int var) {
  MultiPoly p(f, nvars);
  if (var < 0 || var >= nvars) throw Error(ErrorKind::ArityMismatch, "variable index out of range");
  p.terms_.push_back({mono_unit(var), 1});
  return p;
}

MultiPoly MultiPoly::monomial(const FieldElement& c, int nvars, std::span<const int> exps) {
  if (static_cast<int>(exps.size()) != nvars) throw Error(ErrorKind::ArityMismatch, "exponent vector length");
  MultiPoly p(c.field(), nvars);
  if (!c.is_zero()) p.terms_.push_back({mono_make(exps), c.bits()});
  return p;
}

MultiPoly MultiPoly::from_terms(Field f, int nvars, std::vector<Term> terms) {
  MultiPoly p(f, nvars);
  std::unordered_map<Monomial, Bits> acc;
  acc.reserve(terms.size() * 2);
  for (const Term& t : terms) acc[t.mono] ^= t.coeff;
  p.terms_.reserve(acc.size());
  for (const auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({m, c});
  std::sort(p.terms_.begin(), p.terms_.end(), [](const Term& a, const Term& b) { return grlex_greater(a.mono, b.mono); });
  return p;
}

void MultiPoly::check(const MultiPoly& o) const {
  if (field_ != o.field_) throw Error(ErrorKind::ContextMismatch, "polynomials over different fields");
  if (nvars_ != o.nvars_) throw Error(ErrorKind::ArityMismatch, "polynomials in different rings");
}

bool MultiPoly::is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == 0); }

FieldElement MultiPoly::coeff(Monomial m) const {
  for (const Term& t : terms_)
    if (t.mono == m) return {field_, t.coeff};
  return FieldElement::zero(field_);
}

const Term& MultiPoly::lead() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading term of zero");
  return terms_.front();
}

int MultiPoly::total_degree() const noexcept { return terms_.empty() ? -1 : mono_degree(terms_.front().mono); }

int MultiPoly::degree_in(int var) const noexcept {
  int d = terms_.empty() ? -1 : 0;
  for (const Term& t : terms_) d = std::max(d, mono_exp(t.mono, var));
  return d;
}

int MultiPoly::min_total_degree() const noexcept { return terms_.empty() ? -1 : mono_degree(terms_.back().mono); }

MultiPoly MultiPoly::homogeneous_part(int degree) const {
  MultiPoly p(field_, nvars_);
  for (const Term& t : terms_)
    if (mono_degree(t.mono) == degree) p.terms_.push_back(t);
  return p;
}

int MultiPoly::weighted_homogeneous_degree(std::span<const int> weights) const {
  int deg = -1;
  for (const Term& t : terms_) {
    int d = 0;
    for (int v = 0; v < nvars_; ++v) d += weights[v] * mono_exp(t.mono, v);
    if (deg >= 0 && d != deg) return -1;
    deg = d;
  }
  return deg;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (field_ == nullptr) {
    *this = o;
    return *this;
  }
  if (o.field_ == nullptr) return *this;
  check(o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.cbegin();
  auto b = o.terms_.cbegin();
  while (a != terms_.cend() || b != o.terms_.cend()) {
    if (b == o.terms_.cend() || (a != terms_.cend() && grlex_greater(a->mono, b->mono))) {
      out.push_back(*a++);
    } else if (a == terms_.cend() || grlex_greater(b->mono, a->mono)) {
      out.push_back(*b++);
    } else {
      Bits c = a->coeff ^ b->coeff;
      if (c != 0) out.push_back({a->mono, c});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check(b);
  if (a.is_zero() || b.is_zero()) return MultiPoly(a.field_, a.nvars_);
  if (b.terms_.size() == 1) return a.mul_monomial(b.terms_[0].mono).scale({a.field_, b.terms_[0].coeff});
  if (a.terms_.size() == 1) return b.mul_monomial(a.terms_[0].mono).scale({a.field_, a.terms_[0].coeff});
  Field f = a.field_;
  std::unordered_map<Monomial, Bits> acc;
  acc.reserve(a.terms_.size() * b.terms_.size() / 2 + 16);
  for (const Term& s : a.terms_)
    for (const Term& t : b.terms_) acc[s.mono + t.mono] ^= f->mul(s.coeff, t.coeff);
  MultiPoly p(f, a.nvars_);
  p.terms_.reserve(acc.size());
  for (const auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({m, c});
  std::sort(p.terms_.begin(), p.terms_.end(), [](const Term& x, const Term& y) { return grlex_greater(x.mono, y.mono); });
  return p;
}

MultiPoly MultiPoly::scale(const FieldElement& c) const {
  if (c.field() != field_) throw Error(ErrorKind::ContextMismatch, "scalar from another field");
  MultiPoly p(field_, nvars_);
  if (c.is_zero()) return p;
  p.terms_ = terms_;
  for (Term& t : p.terms_) t.coeff = field_->mul(t.coeff, c.bits());
  return p;
}

MultiPoly MultiPoly::mul_monomial(Monomial m) const {
  MultiPoly p = *this;
  for (Term& t : p.terms_) t.mono += m;  // graded-lex order is preserved
  return p;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(FieldElement::one(field_), nvars_);
  MultiPoly base = *this;
  while (e != 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::embed(Field sup) const {
  if (sup == field_) return *this;
  MultiPoly p(sup, nvars_);
  p.terms_ = terms_;
  for (Term& t : p.terms_) t.coeff = gf2m::embed({field_, t.coeff}, sup).bits();
  return p;
}

FieldElement MultiPoly::evaluate(std::span<const FieldElement> point) const {
  if (static_cast<int>(point.size()) != nvars_) throw Error(ErrorKind::ArityMismatch, "point dimension");
  Field f = point.empty() ? field_ : point[0].field();
  for (const auto& c : point)
    if (c.field() != f) throw Error(ErrorKind::ContextMismatch, "point coordinates in different fields");
  MultiPoly q = embed(f);
  std::vector<std::vector<Bits>> powers(static_cast<std::size_t>(nvars_));
  for (int v = 0; v < nvars_; ++v) {
    int d = std::max(degree_in(v), 0);
    powers[v].resize(static_cast<std::size_t>(d) + 1);
    powers[v][0] = 1;
    for (int e = 1; e <= d; ++e) powers[v][e] = f->mul(powers[v][e - 1], point[v].bits());
  }
  Bits acc = 0;
  for (const Term& t : q.terms_) {
    Bits x = t.coeff;
    for (int v = 0; v < nvars_; ++v) x = f->mul(x, powers[v][mono_exp(t.mono, v)]);
    acc ^= x;
  }
  return {f, acc};
}

MultiPoly MultiPoly::coeff_in(int var, int k) const {
  std::vector<Term> out;
  for (const Term& t : terms_)
    if (mono_exp(t.mono, var) == k) out.push_back({t.mono - mono_unit(var, k), t.coeff});
  return from_terms(field_, nvars_, std::move(out));
}

MultiPoly MultiPoly::specialize(int var, const FieldElement& value) const {
  Field f = value.field();
  MultiPoly q = embed(f);
  std::vector<Bits> powers(static_cast<std::size_t>(std::max(degree_in(var), 0)) + 1, 1);
  for (std::size_t e = 1; e < powers.size(); ++e) powers[e] = f->mul(powers[e - 1], value.bits());
  std::vector<Term> out;
  out.reserve(q.terms_.size());
  for (const Term& t : q.terms_) {
    int e = mono_exp(t.mono, var);
    out.push_back({t.mono - mono_unit(var, e), f->mul(t.coeff, powers[e])});
  }
  return from_terms(f, nvars_, std::move(out));
}

UniPoly MultiPoly::to_univariate(int keep, std::span<const FieldElement> values) const {
  if (static_cast<int>(values.size()) != nvars_) throw Error(ErrorKind::ArityMismatch, "value vector length");
  Field f = field_;
  for (int v = 0; v < nvars_; ++v)
    if (v != keep) f = values[v].field();
  MultiPoly q = embed(f);
  for (int v = 0; v < nvars_; ++v)
    if (v != keep) q = q.specialize(v, values[v]);
  std::vector<Bits> c(static_cast<std::size_t>(std::max(q.degree_in(keep), 0)) + 1, 0);
  for (const Term& t : q.terms_) c[mono_exp(t.mono, keep)] ^= t.coeff;
  return UniPoly(f, std::move(c));
}

MultiPoly MultiPoly::remap(int new_nvars, std::span<const int> mapping) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    Monomial m = 0;
    for (int v = 0; v < nvars_; ++v) {
      int e = mono_exp(t.mono, v);
      if (e == 0) continue;
      if (mapping[v] < 0 || mapping[v] >= new_nvars) throw Error(ErrorKind::ArityMismatch, "variable dropped by remap");
      m += mono_unit(mapping[v], e);
    }
    out.push_back({m, t.coeff});
  }
  return from_terms(field_, new_nvars, std::move(out));
}

MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> map) {
  if (static_cast<int>(map.size()) != p.nvars()) throw Error(ErrorKind::ArityMismatch, "substitution arity");
  if (map.empty()) return p;
  Field f = map[0].field();
  const int nv = map[0].nvars();
  for (const auto& m : map) {
    if (m.field() != f) throw Error(ErrorKind::ContextMismatch, "substitution maps over different fields");
    if (m.nvars() != nv) throw Error(ErrorKind::ArityMismatch, "substitution maps in different rings");
  }
  MultiPoly q = p.embed(f);
  std::vector<std::vector<MultiPoly>> powers(map.size());
  for (std::size_t v = 0; v < map.size(); ++v) {
    int d = std::max(q.degree_in(static_cast<int>(v)), 0);
    powers[v].reserve(static_cast<std::size_t>(d) + 1);
    powers[v].push_back(MultiPoly::constant(FieldElement::one(f), nv));
    for (int e = 1; e <= d; ++e) powers[v].push_back(powers[v].back() * map[v]);
  }
  std::vector<Term> acc;
  for (const Term& t : q.terms()) {
    MultiPoly prod = MultiPoly::constant({f, t.coeff}, nv);
    for (std::size_t v = 0; v < map.size(); ++v) {
      int e = mono_exp(t.mono, static_cast<int>(v));
      if (e > 0) prod = prod * powers[v][e];
    }
    acc.insert(acc.end(), prod.terms().begin(), prod.terms().end());
  }
  return MultiPoly::from_terms(f, nv, std::move(acc));
}

MultiPoly partial(const MultiPoly& p, int var) {
  if (var < 0 || var >= p.nvars()) throw Error(ErrorKind::ArityMismatch, "variable index out of range");
  std::vector<Term> out;
  for (const Term& t : p.terms()) {
    int e = mono_exp(t.mono, var);
    if (e % 2 == 1) out.push_back({t.mono - mono_unit(var), t.coeff});
  }
  return MultiPoly::from_terms(p.field(), p.nvars(), std::move(out));
}

MultiPoly translate(const MultiPoly& p, std::span<const FieldElement> pt) {
  if (static_cast<int>(pt.size()) != p.nvars()) throw Error(ErrorKind::ArityMismatch, "point dimension");
  Field f = pt.empty() ? p.field() : pt[0].field();
  std::vector<MultiPoly> map;
  for (int v = 0; v < p.nvars(); ++v)
    map.push_back(MultiPoly::variable(f, p.nvars(), v) + MultiPoly::constant(pt[v], p.nvars()));
  return substitute(p, map);
}

int multiplicity_at(const MultiPoly& p, std::span<const FieldElement> pt) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "multiplicity of the zero polynomial");
  return translate(p, pt).min_total_degree();
}

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
  if (a.field() != b.field()) throw Error(ErrorKind::ContextMismatch, "polynomials over different fields");
  Field f = a.field();
  const Term lb = b.lead();
  const Bits inv_lb = f->inv(lb.coeff);
  std::map<Monomial, Bits, GrlexGreater> rem;
  for (const Term& t : a.terms()) rem.emplace(t.mono, t.coeff);
  std::vector<Term> quot;
  while (!rem.empty()) {
    auto [m, c] = *rem.begin();
    if (!mono_divides(lb.mono, m))
      throw Error(ErrorKind::DivisionNotExact, "multivariate division leaves a remainder");
    Monomial qm = m - lb.mono;
    Bits qc = f->mul(c, inv_lb);
    quot.push_back({qm, qc});
    for (const Term& t : b.terms()) {
      Monomial mm = t.mono + qm;
      Bits cc = f->mul(t.coeff, qc);
      auto [it, inserted] = rem.try_emplace(mm, cc);
      if (!inserted) {
        it->second ^= cc;
        if (it->second == 0) rem.erase(it);
      }
    }
  }
  return MultiPoly::from_terms(f, a.nvars(), std::move(quot));
}

MultiPoly divide_by_var_power(const MultiPoly& a, int var, int k) {
  std::vector<Term> out;
  out.reserve(a.size());
  for (const Term& t : a.terms()) {
    if (mono_exp(t.mono, var) < k)
      throw Error(ErrorKind::DivisionNotExact, "variable power does not divide");
    out.push_back({t.mono - mono_unit(var, k), t.coeff});
  }
  return MultiPoly::from_terms(a.field(), a.nvars(), std::move(out));
}

std::string format(const MultiPoly& p, std::span<const std::string> names) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const Term& t : p.terms()) {
    if (!s.empty()) s += " + ";
    std::string mono;
    for (int v = 0; v < p.nvars(); ++v) {
      int e = mono_exp(t.mono, v);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += static_cast<std::size_t>(v) < names.size() ? names[v] : kDefaultNames[v];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    FieldElement c(p.field(), t.coeff);
    if (mono.empty())
      s += gf2m::format(c);
    else if (c.is_one())
      s += mono;
    else
      s += gf2m::format(c) + "*" + mono;
  }
  return s;
}

MultiPoly dehomogenize(const MultiPoly& p, int var) {
  std::vector<int> mapping;
  for (int i = 0, k = 0; i < p.nvars(); ++i) mapping.push_back(i == var ? 0 : k++);
  return p.specialize(var, FieldElement::one(p.field())).remap(p.nvars() - 1, mapping);
}

}  // namespace lehmer::poly
