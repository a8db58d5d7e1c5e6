#include "lehmer/unipoly.hpp"

#include <algorithm>

namespace lehmer::poly {

UniPoly::UniPoly(Field f, std::vector<Bits> coeffs) : field_(f), c_(std::move(coeffs)) { normalize(); }

void UniPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void UniPoly::check(const UniPoly& o) const {
  if (field_ != o.field_) throw Error(ErrorKind::ContextMismatch, "polynomials over different fields");
}

UniPoly UniPoly::constant(const FieldElement& c) { return UniPoly(c.field(), {c.bits()}); }

UniPoly UniPoly::linear(const FieldElement& r) { return UniPoly(r.field(), {r.bits(), 1}); }

UniPoly UniPoly::from_mask(Field f, Bits mask) {
  std::vector<Bits> c;
  for (int i = 0; mask >> i; ++i) c.push_back((mask >> i) & 1);
  return UniPoly(f, std::move(c));
}

UniPoly UniPoly::monic() const {
  if (is_zero() || c_.back() == 1) return *this;
  Bits inv = field_->inv(c_.back());
  std::vector<Bits> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = field_->mul(c_[i], inv);
  return UniPoly(field_, std::move(out));
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly(field_);
  std::vector<Bits> out(c_.size() - 1, 0);
  for (std::size_t i = 1; i < c_.size(); i += 2) out[i - 1] = c_[i];
  return UniPoly(field_, std::move(out));
}

FieldElement UniPoly::eval(const FieldElement& x) const {
  if (x.field() != field_) throw Error(ErrorKind::ContextMismatch, "evaluation point in another field");
  Bits acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_->mul(acc, x.bits()) ^ *it;
  return {field_, acc};
}

FieldElement UniPoly::eval_in(const FieldElement& x) const {
  if (x.field() == field_) return eval(x);
  return embed(x.field()).eval(x);
}

UniPoly UniPoly::embed(Field sup) const {
  if (sup == field_) return *this;
  std::vector<Bits> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = gf2m::embed({field_, c_[i]}, sup).bits();
  return UniPoly(sup, std::move(out));
}

UniPoly UniPoly::sqrt() const {
  std::vector<Bits> out((c_.size() + 1) / 2, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i % 2 == 1 && c_[i] != 0) throw Error(ErrorKind::DivisionNotExact, "polynomial is not a square");
    if (i % 2 == 0) out[i / 2] = field_->sqrt(c_[i]);
  }
  return UniPoly(field_, std::move(out));
}

UniPoly UniPoly::scale(const FieldElement& c) const {
  if (c.field() != field_) throw Error(ErrorKind::ContextMismatch, "scalar from another field");
  std::vector<Bits> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = field_->mul(c_[i], c.bits());
  return UniPoly(field_, std::move(out));
}

UniPoly UniPoly::shift(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Bits> out(static_cast<std::size_t>(k), 0);
  out.insert(out.end(), c_.begin(), c_.end());
  return UniPoly(field_, std::move(out));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (field_ == nullptr) field_ = o.field_;
  if (o.field_ != nullptr) check(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] ^= o.c_[i];
  normalize();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  a.check(b);
  if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
  const auto& red = a.field_->reducer();
  const std::size_t na = a.c_.size(), nb = b.c_.size();
  std::vector<Bits> brev(b.c_.rbegin(), b.c_.rend());
  std::vector<Bits> out(na + nb - 1);
  // out[k] = sum_i a[i] b[k-i]; with brev[j] = b[nb-1-j] the inner sum is a
  // contiguous dot product of a[lo..hi] with brev[nb-1-k+lo ..].
  for (std::size_t k = 0; k < out.size(); ++k) {
    std::size_t lo = k + 1 > nb ? k + 1 - nb : 0;
    std::size_t hi = std::min(k, na - 1);
    out[k] = kernels::active().dot(red, a.c_.data() + lo, brev.data() + (nb - 1 - k + lo), hi - lo + 1);
  }
  return UniPoly(a.field_, std::move(out));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.field() != b.field()) throw Error(ErrorKind::ContextMismatch, "polynomials over different fields");
  Field f = a.field();
  if (a.degree() < b.degree()) return {UniPoly(f), a};
  std::vector<Bits> r = a.coeffs();
  const std::vector<Bits>& bc = b.coeffs();
  const int db = b.degree();
  const Bits inv_lead = f->inv(bc.back());
  std::vector<Bits> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
  const auto& red = f->reducer();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    Bits factor = f->mul(r[i], inv_lead);
    q[i - db] = factor;
    kernels::active().axpy(red, factor, bc.data(), r.data() + (i - db), bc.size());
  }
  r.resize(static_cast<std::size_t>(db));
  return {UniPoly(f, std::move(q)), UniPoly(f, std::move(r))};
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly divide_exact(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorKind::DivisionNotExact, "polynomial division leaves a remainder");
  return q;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniPoly mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& m) { return (a * b) % m; }

UniPoly pow(const UniPoly& a, unsigned e) {
  UniPoly result(a.field(), {1});
  UniPoly base = a;
  while (e != 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

UniPoly frobenius_mod(const UniPoly& a, unsigned k, const UniPoly& m) {
  UniPoly r = a % m;
  for (unsigned i = 0; i < k; ++i) r = mulmod(r, r, m);
  return r;
}

std::string format(const UniPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int i = p.degree(); i >= 0; --i) {
    if (p.coeff_bits(i) == 0) continue;
    if (!s.empty()) s += " + ";
    FieldElement c = p.coeff(i);
    bool unit = c.is_one();
    if (!unit || i == 0) s += gf2m::format(c);
    if (i > 0) {
      if (!unit) s += "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace lehmer::poly
