#include "lehmer/projpoint.hpp"

#include <numeric>

namespace lehmer::poly {

ProjPoint::ProjPoint(std::vector<FieldElement> coords, std::vector<int> weights)
    : coords_(std::move(coords)), weights_(std::move(weights)) {
  if (weights_.empty()) weights_.assign(coords_.size(), 1);
  if (weights_.size() != coords_.size()) throw Error(ErrorKind::ArityMismatch, "weights and coordinates differ in length");
  for (const auto& c : coords_)
    if (c.field() != coords_[0].field()) throw Error(ErrorKind::ContextMismatch, "coordinates in different fields");
  int last = -1;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (weights_[i] == 1 && !coords_[i].is_zero()) last = static_cast<int>(i);
  if (last < 0) {
    for (const auto& c : coords_)
      if (!c.is_zero()) return;  // only weighted coordinates nonzero: left as given
    throw Error(ErrorKind::InvariantViolation, "projective point with all coordinates zero");
  }
  FieldElement lam = coords_[static_cast<std::size_t>(last)].inv();
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] *= lam.pow(weights_[i]);
}

ProjPoint ProjPoint::embed(Field sup) const {
  std::vector<FieldElement> c;
  c.reserve(coords_.size());
  for (const auto& x : coords_) c.push_back(gf2m::embed(x, sup));
  return ProjPoint(std::move(c), weights_);
}

ProjPoint ProjPoint::minimal(Field hint) const {
  int d = 1;
  for (const auto& x : coords_) d = std::lcm(d, gf2m::minimal_degree(x));
  Field target = hint != nullptr && hint->degree() % d == 0 && field()->degree() % hint->degree() == 0 ? hint : gf2m::gf2(d);
  if (target == field()) return *this;
  if (field()->degree() % target->degree() != 0) return *this;
  std::vector<FieldElement> c;
  for (const auto& x : coords_) c.push_back(*gf2m::restrict_to(x, target));
  return ProjPoint(std::move(c), weights_);
}

int ProjPoint::chart() const {
  for (int i = static_cast<int>(coords_.size()) - 1; i >= 0; --i)
    if (weights_[i] == 1 && !coords_[i].is_zero()) return i;
  return -1;
}

std::vector<FieldElement> ProjPoint::affine(int i) const {
  if (coords_.at(static_cast<std::size_t>(i)).is_zero()) throw Error(ErrorKind::DivisionByZero, "point not in this chart");
  FieldElement inv = coords_[i].inv();
  std::vector<FieldElement> out;
  for (std::size_t j = 0; j < coords_.size(); ++j)
    if (static_cast<int>(j) != i) out.push_back(coords_[j] * inv.pow(weights_[j]));
  return out;
}

Field common_field(Field a, Field b) {
  if (a == b) return a;
  int m = std::lcm(a->degree(), b->degree());
  if (m > gf2m::kMaxDegree) throw Error(ErrorKind::NoEmbedding, "no common extension within the supported degree");
  if (a->degree() == m) return a;
  if (b->degree() == m) return b;
  return gf2m::gf2(m);
}

bool operator==(const ProjPoint& a, const ProjPoint& b) {
  if (a.size() != b.size() || a.weights_ != b.weights_) return false;
  if (a.size() == 0) return true;
  Field f = common_field(a.field(), b.field());
  ProjPoint x = a.embed(f), y = b.embed(f);
  return x.coords_ == y.coords_;
}

std::optional<ProjPoint> apply_map(std::span<const MultiPoly> map, const ProjPoint& p) {
  std::vector<FieldElement> img;
  bool nonzero = false;
  for (const auto& m : map) {
    img.push_back(m.evaluate(p.coords()));
    nonzero = nonzero || !img.back().is_zero();
  }
  if (!nonzero) return std::nullopt;
  return ProjPoint(std::move(img));
}

std::string format(const ProjPoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) s += " : ";
    s += gf2m::format(p[i]);
  }
  return s + ")";
}

}  // namespace lehmer::poly
