#include "lehmer/rational_function.hpp"

namespace lehmer::poly {

namespace {

constexpr int kW = 3;

}  // namespace

DoublePlane::DoublePlane(MultiPoly s) : s_(std::move(s)) {
  if (s_.nvars() != 4 || s_.degree_in(kW) != 0) throw Error(ErrorKind::ArityMismatch, "s must be a polynomial in x, y, z");
}

MultiPoly DoublePlane::reduce(const MultiPoly& p) const {
  if (p.degree_in(kW) <= 1) return p;
  MultiPoly even(p.field(), p.nvars()), odd(p.field(), p.nvars());
  MultiPoly spow = MultiPoly::constant(FieldElement::one(p.field()), p.nvars());
  for (int k = 0; k <= p.degree_in(kW); k += 2) {
    even += p.coeff_in(kW, k) * spow;
    odd += p.coeff_in(kW, k + 1) * spow;
    spow = spow * s_;
  }
  return even + odd * MultiPoly::variable(p.field(), p.nvars(), kW);
}

RationalFunction::RationalFunction(const DoublePlane& plane, MultiPoly num, MultiPoly den)
    : plane_(&plane), num_(plane.reduce(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  if (den_.degree_in(kW) != 0) throw Error(ErrorKind::InvariantViolation, "denominator involves w");
}

RationalFunction RationalFunction::pullback(std::span<const MultiPoly> map) const {
  for (int i = 0; i < kW; ++i)
    if (map[static_cast<std::size_t>(i)].degree_in(kW) != 0)
      throw Error(ErrorKind::InvariantViolation, "image of a plane coordinate involves w");
  return RationalFunction(*plane_, substitute(num_, map), substitute(den_, map));
}

RationalFunction RationalFunction::derive_w(const MultiPoly& h) const {
  return RationalFunction(*plane_, h * partial(num_, kW), den_);
}

RationalFunction RationalFunction::scale(const FieldElement& c) const {
  return RationalFunction(*plane_, num_.scale(c), den_);
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.plane_->reduce(a.num_ * b.den_) == a.plane_->reduce(b.num_ * a.den_);
}

std::optional<FieldElement> constant_ratio(const RationalFunction& a, const RationalFunction& b) {
  MultiPoly p = a.plane_->reduce(a.num_ * b.den_);
  MultiPoly q = a.plane_->reduce(b.num_ * a.den_);
  if (q.is_zero()) return std::nullopt;
  if (p.is_zero()) return FieldElement::zero(p.field());
  FieldElement c = FieldElement(p.field(), p.lead().coeff) / FieldElement(q.field(), q.lead().coeff);
  if (p == q.scale(c)) return c;
  return std::nullopt;
}

}  // namespace lehmer::poly
