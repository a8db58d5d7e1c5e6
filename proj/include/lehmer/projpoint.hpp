#pragma once

// Points of (weighted) projective space over a binary field.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lehmer/multipoly.hpp"

namespace lehmer::poly {

class ProjPoint {
 public:
  ProjPoint() = default;
  // Normalizes so the last nonzero weight-1 coordinate is 1; weighted
  // coordinates are scaled by the matching power. Throws InvariantViolation
  // for the all-zero tuple. Empty weights mean all 1.
  explicit ProjPoint(std::vector<FieldElement> coords, std::vector<int> weights = {});

  Field field() const noexcept { return coords_.empty() ? nullptr : coords_[0].field(); }
  std::size_t size() const noexcept { return coords_.size(); }
  const std::vector<FieldElement>& coords() const noexcept { return coords_; }
  const FieldElement& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<int>& weights() const noexcept { return weights_; }

  ProjPoint embed(Field sup) const;
  // Same point over the smallest field GF(2^d) containing its coordinates,
  // preferring `hint` when it suffices.
  ProjPoint minimal(Field hint = nullptr) const;

  // Index of the last nonzero coordinate; it equals 1 after normalization.
  int chart() const;
  // Affine coordinates in the chart coords[i] = 1, dropping coordinate i.
  std::vector<FieldElement> affine(int i) const;

  // Equality as points; coordinates in different fields are compared in a
  // common extension.
  friend bool operator==(const ProjPoint& a, const ProjPoint& b);

 private:
  std::vector<FieldElement> coords_;
  std::vector<int> weights_;
};

// Smallest field among gf2(lcm) containing both; throws NoEmbedding when
// the lcm exceeds the supported degree.
Field common_field(Field a, Field b);

// Image of a point under a polynomial map; nullopt at a base point.
std::optional<ProjPoint> apply_map(std::span<const MultiPoly> map, const ProjPoint& p);

// "(g^14 : g^7 : 1)"
std::string format(const ProjPoint& p);

}  // namespace lehmer::poly
