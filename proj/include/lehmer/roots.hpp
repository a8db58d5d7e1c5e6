#pragma once

// Factorization and root finding for univariate polynomials over GF(2^m):
// squarefree decomposition, distinct-degree and equal-degree splitting
// (trace-map variant for characteristic 2).

#include <cstdint>
#include <vector>

#include "lehmer/unipoly.hpp"

namespace lehmer::poly {

// Seed of the equal-degree splitting generator. Fixed so reports reproduce.
inline constexpr std::uint64_t kSplitSeed = 0x5eed'2024'10a5'3eedULL;

struct Factor {
  UniPoly poly;  // monic
  int multiplicity = 1;
};

// f = lc * prod g_i^(m_i), g_i squarefree, monic, pairwise coprime.
std::vector<Factor> squarefree_decomposition(const UniPoly& f);

// Squarefree monic f -> (product of all irreducible factors of degree d, d).
std::vector<std::pair<UniPoly, int>> distinct_degree(const UniPoly& f);

// Squarefree monic f whose irreducible factors all have degree d.
std::vector<UniPoly> equal_degree(const UniPoly& f, int d, std::uint64_t seed = kSplitSeed);

// Complete factorization into monic irreducibles, canonically ordered
// (degree, then coefficient bits).
std::vector<Factor> factor(const UniPoly& f, std::uint64_t seed = kSplitSeed);

bool is_irreducible(const UniPoly& f);

struct Root {
  FieldElement value;   // lives in the extension where it was split off
  int multiplicity = 1;
  int min_degree = 1;   // smallest d with value in GF(2^d)
};

struct RootSet {
  std::vector<Root> roots;
  // Product of the irreducible factors (with multiplicity) whose roots lie in
  // extensions of absolute degree above the bound.
  UniPoly cofactor;
  bool bound_exceeded = false;
};

// All roots of p lying in extensions GF(2^M) with M <= search_degree_bound.
// Roots from an irreducible factor of degree e over GF(2^m) live in
// gf2(m*e); roots in the base field stay in p's field.
RootSet uni_roots(const UniPoly& p, int search_degree_bound, std::uint64_t seed = kSplitSeed);

}  // namespace lehmer::poly
