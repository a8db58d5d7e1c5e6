#pragma once

// Text format for polynomial and point data files.
//
//   # comment
//   vars: x y z w; weights: 1 1 1 6; field: g^5=g^2+1
//   s = g^16*x^8*y^3*z + g^12*x^8*y*z^3
//       + g^20*x^7*y^5
//   p0 = (g^14 : g^7 : 1)
//
// An entry continues on following lines that start with whitespace.
// Coefficients use the gf2m element format; a coefficient of 1 may be
// omitted.

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lehmer/multipoly.hpp"
#include "lehmer/projpoint.hpp"

namespace lehmer::poly {

struct DataFile {
  Field field = nullptr;
  std::vector<std::string> vars;
  std::vector<int> weights;
  // Raw right-hand sides in file order.
  std::vector<std::pair<std::string, std::string>> entries;

  bool has(std::string_view name) const;
  const std::string& raw(std::string_view name) const;  // throws ParseError
  MultiPoly poly(std::string_view name) const;
  // Polynomial in the first n variables only.
  MultiPoly poly(std::string_view name, int nvars) const;
  ProjPoint point(std::string_view name) const;
};

DataFile parse_data_file(std::string_view text);
DataFile load_data_file(const std::filesystem::path& path);

MultiPoly parse_poly(std::string_view text, Field f, std::span<const std::string> vars);
ProjPoint parse_point(std::string_view text, Field f);

std::string format_header(const DataFile& file);

}  // namespace lehmer::poly
