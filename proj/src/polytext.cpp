#include "lehmer/polytext.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace lehmer::poly {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_exponent(std::string_view s, std::string_view term) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 0)
    throw Error(ErrorKind::ParseError, "bad exponent in term '" + std::string(term) + "'");
  return v;
}

void parse_header(std::string_view line, DataFile& out) {
  for (const auto& part : split(line, ';')) {
    if (part.empty()) continue;
    auto colon = part.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::ParseError, "header part without ':' in '" + part + "'");
    std::string key = trim(std::string_view(part).substr(0, colon));
    std::string value = trim(std::string_view(part).substr(colon + 1));
    if (key == "vars") {
      out.vars = split_ws(value);
    } else if (key == "weights") {
      out.weights.clear();
      for (const auto& w : split_ws(value)) out.weights.push_back(parse_exponent(w, value));
    } else if (key == "field") {
      out.field = gf2m::parse_field_header(value);
    } else {
      throw Error(ErrorKind::ParseError, "unknown header key '" + key + "'");
    }
  }
}

}  // namespace

MultiPoly parse_poly(std::string_view text, Field f, std::span<const std::string> vars) {
  const int n = static_cast<int>(vars.size());
  std::string body = trim(text);
  if (body.empty()) throw Error(ErrorKind::ParseError, "empty polynomial");
  std::vector<Term> terms;
  for (const auto& term : split(body, '+')) {
    if (term.empty()) throw Error(ErrorKind::ParseError, "empty term in '" + body + "'");
    FieldElement coeff = FieldElement::one(f);
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    for (const auto& factor : split(term, '*')) {
      std::string name = factor;
      int e = 1;
      auto caret = factor.find('^');
      if (caret != std::string::npos) {
        name = trim(std::string_view(factor).substr(0, caret));
        e = parse_exponent(trim(std::string_view(factor).substr(caret + 1)), term);
      }
      auto it = std::find(vars.begin(), vars.end(), name);
      if (it != vars.end()) {
        exps[static_cast<std::size_t>(it - vars.begin())] += e;
      } else {
        coeff *= gf2m::parse_element(factor, f);
      }
    }
    terms.push_back({mono_make(exps), coeff.bits()});
  }
  return MultiPoly::from_terms(f, n, std::move(terms));
}

ProjPoint parse_point(std::string_view text, Field f) {
  std::string s = trim(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw Error(ErrorKind::ParseError, "point must be written (a : b : c), got '" + s + "'");
  std::vector<FieldElement> coords;
  for (const auto& c : split(std::string_view(s).substr(1, s.size() - 2), ':')) coords.push_back(gf2m::parse_element(c, f));
  return ProjPoint(std::move(coords));
}

DataFile parse_data_file(std::string_view text) {
  DataFile out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    bool continuation = std::isspace(static_cast<unsigned char>(line[0])) != 0;
    if (continuation) {
      if (out.entries.empty())
        throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": continuation before any entry");
      out.entries.back().second += " " + trim(line);
      continue;
    }
    auto eq = line.find('=');
    auto colon = line.find(':');
    if (eq == std::string::npos || (colon != std::string::npos && colon < eq)) {
      parse_header(line, out);
      continue;
    }
    std::string name = trim(std::string_view(line).substr(0, eq));
    if (name.empty()) throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": entry without a name");
    if (out.has(name)) throw Error(ErrorKind::ParseError, "duplicate entry '" + name + "'");
    out.entries.emplace_back(name, trim(std::string_view(line).substr(eq + 1)));
  }
  if (out.field == nullptr) throw Error(ErrorKind::ParseError, "missing field header");
  if (out.entries.empty()) throw Error(ErrorKind::ParseError, "no entries");
  if (out.weights.empty()) out.weights.assign(out.vars.size(), 1);
  if (out.weights.size() != out.vars.size()) throw Error(ErrorKind::ParseError, "vars and weights differ in length");
  return out;
}

DataFile load_data_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_data_file(buf.str());
}

bool DataFile::has(std::string_view name) const {
  return std::any_of(entries.begin(), entries.end(), [&](const auto& e) { return e.first == name; });
}

const std::string& DataFile::raw(std::string_view name) const {
  for (const auto& e : entries)
    if (e.first == name) return e.second;
  throw Error(ErrorKind::ParseError, "missing entry '" + std::string(name) + "'");
}

MultiPoly DataFile::poly(std::string_view name) const { return parse_poly(raw(name), field, vars); }

MultiPoly DataFile::poly(std::string_view name, int nvars) const {
  if (nvars > static_cast<int>(vars.size())) throw Error(ErrorKind::ArityMismatch, "more variables than declared");
  return parse_poly(raw(name), field, std::span(vars).first(static_cast<std::size_t>(nvars)));
}

ProjPoint DataFile::point(std::string_view name) const { return parse_point(raw(name), field); }

std::string format_header(const DataFile& file) {
  std::string s = "vars:";
  for (const auto& v : file.vars) s += " " + v;
  s += "; weights:";
  for (int w : file.weights) s += " " + std::to_string(w);
  return s + "; field: " + gf2m::format_field_header(file.field);
}

}  // namespace lehmer::poly
