#include "lehmer/report.hpp"

#include <sstream>

namespace lehmer::report {

const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "error";
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "error") return Status::Error;
  throw Error(ErrorKind::ParseError, "unknown status '" + s + "'");
}

namespace {

Status worse(Status a, Status b) { return static_cast<int>(a) >= static_cast<int>(b) ? a : b; }

}  // namespace

Report Report::leaf(std::string name, bool ok, Json witness) {
  Report r;
  r.name = std::move(name);
  r.status = ok ? Status::Pass : Status::Fail;
  r.witness = std::move(witness);
  return r;
}

Report Report::node(std::string name) {
  Report r;
  r.name = std::move(name);
  return r;
}

Report Report::error(std::string name, const std::exception& e) {
  Report r;
  r.name = std::move(name);
  r.status = Status::Error;
  r.witness = Json{{"error", e.what()}};
  return r;
}

Report& Report::add(Report child) {
  status = worse(status, child.status);
  children.push_back(std::move(child));
  return children.back();
}

void Report::settle() {
  if (children.empty()) return;
  Status s = Status::Pass;
  for (auto& c : children) {
    c.settle();
    s = worse(s, c.status);
  }
  status = s;
}

const Report* Report::find(const std::string& n) const {
  if (name == n) return this;
  for (const auto& c : children)
    if (const Report* r = c.find(n)) return r;
  return nullptr;
}

std::size_t Report::leaf_count() const {
  if (children.empty()) return 1;
  std::size_t n = 0;
  for (const auto& c : children) n += c.leaf_count();
  return n;
}

Json witness(const gf2m::FieldElement& x) { return gf2m::format(x); }

Json witness(const std::vector<gf2m::FieldElement>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(gf2m::format(x));
  return a;
}

Json witness(const lattice::Rat& q) { return q.get_str(); }

Json witness(const lattice::Interval& iv) { return Json::array({iv.lo.get_str(), iv.hi.get_str()}); }

Json witness(const lattice::IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_si());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json witness(const lattice::IntPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_si());
  return a;
}

namespace {

Json node_json(const Report& r, const EmitOptions& opt) {
  Json j;
  j["name"] = r.name;
  j["status"] = to_string(r.status);
  j["witness"] = r.witness;
  j["elapsed_ms"] = (opt.timing && r.elapsed_ms) ? Json(*r.elapsed_ms) : Json(nullptr);
  if (!r.children.empty()) {
    Json kids = Json::array();
    for (const auto& c : r.children) kids.push_back(node_json(c, opt));
    j["children"] = std::move(kids);
  }
  return j;
}

std::string inline_witness(const Json& w) {
  if (w.is_null()) return {};
  if (w.is_string()) return w.get<std::string>();
  return w.dump();
}

void markdown(const Report& r, const EmitOptions& opt, int depth, std::ostringstream& out) {
  out << std::string(static_cast<std::size_t>(2 * depth), ' ') << "- [" << to_string(r.status) << "] " << r.name;
  if (!r.witness.is_null()) {
    if (r.witness.is_object()) {
      out << '\n';
      for (const auto& [k, v] : r.witness.items())
        out << std::string(static_cast<std::size_t>(2 * depth + 4), ' ') << k << ": " << inline_witness(v) << '\n';
    } else {
      out << ": " << inline_witness(r.witness) << '\n';
    }
  } else {
    out << '\n';
  }
  if (opt.timing && r.elapsed_ms)
    out << std::string(static_cast<std::size_t>(2 * depth + 4), ' ') << "elapsed_ms: " << *r.elapsed_ms << '\n';
  for (const auto& c : r.children) markdown(c, opt, depth + 1, out);
}

}  // namespace

Json to_json(const Report& r, const EmitOptions& opt) {
  Json j;
  j["schema"] = 1;
  Json body = node_json(r, opt);
  for (auto& [k, v] : body.items()) j[k] = v;
  return j;
}

Report from_json(const Json& j) {
  Report r;
  r.name = j.at("name").get<std::string>();
  r.status = status_from_string(j.at("status").get<std::string>());
  r.witness = j.value("witness", Json(nullptr));
  if (j.contains("elapsed_ms") && !j["elapsed_ms"].is_null()) r.elapsed_ms = j["elapsed_ms"].get<double>();
  if (j.contains("children"))
    for (const auto& c : j["children"]) r.children.push_back(from_json(c));
  return r;
}

std::string emit_json(const Report& r, const EmitOptions& opt) { return to_json(r, opt).dump(2) + "\n"; }

std::string emit_markdown(const Report& r, const EmitOptions& opt) {
  std::ostringstream out;
  out << "# " << r.name << ": " << to_string(r.status) << "\n\n";
  markdown(r, opt, 0, out);
  return out.str();
}

}  // namespace lehmer::report
