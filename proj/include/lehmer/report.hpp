#pragma once

// Verification outcome trees and their JSON / markdown renderings.

#include <chrono>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lehmer/gf2m.hpp"
#include "lehmer/intpoly.hpp"

namespace lehmer::report {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Error };

const char* to_string(Status s) noexcept;
Status status_from_string(const std::string& s);

struct Report {
  std::string name;
  Status status = Status::Pass;
  Json witness;                       // null when there is nothing to show
  std::optional<double> elapsed_ms;
  std::vector<Report> children;

  static Report leaf(std::string name, bool ok, Json witness = nullptr);
  static Report node(std::string name);
  // Leaf with status error carrying the exception text.
  static Report error(std::string name, const std::exception& e);

  bool passed() const noexcept { return status == Status::Pass; }
  // Appends a child and folds its status into this node.
  Report& add(Report child);
  // Recomputes internal statuses bottom-up: error beats fail beats pass.
  void settle();
  const Report* find(const std::string& name) const;  // depth-first
  std::size_t leaf_count() const;
};

// Runs body(), catching lehmer::Error and std::exception into an error leaf,
// and records the elapsed time.
template <class F>
Report timed(const std::string& name, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  Report r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = Report::error(name, e);
  }
  if (r.name.empty()) r.name = name;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// ---- witness encodings ----
Json witness(const gf2m::FieldElement& x);            // "g^k"
Json witness(const std::vector<gf2m::FieldElement>& xs);
Json witness(const lattice::Rat& q);                  // "p/q"
Json witness(const lattice::Interval& iv);            // ["lo", "hi"]
Json witness(const lattice::IntMatrix& m);            // rows of integers
Json witness(const lattice::IntPoly& p);              // coefficient list, low degree first

struct EmitOptions {
  bool timing = false;  // elapsed_ms stays null otherwise
};

Json to_json(const Report& r, const EmitOptions& opt = {});
// Inverse of to_json; accepts output with or without the schema key.
Report from_json(const Json& j);
std::string emit_json(const Report& r, const EmitOptions& opt = {});
std::string emit_markdown(const Report& r, const EmitOptions& opt = {});

}  // namespace lehmer::report
