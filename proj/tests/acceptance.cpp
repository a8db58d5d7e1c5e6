// Acceptance run: one line per criterion, "[PASS] n description" or
// "[FAIL] n description", followed by the time spent. Exit status is the
// number of failed criteria.

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "lehmer/suites.hpp"

using lehmer::report::Report;

namespace {

struct Criterion {
  std::string description;
  std::vector<std::string> nodes;  // report nodes that must pass
  double budget_ms;
};

double elapsed(const Report& r) { return r.elapsed_ms.value_or(0.0); }

std::string run_cli() {
  std::string out;
  FILE* p = popen(LEHMER_CLI " verify all --format json", "r");
  if (p == nullptr) return out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  if (pclose(p) != 0) out.clear();
  return out;
}

}  // namespace

int main() {
  Report all = lehmer::suites::run_suite("all");

  const std::vector<Criterion> criteria{
      {"coxeter characteristic polynomial",
       {"char poly on E10 = P10", "char poly on Z^{1,10} = (x - 1) P10"},
       1000},
      {"lambda10 reproduction", {"dynamical degree"}, 1000},
      {"mod 2 spectrum", {"mod 2 spectrum"}, 1000},
      {"lagrangian census", {"quadratic space", "census"}, 120000},
      {"salem certification", {"trace polynomial"}, 1000},
      {"E10 parity", {"E10 Gram matrix is even, so E10(2) has no (-2)-vectors"}, 1000},
      {"beta solver", {"group law", "beta solver", "valid scalars"}, 1000},
      {"orbit and cubic", {"orbit", "cubic B"}, 1000},
      {"equivariance identity", {"equivariance"}, 10000},
      {"inverse and derivation", {"sigma0 inverse"}, 30000},
      {"singular locus", {"singular locus"}, 120000},
      {"multiplicities and A1", {"multiplicities", "blow-up charts"}, 30000},
      {"cross-model consistency", {"alpha consistency"}, 10000},
  };

  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    bool ok = true;
    double ms = 0;
    std::string why;
    for (const auto& name : c.nodes) {
      const Report* r = all.find(name);
      if (r == nullptr) {
        ok = false;
        why = "missing node '" + name + "'";
        continue;
      }
      if (!r->passed()) {
        ok = false;
        why = "'" + name + "' " + lehmer::report::to_string(r->status);
      }
      ms += elapsed(*r);
    }
    if (ms > c.budget_ms) {
      ok = false;
      why = "over budget";
    }
    failed += !ok;
    std::printf("[%s] %d %s (%.1f ms)%s\n", ok ? "PASS" : "FAIL", index, c.description.c_str(), ms,
                why.empty() ? "" : ("  " + why).c_str());
  }

  std::string a = run_cli(), b = run_cli();
  bool same = !a.empty() && a == b;
  failed += !same;
  std::printf("[%s] 14 determinism of verify all --format json (%zu bytes)\n", same ? "PASS" : "FAIL", a.size());
  return failed;
}
