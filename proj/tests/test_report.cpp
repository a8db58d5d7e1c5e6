#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "lehmer/error.hpp"
#include "lehmer/suites.hpp"

using namespace lehmer;
using namespace lehmer::report;

namespace {

std::string slurp(const std::string& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

const Report& all() {
  static const Report r = suites::run_suite("all");
  return r;
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("leaf JSON keys") {
    Json j = to_json(Report::leaf("x", true));
    std::set<std::string> keys;
    for (auto& [k, v] : j.items()) keys.insert(k);
    CHECK(keys == std::set<std::string>{"schema", "name", "status", "witness", "elapsed_ms"});
    CHECK(j["schema"] == 1);
    CHECK(j["elapsed_ms"].is_null());
    Report t = Report::leaf("t", true);
    t.elapsed_ms = 3.5;
    CHECK(to_json(t, {true})["elapsed_ms"] == 3.5);
    CHECK(to_json(t)["elapsed_ms"].is_null());
  }

  TEST_CASE("status folding") {
    Report n = Report::node("n");
    n.add(Report::leaf("a", true));
    CHECK(n.passed());
    n.add(Report::leaf("b", false));
    CHECK(n.status == Status::Fail);
    n.add(Report::error("c", std::runtime_error("boom")));
    CHECK(n.status == Status::Error);
    CHECK(n.leaf_count() == 3);
    Report t = timed("t", []() -> Report { throw Error(ErrorKind::NoSolution, "none"); });
    CHECK(t.status == Status::Error);
    CHECK(t.witness["error"].get<std::string>().find("NoSolution") != std::string::npos);
  }

  TEST_CASE("witness encodings") {
    gf2m::Field f = gf2m::gf32();
    CHECK(witness(gf2m::FieldElement::gen(f, 7)) == "g^7");
    CHECK(witness(lattice::Rat(3, 4)) == "3/4");
    CHECK(witness(lattice::Interval{1, 2}) == Json::array({"1", "2"}));
    CHECK(witness(lattice::IntMatrix::identity(2)) == Json::parse("[[1,0],[0,1]]"));
  }

  TEST_CASE("round trip") {
    Report r = Report::node("root");
    Report c = Report::node("child");
    c.add(Report::leaf("leaf", false, Json{{"k", "g^3"}}));
    r.add(c);
    r.add(Report::leaf("other", true, "1/2"));
    Report back = from_json(Json::parse(emit_json(r)));
    CHECK(emit_json(back) == emit_json(r));
    CHECK(back.status == Status::Fail);
    CHECK(back.find("leaf")->witness["k"] == "g^3");

    Report big = from_json(to_json(all()));
    CHECK(emit_json(big) == emit_json(all()));
  }

  TEST_CASE("suites") {
    CHECK(all().passed());
    CHECK(all().children.size() == 5);
    Report lat = suites::run_suite("lattice");
    CHECK(lat.passed());
    CHECK(lat.find("char poly on E10 = P10") != nullptr);
    try {
      suites::run_suite("bogus");
      FAIL("bogus suite ran");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnknownSuite);
    }
  }

  TEST_CASE("markdown") {
    std::string md = emit_markdown(all());
    CHECK(md.rfind("# all: pass", 0) == 0);
    auto at = md.find("lambda10 interval");
    REQUIRE(at != std::string::npos);
    CHECK(md.find("1.17628", at) != std::string::npos);
  }

  TEST_CASE("golden snapshots") {
    for (const char* name : {"all"}) {
      CAPTURE(name);
      std::string want = slurp(std::string(LEHMER_GOLDEN_DIR) + "/" + name + ".json");
      REQUIRE(!want.empty());
      CHECK(emit_json(all()) == want);
    }
  }
}
