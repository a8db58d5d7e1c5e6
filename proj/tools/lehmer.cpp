// lehmer verify <suite> [--data DIR] [--format json|md] [--precision P]
//                       [--ext-bound N] [--timing]
// Exit status 0 iff the suite passes, 1 when it fails or errors.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lehmer/error.hpp"
#include "lehmer/suites.hpp"

namespace {

lehmer::lattice::Rat parse_precision(const std::string& s) {
  lehmer::lattice::Rat q;
  auto e = s.find_first_of("eE");
  if (e != std::string::npos) {
    // 1e-9 style
    q = lehmer::lattice::Rat(s.substr(0, e));
    int exp = std::stoi(s.substr(e + 1));
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp < 0 ? -exp : exp));
    if (exp < 0)
      q /= p10;
    else
      q *= p10;
  } else {
    q = lehmer::lattice::Rat(s);
  }
  q.canonicalize();
  if (q <= 0) throw CLI::ValidationError("--precision", "must be positive");
  return q;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the Lehmer Enriques surface data"};
  app.require_subcommand(1);

  lehmer::suites::Config cfg;
  std::string suite, format = "md", precision = "1/1000000000", data = cfg.data_dir.string();
  bool timing = false;

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(lehmer::suites::suite_names()));
  verify->add_option("--data", data, "Data directory")->check(CLI::ExistingDirectory);
  verify->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "md"}));
  verify->add_option("--precision", precision, "Width of real-root intervals, e.g. 1e-9 or 1/1000000000");
  verify->add_option("--ext-bound", cfg.ext_bound, "Largest extension degree searched for roots")
      ->check(CLI::Range(1, 20));
  verify->add_flag("--timing", timing, "Record elapsed_ms per node");

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.data_dir = data;
    cfg.precision = parse_precision(precision);
    lehmer::report::Report r = lehmer::suites::run_suite(suite, cfg);
    lehmer::report::EmitOptions opt{timing};
    std::cout << (format == "md" ? lehmer::report::emit_markdown(r, opt) : lehmer::report::emit_json(r, opt));
    return r.passed() ? 0 : 1;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "lehmer: " << e.what() << "\n";
    return 2;
  }
}
