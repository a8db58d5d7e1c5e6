#pragma once

// Named verification suites: all, lattice, salem, lagrangians, cubic,
// surface.

#include <filesystem>
#include <string>
#include <vector>

#include "lehmer/intpoly.hpp"
#include "lehmer/report.hpp"

namespace lehmer::suites {

struct Config {
  std::filesystem::path data_dir = LEHMER_DATA_DIR;
  lattice::Rat precision{1, 1000000000};  // width of real-root intervals
  int ext_bound = 10;                      // extension degree searched for roots
};

const std::vector<std::string>& suite_names();
// Throws UnknownSuite.
report::Report run_suite(const std::string& name, const Config& cfg = {});

}  // namespace lehmer::suites
