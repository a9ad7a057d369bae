#pragma once

#include <string>
#include <vector>

namespace cli {

struct Range {
  int lo = 0;
  int hi = 0;
};

struct SuiteReport {
  std::string name;
  bool pass = true;
  long checks = 0;
  std::string first_failure;
  std::vector<std::string> table_lines;
};

const std::vector<std::string>& all_suite_names();

/// Runs the named invariant suites over the (r, n) ranges, fanning the
/// independent (r, n) cases out over at most `threads` workers.
std::vector<SuiteReport> run_suites(const std::vector<std::string>& names,
                                    Range r_range, Range n_range, int threads);

}  // namespace cli
