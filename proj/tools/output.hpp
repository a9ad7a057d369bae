#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stripless/schubert.hpp"

namespace cli {

struct OutputRecord {
  int r = 0;
  int n = 0;
  std::string formula;
  int degree = 0;
  // Sorted lexicographically by partition; nonzero coefficients only.
  std::vector<std::pair<stripless::Partition, stripless::Int>> coefficients;
};

OutputRecord make_record(const stripless::FormalCohomologyClass& cls, int r, int n,
                         const std::string& formula, int degree);

std::string to_json(const OutputRecord& record);
std::string to_csv(const OutputRecord& record);
std::string to_ascii(const OutputRecord& record);

}  // namespace cli
