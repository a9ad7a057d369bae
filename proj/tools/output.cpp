#include "output.hpp"

#include <json.hpp>

namespace cli {

using stripless::Int;
using stripless::Partition;

OutputRecord make_record(const stripless::FormalCohomologyClass& cls, int r, int n,
                         const std::string& formula, int degree) {
  OutputRecord record;
  record.r = r;
  record.n = n;
  record.formula = formula;
  record.degree = degree;
  for (const auto& [mu, coeff] : cls.terms()) {
    record.coefficients.emplace_back(mu, coeff);
  }
  return record;
}

namespace {

// Coefficients beyond the 53-bit safe range are emitted as decimal strings.
nlohmann::ordered_json coeff_json(const Int& value) {
  static const Int safe_max = (Int(1) << 53) - 1;
  if (value <= safe_max && value >= -safe_max) {
    return nlohmann::ordered_json(value.get_si());
  }
  return nlohmann::ordered_json(value.get_str());
}

std::string space_joined(const Partition& p) {
  if (p.empty()) return "0";
  std::string out;
  for (int i = 0; i < p.num_parts(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(p.part(i));
  }
  return out;
}

}  // namespace

std::string to_json(const OutputRecord& record) {
  nlohmann::ordered_json j;
  j["r"] = record.r;
  j["n"] = record.n;
  j["formula"] = record.formula;
  j["degree"] = record.degree;
  j["coefficients"] = nlohmann::ordered_json::array();
  for (const auto& [mu, coeff] : record.coefficients) {
    nlohmann::ordered_json term;
    term["mu"] = mu.parts();
    term["coeff"] = coeff_json(coeff);
    j["coefficients"].push_back(std::move(term));
  }
  return j.dump();
}

std::string to_csv(const OutputRecord& record) {
  std::string out = "mu,coeff\n";
  for (const auto& [mu, coeff] : record.coefficients) {
    out += space_joined(mu);
    out += ',';
    out += coeff.get_str();
    out += '\n';
  }
  return out;
}

std::string to_ascii(const OutputRecord& record) {
  std::string out = "r=" + std::to_string(record.r) + " n=" + std::to_string(record.n) +
                    " formula=" + record.formula +
                    " degree=" + std::to_string(record.degree) + "\n";
  for (const auto& [mu, coeff] : record.coefficients) {
    out += "sigma(" + stripless::to_string(mu) + ") " + coeff.get_str() + "\n";
  }
  return out;
}

}  // namespace cli
