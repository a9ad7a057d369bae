#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "output.hpp"
#include "stripless/bijection.hpp"
#include "stripless/klyachko.hpp"
#include "stripless/mondrian.hpp"
#include "stripless/schubert.hpp"
#include "stripless/text_io.hpp"
#include "verify.hpp"

namespace {

using namespace stripless;

cli::Range parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    int lo = std::stoi(text.substr(0, dots));
    int hi = std::stoi(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty range");
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed range: " + text);
  }
}

int worker_threads() {
  if (const char* env = std::getenv("STRIPLESS_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 2 : static_cast<int>(hw);
}

FormalCohomologyClass class_by_formula(const GrassmannianContext& ctx,
                                       const std::string& formula) {
  if (formula == "klyachko") return klyachko_class(ctx);
  if (formula == "berget-fink") return berget_fink_class(ctx);
  if (formula == "stripless") return stripless_class(ctx);
  if (formula == "mondrian-sum") {
    return restrict_shift(summed_m_class(ctx), ctx.rank - 1).cls;
  }
  throw std::invalid_argument("unknown formula: " + formula);
}

Int gamma_by_formula(const Partition& mu, const GrassmannianContext& ctx,
                     const std::string& formula) {
  if (formula == "klyachko") return gamma_klyachko(mu, ctx);
  if (formula == "stripless") return gamma_stripless(mu, ctx);
  if (formula == "berget-fink") return berget_fink_class(ctx).coefficient(mu);
  if (formula == "mondrian-sum") {
    return restrict_shift(summed_m_class(ctx), ctx.rank - 1).cls.coefficient(mu);
  }
  throw std::invalid_argument("unknown formula: " + formula);
}

int cmd_gamma(int r, int n, const std::string& mu_text, const std::string& formula,
              bool check) {
  Partition mu = parse_partition(mu_text);
  GrassmannianContext ctx(r, n);
  if (!ctx.fits(mu)) {
    throw std::domain_error("partition does not fit the " + std::to_string(r) + "x" +
                            std::to_string(n - r) + " rectangle");
  }
  Int value = gamma_by_formula(mu, ctx, formula);
  if (check) {
    for (const char* other : {"klyachko", "berget-fink", "stripless", "mondrian-sum"}) {
      Int cross = gamma_by_formula(mu, ctx, other);
      if (cross != value) {
        std::cerr << "formula disagreement at mu=" << to_string(mu) << ": " << formula
                  << "=" << value.get_str() << " but " << other << "=" << cross.get_str()
                  << "\n";
        return 1;
      }
    }
  }
  std::cout << value.get_str() << "\n";
  return 0;
}

int cmd_orbit_class(int r, int n, const std::string& formula, const std::string& format) {
  GrassmannianContext ctx(r, n);
  FormalCohomologyClass cls = class_by_formula(ctx, formula);
  cli::OutputRecord record =
      cli::make_record(cls, r, n, formula, (r - 1) * (n - r - 1));
  if (format == "json") {
    std::cout << cli::to_json(record) << "\n";
  } else if (format == "csv") {
    std::cout << cli::to_csv(record);
  } else if (format == "ascii") {
    std::cout << cli::to_ascii(record);
  } else {
    throw std::invalid_argument("unknown format: " + format);
  }
  return 0;
}

int cmd_verify(const std::vector<std::string>& suites, const std::string& r_text,
               const std::string& n_text) {
  cli::Range r_range = parse_range(r_text);
  cli::Range n_range = parse_range(n_text);
  std::vector<std::string> selected = suites.empty() ? cli::all_suite_names() : suites;
  std::vector<cli::SuiteReport> reports =
      cli::run_suites(selected, r_range, n_range, worker_threads());
  bool all_pass = true;
  for (const cli::SuiteReport& report : reports) {
    if (report.pass) {
      std::cout << "suite " << report.name << ": PASS (" << report.checks
                << " checks)\n";
    } else {
      all_pass = false;
      std::cout << "suite " << report.name << ": FAIL (first counterexample: "
                << report.first_failure << ")\n";
    }
    for (const std::string& line : report.table_lines) std::cout << line << "\n";
  }
  return all_pass ? 0 : 1;
}

int cmd_bijection(const std::string& direction, const std::string& file, int r, int n) {
  Tableau input = parse_tableau_file(file);
  GrassmannianContext ctx(r, n);
  Tableau output = direction == "forward" ? syt_to_stripless(input, ctx)
                                          : stripless_to_syt(input, ctx);
  std::cout << render_tableau(output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Schubert-basis expansions of generic torus-orbit closures"};
  app.require_subcommand(1);

  int r = 0;
  int n = 0;
  std::string mu_text;
  std::string formula = "klyachko";
  bool check = false;
  auto* gamma = app.add_subcommand("gamma", "print one Schubert coefficient");
  gamma->add_option("-r,--rank", r, "rank of the Grassmannian")->required();
  gamma->add_option("-n,--ambient", n, "ambient dimension")->required();
  gamma->add_option("--mu", mu_text, "partition, comma-separated (0 for empty)")
      ->required();
  gamma->add_option("--formula", formula, "klyachko | berget-fink | stripless | mondrian-sum")
      ->check(CLI::IsMember({"klyachko", "berget-fink", "stripless", "mondrian-sum"}));
  gamma->add_flag("--check", check, "cross-check all four formulas");

  int oc_r = 0;
  int oc_n = 0;
  std::string oc_formula = "berget-fink";
  std::string oc_format = "json";
  auto* orbit = app.add_subcommand("orbit-class", "emit the full orbit class");
  orbit->add_option("-r,--rank", oc_r, "rank of the Grassmannian")->required();
  orbit->add_option("-n,--ambient", oc_n, "ambient dimension")->required();
  orbit->add_option("--formula", oc_formula,
                    "klyachko | berget-fink | stripless | mondrian-sum")
      ->check(CLI::IsMember({"klyachko", "berget-fink", "stripless", "mondrian-sum"}));
  orbit->add_option("--format", oc_format, "json | csv | ascii")
      ->check(CLI::IsMember({"json", "csv", "ascii"}));

  std::vector<std::string> suites;
  std::string r_text = "2..3";
  std::string n_text = "4..7";
  auto* verify = app.add_subcommand("verify", "run invariant suites over (r, n) ranges");
  verify->add_option("--suite", suites,
                     "thm3 | prop33 | cor42 | prop51 | bijection | lemma21 | identity "
                     "(default: all)")
      ->check(CLI::IsMember(cli::all_suite_names()));
  verify->add_option("-r,--rank", r_text, "rank range, e.g. 2..3");
  verify->add_option("-n,--ambient", n_text, "ambient range, e.g. 4..7");

  std::string direction;
  std::string file;
  int bj_r = 0;
  int bj_n = 0;
  auto* bijection = app.add_subcommand(
      "bijection", "map a standard tableau to a 1-strip-less filling or back");
  bijection->add_option("--direction", direction, "forward | backward")
      ->required()
      ->check(CLI::IsMember({"forward", "backward"}));
  bijection->add_option("--file", file, "tableau file (rows of entries, # comments)")
      ->required();
  bijection->add_option("-r,--rank", bj_r, "rank of the Grassmannian")->required();
  bijection->add_option("-n,--ambient", bj_n, "ambient dimension")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gamma->parsed()) return cmd_gamma(r, n, mu_text, formula, check);
    if (orbit->parsed()) return cmd_orbit_class(oc_r, oc_n, oc_formula, oc_format);
    if (verify->parsed()) return cmd_verify(suites, r_text, n_text);
    if (bijection->parsed()) return cmd_bijection(direction, file, bj_r, bj_n);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
