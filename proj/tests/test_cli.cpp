#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(CLI_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  size_t got = 0;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.out.append(buffer, got);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string data_file(const std::string& name) {
  return std::string(TEST_DATA_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("gamma prints single coefficients") {
  RunResult r1 = run_cli("gamma -r 2 -n 4 --mu 1");
  CHECK(r1.exit_code == 0);
  CHECK(r1.out == "2\n");

  RunResult r2 = run_cli("gamma -r 2 -n 5 --mu 1,1");
  CHECK(r2.exit_code == 0);
  CHECK(r2.out == "1\n");

  // Wrong degree is zero by convention.
  RunResult r3 = run_cli("gamma -r 2 -n 4 --mu 2");
  CHECK(r3.exit_code == 0);
  CHECK(r3.out == "0\n");
}

TEST_CASE("gamma check mode agrees across formulas") {
  RunResult r = run_cli("gamma -r 3 -n 6 --mu 2,2 --check");
  CHECK(r.exit_code == 0);

  RunResult alt = run_cli("gamma -r 2 -n 5 --mu 2 --formula mondrian-sum");
  CHECK(alt.exit_code == 0);
  CHECK(alt.out == "3\n");
}

TEST_CASE("gamma usage and precondition exit codes") {
  CHECK(run_cli("gamma -r 2 -n 4 --mu 2,3").exit_code == 2);  // not a partition
  CHECK(run_cli("gamma -r 2 -n 4").exit_code == 2);           // missing flag
  CHECK(run_cli("gamma -r 2 -n 4 --mu 7").exit_code == 1);    // does not fit
}

TEST_CASE("orbit class serializations") {
  RunResult json = run_cli("orbit-class -r 2 -n 5 --format json");
  CHECK(json.exit_code == 0);
  CHECK(json.out ==
        "{\"r\":2,\"n\":5,\"formula\":\"berget-fink\",\"degree\":2,"
        "\"coefficients\":[{\"mu\":[1,1],\"coeff\":1},{\"mu\":[2],\"coeff\":3}]}\n");

  RunResult csv = run_cli("orbit-class -r 2 -n 5 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out == "mu,coeff\n1 1,1\n2,3\n");

  RunResult ascii = run_cli("orbit-class -r 2 -n 5 --format ascii");
  CHECK(ascii.exit_code == 0);
  CHECK(ascii.out ==
        "r=2 n=5 formula=berget-fink degree=2\nsigma(1,1) 1\nsigma(2) 3\n");

  RunResult trivial = run_cli("orbit-class -r 1 -n 3 --format json");
  CHECK(trivial.exit_code == 0);
  CHECK(trivial.out ==
        "{\"r\":1,\"n\":3,\"formula\":\"berget-fink\",\"degree\":0,"
        "\"coefficients\":[{\"mu\":[],\"coeff\":1}]}\n");

  CHECK(run_cli("orbit-class -r 2 -n 5 --format yaml").exit_code == 2);
}

TEST_CASE("output is byte-identical across runs and formulas") {
  std::string a = run_cli("orbit-class -r 3 -n 7 --format json").out;
  std::string b = run_cli("orbit-class -r 3 -n 7 --format json").out;
  CHECK(a == b);

  // Same coefficients through the alternating-sum route.
  std::string k = run_cli("orbit-class -r 3 -n 7 --formula klyachko --format csv").out;
  std::string bf = run_cli("orbit-class -r 3 -n 7 --formula berget-fink --format csv").out;
  CHECK(k == bf);
}

TEST_CASE("csv and json carry the same pairs") {
  std::string csv = run_cli("orbit-class -r 3 -n 6 --format csv").out;
  std::string json = run_cli("orbit-class -r 3 -n 6 --format json").out;
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "mu,coeff");
  int rows = 0;
  while (std::getline(lines, line)) {
    auto comma = line.rfind(',');
    REQUIRE(comma != std::string::npos);
    std::string mu = line.substr(0, comma);
    std::string coeff = line.substr(comma + 1);
    for (auto& ch : mu) {
      if (ch == ' ') ch = ',';
    }
    std::string needle = "{\"mu\":[" + (mu == "0" ? "" : mu) + "],\"coeff\":" + coeff + "}";
    CHECK(json.find(needle) != std::string::npos);
    ++rows;
  }
  CHECK(rows > 0);
}

TEST_CASE("bijection subcommand runs both directions byte-exactly") {
  RunResult forward =
      run_cli("bijection --direction forward --file " + data_file("appendix_syt.txt") +
              " -r 4 -n 14");
  CHECK(forward.exit_code == 0);
  CHECK(forward.out == read_file(data_file("appendix_ssyt.txt")));

  RunResult backward =
      run_cli("bijection --direction backward --file " + data_file("appendix_ssyt.txt") +
              " -r 4 -n 14");
  CHECK(backward.exit_code == 0);
  CHECK(backward.out == read_file(data_file("appendix_syt.txt")));
}

TEST_CASE("bijection precondition and parse failures") {
  RunResult wrong_descents =
      run_cli("bijection --direction forward --file " + data_file("two_descent_syt.txt") +
              " -r 4 -n 7");
  CHECK(wrong_descents.exit_code == 1);

  RunResult missing =
      run_cli("bijection --direction forward --file /nonexistent.txt -r 2 -n 4");
  CHECK(missing.exit_code == 2);

  CHECK(run_cli("bijection --direction sideways --file x -r 2 -n 4").exit_code == 2);
}

TEST_CASE("verify subcommand reports per-suite results") {
  RunResult identity = run_cli("verify --suite identity -n 1..10");
  CHECK(identity.exit_code == 0);
  CHECK(identity.out.find("suite identity: PASS") == 0);

  RunResult thm3 = run_cli("verify --suite thm3 -r 2..3 -n 4..6");
  CHECK(thm3.exit_code == 0);
  CHECK(thm3.out.find("suite thm3: PASS") == 0);

  RunResult bijection = run_cli("verify --suite bijection -r 2 -n 5");
  CHECK(bijection.exit_code == 0);
  CHECK(bijection.out.find("suite bijection: PASS") == 0);
  CHECK(bijection.out.find("stripless=") != std::string::npos);

  CHECK(run_cli("verify --suite nonsense").exit_code == 2);
}
