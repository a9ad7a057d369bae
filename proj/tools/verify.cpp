#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "stripless/bijection.hpp"
#include "stripless/klyachko.hpp"
#include "stripless/mondrian.hpp"
#include "stripless/schubert.hpp"

namespace cli {

using namespace stripless;

namespace {

struct CaseResult {
  bool ok = true;
  long checks = 0;
  std::string failure;
  std::vector<std::string> lines;
};

using CaseFn = std::function<CaseResult()>;

std::vector<CaseResult> run_parallel(const std::vector<CaseFn>& tasks, int threads) {
  std::vector<CaseResult> results(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t idx = next.fetch_add(1);
      if (idx >= tasks.size()) return;
      results[idx] = tasks[idx]();
    }
  };
  int count = threads < 1 ? 1 : threads;
  if (static_cast<size_t>(count) > tasks.size()) {
    count = static_cast<int>(tasks.size());
  }
  if (count <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
    return results;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return results;
}

std::string describe(int r, int n) {
  return "r=" + std::to_string(r) + " n=" + std::to_string(n);
}

CaseResult thm3_case(int r, int n) {
  CaseResult result;
  GrassmannianContext ctx(r, n);
  FormalCohomologyClass bf = berget_fink_class(ctx);
  FormalCohomologyClass kl = klyachko_class(ctx);
  for_each_partition_in_rectangle_of_size(
      r, n - r, (r - 1) * (n - r - 1), [&](const Partition& mu) {
        ++result.checks;
        if (!result.ok) return;
        Int a = bf.coefficient(mu);
        Int b = kl.coefficient(mu);
        if (a != b) {
          result.ok = false;
          result.failure = describe(r, n) + " mu=" + to_string(mu) + ": product-sum " +
                           a.get_str() + " != alternating-sum " + b.get_str();
        }
      });
  if (result.ok && bf != kl) {
    result.ok = false;
    result.failure = describe(r, n) + ": classes differ outside the expected degree";
  }
  return result;
}

CaseResult prop33_case(int r, int n) {
  CaseResult result;
  for (const GapVector& g : all_gap_vectors(r, n)) {
    ++result.checks;
    if (m_class_explicit(g) != m_class_recursive(g)) {
      result.ok = false;
      std::ostringstream os;
      os << describe(r, n) << " a=(";
      for (size_t i = 0; i < g.values().size(); ++i) {
        if (i) os << ",";
        os << g.values()[i];
      }
      os << "): closed formula != recursion";
      result.failure = os.str();
      return result;
    }
  }
  return result;
}

CaseResult cor42_case(int r, int n) {
  CaseResult result;
  for (const GapVector& g : all_gap_vectors(r, n)) {
    FormalCohomologyClass m = m_class_explicit(g);
    std::vector<std::pair<SplitSequence, FormalCohomologyClass>> products;
    for (const SplitSequence& s : all_split_sequences(r)) {
      products.emplace_back(s, split_product(g, s));
    }
    bool done = false;
    for_each_partition_in_rectangle_of_size(
        r, n - 1, (n - 1) * (r - 1), [&](const Partition& mu) {
          if (done) return;
          Int signed_sum = 0;
          for (const auto& [s, prod] : products) {
            ++result.checks;
            Int lhs = prod.coefficient(mu);
            Int rhs = term_coefficient_tableaux(mu, g, s);
            if (lhs != rhs) {
              result.ok = false;
              result.failure = describe(r, n) + " mu=" + to_string(mu) +
                               ": split coefficient " + lhs.get_str() +
                               " != tableau count " + rhs.get_str();
              done = true;
              return;
            }
            if ((r - s.ell()) % 2 == 0) {
              signed_sum += lhs;
            } else {
              signed_sum -= lhs;
            }
          }
          Int refined = pie_refined_coefficient(mu, g);
          if (signed_sum != refined || m.coefficient(mu) != refined) {
            result.ok = false;
            result.failure = describe(r, n) + " mu=" + to_string(mu) +
                             ": inclusion-exclusion " + signed_sum.get_str() +
                             " vs refined count " + refined.get_str() + " vs class " +
                             m.coefficient(mu).get_str();
            done = true;
          }
        });
    if (done) return result;
  }
  return result;
}

CaseResult prop51_case(int r, int n) {
  CaseResult result;
  GrassmannianContext base(r, n);
  FormalCohomologyClass summed = summed_m_class(base);
  GrassmannianContext big(r, n + r - 1);
  for_each_partition_in_rectangle(r, n - 1, [&](const Partition& mu) {
    if (!result.ok) return;
    ++result.checks;
    Int lhs = summed.coefficient(mu);
    Int rhs = coeff_via_fill0(mu, big);
    if (lhs != rhs) {
      result.ok = false;
      result.failure = describe(r, n) + " mu=" + to_string(mu) + ": summed " +
                       lhs.get_str() + " != resummation " + rhs.get_str();
    }
  });
  return result;
}

CaseResult bijection_case(int r, int n) {
  CaseResult result;
  GrassmannianContext ctx(r, n);
  for_each_partition_in_rectangle(r, n - r, [&](const Partition& mu) {
    if (!result.ok) return;
    Partition bar = complement(mu, ctx);
    long stripless_side = 0;
    enumerate_ssyt(mu, r, [&](const Tableau& t) {
      if (!result.ok || !is_one_strip_less(t, n - r)) return;
      ++stripless_side;
      ++result.checks;
      Tableau syt = stripless_to_syt(t, ctx);
      if (syt_to_stripless(syt, ctx) != t) {
        result.ok = false;
        result.failure = describe(r, n) + " mu=" + to_string(mu) +
                         ": forward-backward roundtrip failed";
      }
    });
    if (!result.ok) return;
    long descent_side = 0;
    enumerate_syt(bar, [&](const Tableau& t) {
      if (!result.ok) return;
      if (static_cast<int>(descents(t).size()) != r - 1) return;
      if (t.box_count() < r) return;  // empty tableau at rank 1
      ++descent_side;
      ++result.checks;
      Tableau ssyt = syt_to_stripless(t, ctx);
      if (stripless_to_syt(ssyt, ctx) != t) {
        result.ok = false;
        result.failure = describe(r, n) + " mu=" + to_string(mu) +
                         ": backward-forward roundtrip failed";
      }
    });
    if (!result.ok) return;
    if (stripless_side != descent_side) {
      result.ok = false;
      result.failure = describe(r, n) + " mu=" + to_string(mu) + ": cardinalities " +
                       std::to_string(stripless_side) + " != " +
                       std::to_string(descent_side);
      return;
    }
    if (mu.size() == (r - 1) * (n - r - 1)) {
      result.lines.push_back("  " + describe(r, n) + " mu=" + to_string(mu) +
                             " stripless=" + std::to_string(stripless_side) +
                             " syt_descents=" + std::to_string(descent_side));
    }
  });
  return result;
}

CaseResult lemma21_case(int r, int n) {
  CaseResult result;
  GrassmannianContext ctx(r, n);
  const int width = n - r;
  for_each_partition_in_rectangle(r, width, [&](const Partition& shape) {
    if (!result.ok) return;
    ++result.checks;
    Int filtered = 0;
    enumerate_ssyt(shape, r, [&](const Tableau& t) {
      for (int i = 1; i <= r; ++i) {
        if (has_i_strip(t, i, width)) return;
      }
      ++filtered;
    });
    Int formula = count_zero_strip_less(shape, ctx);
    if (formula != filtered) {
      result.ok = false;
      result.failure = describe(r, n) + " shape=" + to_string(shape) +
                       ": alternating sum " + formula.get_str() + " != filtered " +
                       filtered.get_str();
    }
  });
  return result;
}

CaseResult identity_case(int n) {
  CaseResult result;
  for (long r = 0; r <= n; ++r) {
    for (long l = 0; l <= r; ++l) {
      ++result.checks;
      if (!binomial_identity_check(n, r, l)) {
        result.ok = false;
        result.failure = "n=" + std::to_string(n) + " r=" + std::to_string(r) +
                         " l=" + std::to_string(l) + ": identity fails";
        return result;
      }
    }
  }
  return result;
}

std::vector<CaseFn> build_cases(const std::string& suite, Range r_range, Range n_range) {
  std::vector<CaseFn> tasks;
  auto for_rn = [&](int min_r, const std::function<CaseFn(int, int)>& make) {
    for (int r = std::max(min_r, r_range.lo); r <= r_range.hi; ++r) {
      for (int n = std::max(r + 1, n_range.lo); n <= n_range.hi; ++n) {
        tasks.push_back(make(r, n));
      }
    }
  };
  if (suite == "thm3") {
    for_rn(2, [](int r, int n) { return [r, n]() { return thm3_case(r, n); }; });
  } else if (suite == "prop33") {
    for_rn(1, [](int r, int n) { return [r, n]() { return prop33_case(r, n); }; });
  } else if (suite == "cor42") {
    for_rn(1, [](int r, int n) { return [r, n]() { return cor42_case(r, n); }; });
  } else if (suite == "prop51") {
    for_rn(1, [](int r, int n) { return [r, n]() { return prop51_case(r, n); }; });
  } else if (suite == "bijection") {
    for_rn(1, [](int r, int n) { return [r, n]() { return bijection_case(r, n); }; });
  } else if (suite == "lemma21") {
    for_rn(1, [](int r, int n) { return [r, n]() { return lemma21_case(r, n); }; });
  } else if (suite == "identity") {
    for (int n = std::max(1, n_range.lo); n <= n_range.hi; ++n) {
      tasks.push_back([n]() { return identity_case(n); });
    }
  } else {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  return tasks;
}

}  // namespace

const std::vector<std::string>& all_suite_names() {
  static const std::vector<std::string> names{
      "thm3", "prop33", "cor42", "prop51", "bijection", "lemma21", "identity"};
  return names;
}

std::vector<SuiteReport> run_suites(const std::vector<std::string>& names,
                                    Range r_range, Range n_range, int threads) {
  std::vector<SuiteReport> reports;
  for (const std::string& name : names) {
    SuiteReport report;
    report.name = name;
    std::vector<CaseFn> tasks = build_cases(name, r_range, n_range);
    std::vector<CaseResult> results = run_parallel(tasks, threads);
    for (const CaseResult& cr : results) {
      report.checks += cr.checks;
      if (!cr.ok && report.pass) {
        report.pass = false;
        report.first_failure = cr.failure;
      }
      for (const std::string& line : cr.lines) report.table_lines.push_back(line);
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace cli
