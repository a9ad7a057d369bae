// Acceptance suite: executes every stated exactness check end to end and
// prints one pass/fail line per criterion. Exit status is the number of
// failing criteria.

#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "stripless/bijection.hpp"
#include "stripless/klyachko.hpp"
#include "stripless/mondrian.hpp"
#include "stripless/schubert.hpp"
#include "stripless/text_io.hpp"

using namespace stripless;

namespace {

struct Outcome {
  bool pass = true;
  long checks = 0;
  std::string detail;

  void fail(const std::string& message) {
    if (pass) {
      pass = false;
      detail = message;
    }
  }
};

std::string read_file(const std::string& name) {
  std::ifstream in(std::string(TEST_DATA_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing data file: " + name);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string rn(int r, int n) {
  return "r=" + std::to_string(r) + " n=" + std::to_string(n);
}

// 1. The two closed-form expansions agree coefficientwise.
Outcome criterion_orbit_identity() {
  Outcome out;
  for (int r = 2; r <= 4; ++r) {
    for (int n = r + 2; n <= 9; ++n) {
      GrassmannianContext ctx(r, n);
      ++out.checks;
      if (berget_fink_class(ctx) != klyachko_class(ctx)) {
        out.fail(rn(r, n) + ": expansions differ");
      }
    }
  }
  return out;
}

// 2. Every coefficient is the 1-strip-less count, and in particular >= 0.
Outcome criterion_stripless_counts() {
  Outcome out;
  for (int r = 2; r <= 4; ++r) {
    for (int n = r + 2; n <= 9; ++n) {
      GrassmannianContext ctx(r, n);
      for_each_partition_in_rectangle_of_size(
          r, n - r, (r - 1) * (n - r - 1), [&](const Partition& mu) {
            ++out.checks;
            Int gamma = gamma_klyachko(mu, ctx);
            if (gamma < 0) out.fail(rn(r, n) + " mu=" + to_string(mu) + ": negative");
            if (gamma != count_one_strip_less(mu, ctx)) {
              out.fail(rn(r, n) + " mu=" + to_string(mu) + ": count mismatch");
            }
          });
    }
  }
  return out;
}

// 3. Closed answers for the two smallest nontrivial Grassmannians.
Outcome criterion_closed_answers() {
  Outcome out;
  GrassmannianContext gr24(2, 4);
  FormalCohomologyClass expected24(gr24);
  expected24.add_term(Partition{1}, 2);
  ++out.checks;
  if (berget_fink_class(gr24) != expected24) out.fail("Gr(2,4) class wrong");

  GrassmannianContext gr25(2, 5);
  FormalCohomologyClass expected25(gr25);
  expected25.add_term(Partition{2}, 3);
  expected25.add_term(Partition{1, 1}, 1);
  ++out.checks;
  if (berget_fink_class(gr25) != expected25) out.fail("Gr(2,5) class wrong");
  return out;
}

// 4. Closed split-sum formula equals the one-step recursion.
Outcome criterion_recursion() {
  Outcome out;
  for (int r = 1; r <= 4; ++r) {
    for (int n = r + 1; n <= 8; ++n) {
      for (const GapVector& g : all_gap_vectors(r, n)) {
        ++out.checks;
        if (m_class_explicit(g) != m_class_recursive(g)) {
          out.fail(rn(r, n) + ": recursion mismatch");
        }
      }
    }
  }
  return out;
}

// 5. Restricting the shifted gap class recovers the complement product.
Outcome criterion_pushforward_consistency() {
  Outcome out;
  for (int r = 1; r <= 3; ++r) {
    for (int n = r + 1; n <= 8; ++n) {
      GrassmannianContext ctx(r, n);
      for_each_partition_in_rectangle(r - 1, n - r - 1, [&](const Partition& lambda) {
        ++out.checks;
        GapVector g = gap_of_partition(lambda, ctx);
        FormalCohomologyClass product =
            multiply(FormalCohomologyClass::schubert(ctx, lambda),
                     FormalCohomologyClass::schubert(ctx, bf_complement(lambda, ctx)));
        if (restrict_shift(m_class_explicit(g), r - 1).cls != product) {
          out.fail(rn(r, n) + " lambda=" + to_string(lambda) + ": pushforward mismatch");
        }
      });
    }
  }
  return out;
}

// 6. Split products count strip-carrying tableaux; inclusion-exclusion over
//    split sets recovers the refined strip-less counts.
Outcome criterion_split_coefficients() {
  Outcome out;
  for (int r = 1; r <= 3; ++r) {
    for (int n = r + 1; n <= 6; ++n) {
      for (const GapVector& g : all_gap_vectors(r, n)) {
        FormalCohomologyClass m = m_class_explicit(g);
        std::vector<std::pair<SplitSequence, FormalCohomologyClass>> products;
        for (const SplitSequence& s : all_split_sequences(r)) {
          products.emplace_back(s, split_product(g, s));
        }
        for_each_partition_in_rectangle_of_size(
            r, n - 1, (n - 1) * (r - 1), [&](const Partition& mu) {
              Int signed_sum = 0;
              for (const auto& [s, prod] : products) {
                ++out.checks;
                Int lhs = prod.coefficient(mu);
                if (lhs != term_coefficient_tableaux(mu, g, s)) {
                  out.fail(rn(r, n) + " mu=" + to_string(mu) + ": split term mismatch");
                }
                if ((r - s.ell()) % 2 == 0) {
                  signed_sum += lhs;
                } else {
                  signed_sum -= lhs;
                }
              }
              Int refined = pie_refined_coefficient(mu, g);
              if (signed_sum != refined || m.coefficient(mu) != refined) {
                out.fail(rn(r, n) + " mu=" + to_string(mu) + ": inclusion-exclusion");
              }
            });
      }
    }
  }
  return out;
}

// 7. The worked refill example, byte-exact against the checked-in grid.
Outcome criterion_refill_example() {
  Outcome out;
  std::istringstream in(read_file("refill_input.txt"));
  Tableau input = parse_tableau(in);
  GapVector g({1, 3, 7, 8, 10, 14, 18});
  SplitSequence s({0, 2, 5, 6});
  ++out.checks;
  if (input.type(6) != std::vector<int>{17, 11, 17, 17, 10, 13}) {
    out.fail("input tableau has the wrong type");
    return out;
  }
  Tableau refilled = refill(input, g, s);
  if (render_tableau(refilled) != read_file("refill_expected.txt")) {
    out.fail("refilled tableau differs from the golden grid");
  }
  if (refilled.type(6) != std::vector<int>{15, 13, 16, 15, 13, 13}) {
    out.fail("refilled tableau has the wrong type");
  }
  for (int i : {1, 3, 4}) {
    ++out.checks;
    if (!has_pair_strip(refilled, i, 17)) {
      out.fail("missing (" + std::to_string(i) + "," + std::to_string(i + 1) + ")-strip");
    }
  }
  ++out.checks;
  if (unrefill(refilled, g, s) != input) out.fail("inverse does not recover the input");
  return out;
}

// 8. The rank-3, n=7 table of complements, gap vectors, and weights.
Outcome criterion_rank3_table() {
  Outcome out;
  struct Row {
    Partition lambda;
    Partition tilde;
    std::vector<int> gaps;
    std::vector<int> weights;
  };
  const std::vector<Row> expected{
      {Partition{}, Partition{3, 3}, {5, 6}, {0, 3, 3}},
      {Partition{1}, Partition{3, 2}, {4, 6}, {1, 2, 3}},
      {Partition{1, 1}, Partition{2, 2}, {4, 5}, {1, 3, 2}},
      {Partition{2}, Partition{3, 1}, {3, 6}, {2, 1, 3}},
      {Partition{2, 1}, Partition{2, 1}, {3, 5}, {2, 2, 2}},
      {Partition{2, 2}, Partition{1, 1}, {3, 4}, {2, 3, 1}},
      {Partition{3}, Partition{3}, {2, 6}, {3, 0, 3}},
      {Partition{3, 1}, Partition{2}, {2, 5}, {3, 1, 2}},
      {Partition{3, 2}, Partition{1}, {2, 4}, {3, 2, 1}},
      {Partition{3, 3}, Partition{}, {2, 3}, {3, 3, 0}},
  };
  GrassmannianContext ctx(3, 7);
  size_t row = 0;
  for_each_partition_in_rectangle(2, 3, [&](const Partition& lambda) {
    ++out.checks;
    if (row >= expected.size()) {
      out.fail("more inner partitions than table rows");
      return;
    }
    const Row& want = expected[row++];
    if (lambda != want.lambda) {
      out.fail("row order mismatch at " + to_string(lambda));
      return;
    }
    GapVector g = gap_of_partition(lambda, ctx);
    std::vector<int> gaps{g.a(1), g.a(2)};
    std::vector<int> weights;
    for (int i = 1; i <= 3; ++i) weights.push_back(4 - (g.a(i) - g.a(i - 1)));
    if (bf_complement(lambda, ctx) != want.tilde || gaps != want.gaps ||
        weights != want.weights) {
      out.fail("table row for lambda=" + to_string(lambda) + " differs");
    }
  });
  if (row != expected.size()) out.fail("missing table rows");
  return out;
}

// 9. Summed gap classes match the zero-strip resummation; binomial identity.
Outcome criterion_resummation() {
  Outcome out;
  for (int r = 1; r <= 3; ++r) {
    for (int n = r + 1; n <= 6; ++n) {
      GrassmannianContext base(r, n);
      FormalCohomologyClass summed = summed_m_class(base);
      GrassmannianContext big(r, n + r - 1);
      for_each_partition_in_rectangle(r, n - 1, [&](const Partition& mu) {
        ++out.checks;
        if (summed.coefficient(mu) != coeff_via_fill0(mu, big)) {
          out.fail(rn(r, n) + " mu=" + to_string(mu) + ": resummation mismatch");
        }
      });
    }
  }
  for (long n = 1; n <= 12; ++n) {
    for (long r = 0; r <= n; ++r) {
      for (long l = 0; l <= r; ++l) {
        ++out.checks;
        if (!binomial_identity_check(n, r, l)) {
          out.fail("binomial identity fails at n=" + std::to_string(n));
        }
      }
    }
  }
  return out;
}

// 10. Descent bijection: roundtrips, cardinalities, worked example byte-exact.
Outcome criterion_bijection() {
  Outcome out;
  for (int r = 1; r <= 3; ++r) {
    for (int n = r + 1; n <= 7; ++n) {
      GrassmannianContext ctx(r, n);
      for_each_partition_in_rectangle(r, n - r, [&](const Partition& mu) {
        Partition bar = complement(mu, ctx);
        long stripless_side = 0;
        enumerate_ssyt(mu, r, [&](const Tableau& t) {
          if (!is_one_strip_less(t, n - r)) return;
          ++stripless_side;
          ++out.checks;
          if (syt_to_stripless(stripless_to_syt(t, ctx), ctx) != t) {
            out.fail(rn(r, n) + " mu=" + to_string(mu) + ": roundtrip");
          }
        });
        long descent_side = 0;
        enumerate_syt(bar, [&](const Tableau& t) {
          if (static_cast<int>(descents(t).size()) != r - 1) return;
          if (t.box_count() < r) return;  // empty tableau at rank 1
          ++descent_side;
          ++out.checks;
          if (stripless_to_syt(syt_to_stripless(t, ctx), ctx) != t) {
            out.fail(rn(r, n) + " mu=" + to_string(mu) + ": reverse roundtrip");
          }
        });
        ++out.checks;
        if (stripless_side != descent_side) {
          out.fail(rn(r, n) + " mu=" + to_string(mu) + ": cardinality mismatch");
        }
      });
    }
  }
  GrassmannianContext ctx(4, 14);
  std::istringstream in(read_file("appendix_syt.txt"));
  Tableau syt = parse_tableau(in);
  ++out.checks;
  if (descents(syt) != std::vector<int>{4, 13, 22}) out.fail("worked descents wrong");
  Tableau image = syt_to_stripless(syt, ctx);
  ++out.checks;
  if (render_tableau(image) != read_file("appendix_ssyt.txt")) {
    out.fail("worked image differs from the golden grid");
  }
  ++out.checks;
  if (stripless_to_syt(image, ctx) != syt) out.fail("worked example inverse");
  return out;
}

// 11. Oracle equivalences: hook-content vs enumeration, alternating sum vs
//     filtered counts, Pieri vs general product, LR symmetry.
Outcome criterion_oracles() {
  Outcome out;
  for (int boxes = 0; boxes <= 12; ++boxes) {
    for_each_partition_in_rectangle_of_size(12, 12, boxes, [&](const Partition& shape) {
      for (int alphabet = 1; alphabet <= 6; ++alphabet) {
        ++out.checks;
        Int seen = 0;
        enumerate_ssyt(shape, alphabet, [&](const Tableau&) { ++seen; });
        if (count_ssyt(shape, alphabet) != seen) {
          out.fail("hook-content mismatch at " + to_string(shape));
        }
      }
    });
  }
  for (int r = 1; r <= 3; ++r) {
    GrassmannianContext ctx(r, r + 3);
    for_each_partition_in_rectangle(r, 3, [&](const Partition& shape) {
      ++out.checks;
      Int filtered = 0;
      enumerate_ssyt(shape, r, [&](const Tableau& t) {
        for (int i = 1; i <= r; ++i) {
          if (has_i_strip(t, i, 3)) return;
        }
        ++filtered;
      });
      if (count_zero_strip_less(shape, ctx) != filtered) {
        out.fail("zero-strip count mismatch at " + to_string(shape));
      }
    });
  }
  GrassmannianContext gr36(3, 6);
  for_each_partition_in_rectangle(3, 3, [&](const Partition& mu) {
    FormalCohomologyClass c = FormalCohomologyClass::schubert(gr36, mu);
    for (int k = 0; k <= 3; ++k) {
      ++out.checks;
      if (pieri_multiply(c, k) !=
          multiply(c, FormalCohomologyClass::schubert(gr36, Partition{k}))) {
        out.fail("Pieri disagrees with the general product at " + to_string(mu));
      }
    }
  });
  for (int total = 0; total <= 8; ++total) {
    for_each_partition_in_rectangle_of_size(8, 8, total, [&](const Partition& nu) {
      for_each_partition_in_rectangle(nu.num_parts(), nu.part(0),
                                      [&](const Partition& lambda) {
        if (!nu.contains(lambda)) return;
        for_each_partition_in_rectangle_of_size(
            8, 8, total - lambda.size(), [&](const Partition& mu) {
              ++out.checks;
              if (lr_coefficient(lambda, mu, nu) != lr_coefficient(mu, lambda, nu)) {
                out.fail("LR symmetry fails at nu=" + to_string(nu));
              }
            });
      });
    });
  }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string label;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "orbit class: product formula equals alternating-sum formula",
       criterion_orbit_identity},
      {2, "coefficients are 1-strip-less counts and nonnegative",
       criterion_stripless_counts},
      {3, "closed answers in Gr(2,4) and Gr(2,5)", criterion_closed_answers},
      {4, "closed split-sum formula equals one-step recursion", criterion_recursion},
      {5, "shifted gap classes restrict to complement products",
       criterion_pushforward_consistency},
      {6, "split-product coefficients count typed tableaux",
       criterion_split_coefficients},
      {7, "worked refill example reproduced byte-exactly", criterion_refill_example},
      {8, "rank-3 complement/gap/weight table reproduced", criterion_rank3_table},
      {9, "summed gap classes match the resummation; binomial identity",
       criterion_resummation},
      {10, "descent bijection roundtrips and cardinalities", criterion_bijection},
      {11, "oracle equivalences (hook-content, strips, Pieri, LR)", criterion_oracles},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    if (outcome.pass) {
      std::printf("criterion %2d [%s] PASS (%ld checks)\n", criterion.id,
                  criterion.label.c_str(), outcome.checks);
    } else {
      ++failures;
      std::printf("criterion %2d [%s] FAIL: %s\n", criterion.id,
                  criterion.label.c_str(), outcome.detail.c_str());
    }
    std::fflush(stdout);
  }
  if (failures == 0) {
    std::printf("all %zu criteria pass\n", criteria.size());
  } else {
    std::printf("%d criteria FAILED\n", failures);
  }
  return failures;
}
