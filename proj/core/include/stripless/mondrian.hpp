#pragma once

#include <vector>

#include "stripless/bigint.hpp"
#include "stripless/partition.hpp"
#include "stripless/schubert.hpp"
#include "stripless/tableau.hpp"

namespace stripless {

/// Strictly increasing sequence 1 = a_0 < a_1 < ... < a_r = n encoding a
/// partition inside the inner rectangle via a_j = n - r - lambda_j + j.
class GapVector {
 public:
  explicit GapVector(std::vector<int> a);

  int r() const { return static_cast<int>(a_.size()) - 1; }
  int n() const { return a_.back(); }
  int a(int j) const { return a_.at(static_cast<size_t>(j)); }
  const std::vector<int>& values() const { return a_; }

  /// Context of the class the gap vector produces: Gr(r, n + r - 1).
  GrassmannianContext class_context() const;

  friend bool operator==(const GapVector&, const GapVector&) = default;

 private:
  std::vector<int> a_;
};

/// Chain 0 = s_0 < s_1 < ... < s_ell = r selecting one signed term of the
/// closed gap-class formula.
class SplitSequence {
 public:
  explicit SplitSequence(std::vector<int> s);

  int ell() const { return static_cast<int>(s_.size()) - 1; }
  int r() const { return s_.back(); }
  int s(int j) const { return s_.at(static_cast<size_t>(j)); }
  bool has_split_at(int i) const;

  friend bool operator==(const SplitSequence&, const SplitSequence&) = default;

 private:
  std::vector<int> s_;
};

std::vector<GapVector> all_gap_vectors(int r, int n);
std::vector<SplitSequence> all_split_sequences(int r);

GapVector gap_of_partition(const Partition& lambda, const GrassmannianContext& ctx);
Partition partition_of_gap(const GapVector& g);

/// sigma_mu -> sigma_(mu,0): reinterpret the class one rank up, same width.
FormalCohomologyClass theta(const FormalCohomologyClass& c);

/// sigma_mu -> theta(sigma_{mu - 1^{r-1}}), zero on terms missing the column.
FormalCohomologyClass flag_correspondence(const FormalCohomologyClass& c);

/// Prepends a part of the given length to every term; the row must dominate
/// every existing largest part.
FormalCohomologyClass append_max_row(const FormalCohomologyClass& c, int row);

/// Adds k to each of the (padded) parts of every term: the pushforward that
/// widens the ambient space by k columns.
FormalCohomologyClass add_columns(const FormalCohomologyClass& c, int k);

struct RestrictShiftResult {
  FormalCohomologyClass cls;
  int dropped_terms = 0;
};

/// sigma_mu -> sigma_{mu - s^r} where the full column fits, dropped (and
/// counted) otherwise.
RestrictShiftResult restrict_shift(const FormalCohomologyClass& c, int s);

/// The j-th two-block factor sigma_{(n-1)^{s_j - s_{j-1} - 1}, n-1-(a_{s_j}-a_{s_{j-1}})}.
Partition split_factor(const GapVector& g, const SplitSequence& s, int j);

/// Product of all split factors on Gr(r, n+r-1).
FormalCohomologyClass split_product(const GapVector& g, const SplitSequence& s);

/// Closed formula: signed sum of split products over all split sequences.
FormalCohomologyClass m_class_explicit(const GapVector& g);

/// One-step recursion with base case sigma_empty at rank 1.
FormalCohomologyClass m_class_recursive(const GapVector& g);

/// Number of 1-strip-less SSYTs of shape mu whose i-weight is
/// n-1-(a_i - a_{i-1}) for every i; the sigma_mu coefficient of the gap class.
Int pie_refined_coefficient(const Partition& mu, const GapVector& g);

/// Number of SSYTs of shape mu with those weights containing an (i,i+1)-strip
/// for every i outside the split interior; the sigma_mu coefficient of a
/// single split product.
Int term_coefficient_tableaux(const Partition& mu, const GapVector& g,
                              const SplitSequence& s);

/// Rewrites a tableau counted by the Pieri expansion of the split product
/// into the strip-carrying filling of the same shape and chain.
Tableau refill(const Tableau& t, const GapVector& g, const SplitSequence& s);

/// Inverse of refill.
Tableau unrefill(const Tableau& t, const GapVector& g, const SplitSequence& s);

/// Sum of the explicit gap classes over every gap vector for Gr(r, n);
/// the result lives on Gr(r, n + r - 1).
FormalCohomologyClass summed_m_class(const GrassmannianContext& ctx);

}  // namespace stripless
