#pragma once

#include <functional>
#include <vector>

#include "stripless/bigint.hpp"
#include "stripless/partition.hpp"

namespace stripless {

/// A filling of a Young diagram. Construction checks only the grid structure
/// (weakly decreasing positive row lengths, entries >= 1); semistandardness
/// and standardness are separate predicates because several operations
/// accept either kind of filling.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int box_count() const;
  int max_entry() const;  // 0 for the empty tableau
  int entry(int row, int col) const { return rows_[row][col]; }

  /// Entries weakly increase along rows and strictly increase down columns.
  bool is_semistandard() const;

  /// Entries are exactly 1..box_count(), strictly increasing along rows and
  /// down columns.
  bool is_standard() const;

  /// Number of boxes holding `e`.
  int weight(int e) const;

  /// Weights of the entries 1..alphabet.
  std::vector<int> type(int alphabet) const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

/// Visits every SSYT of the shape with entries <= max_entry, in lexicographic
/// order of the row reading word (row by row, left to right, smallest
/// admissible entry first).
void enumerate_ssyt(const Partition& shape, int max_entry,
                    const std::function<void(const Tableau&)>& fn);
std::vector<Tableau> all_ssyt(const Partition& shape, int max_entry);

/// SSYTs with prescribed weights; entries run over 1..type.size().
void enumerate_ssyt_of_type(const Partition& shape,
                            const std::vector<int>& type,
                            const std::function<void(const Tableau&)>& fn);

/// Visits every standard Young tableau of the shape, same deterministic order.
void enumerate_syt(const Partition& shape,
                   const std::function<void(const Tableau&)>& fn);
std::vector<Tableau> all_syt(const Partition& shape);

/// Number of SSYTs with entries 1..max_entry by the hook-content product,
/// evaluated as one exact big-integer division.
Int count_ssyt(const Partition& shape, int max_entry);

/// True iff t contains a strip of exactly `width` boxes all filled with i.
/// Callers fix width to the rectangle width of the ambient context; the same
/// filling changes strip status as the ambient dimension changes.
bool has_i_strip(const Tableau& t, int i, int width);

/// True iff t contains a `width`-box strip filled with i's then (i+1)'s; a
/// pure i- or (i+1)-strip counts.
bool has_pair_strip(const Tableau& t, int i, int width);

/// No (i,i+1)-strip for any i, hence no constant strip either.
bool is_one_strip_less(const Tableau& t, int width);

/// Number of 1-strip-less SSYTs of the shape with entries 1..r, width n-r.
Int count_one_strip_less(const Partition& shape, const GrassmannianContext& ctx);

/// Inclusion-exclusion count of SSYTs containing no constant full-width strip.
Int count_zero_strip_less(const Partition& shape, const GrassmannianContext& ctx);

/// Entries i whose successor sits in a strictly lower row; t must be standard.
std::vector<int> descents(const Tableau& t);

}  // namespace stripless
