#include "stripless/bijection.hpp"

#include <algorithm>
#include <stdexcept>

namespace stripless {

DescentProfile descent_profile(const Tableau& t) {
  return DescentProfile{descents(t)};
}

Tableau syt_to_blocks(const Tableau& t) {
  std::vector<int> des = descents(t);  // validates standardness
  const auto& rows = t.rows();
  std::vector<std::vector<int>> out(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    out[i].reserve(rows[i].size());
    for (int e : rows[i]) {
      // Block index: 1 + number of descents strictly below e.
      int block = 1 + static_cast<int>(std::lower_bound(des.begin(), des.end(), e) -
                                       des.begin());
      out[i].push_back(block);
    }
  }
  if (rows.empty()) return Tableau{};
  Tableau result{std::move(out)};
  if (!result.is_semistandard()) {
    throw std::logic_error("block collapse produced a non-semistandard filling");
  }
  return result;
}

namespace {

// Entries of the given column, top to bottom.
std::vector<int> column_entries(const Tableau& t, int col) {
  std::vector<int> out;
  for (const auto& row : t.rows()) {
    if (static_cast<size_t>(col) >= row.size()) break;
    out.push_back(row[static_cast<size_t>(col)]);
  }
  return out;
}

// Complement of a sorted entry set inside 1..r, ascending.
std::vector<int> complement_entries(const std::vector<int>& entries, int r) {
  std::vector<bool> present(static_cast<size_t>(r) + 1, false);
  for (int e : entries) {
    if (e < 1 || e > r) throw std::logic_error("entry outside the alphabet");
    present[static_cast<size_t>(e)] = true;
  }
  std::vector<int> out;
  for (int e = 1; e <= r; ++e) {
    if (!present[static_cast<size_t>(e)]) out.push_back(e);
  }
  return out;
}

Tableau from_columns(const Partition& shape, const std::vector<std::vector<int>>& cols) {
  std::vector<std::vector<int>> rows(static_cast<size_t>(shape.num_parts()));
  for (int i = 0; i < shape.num_parts(); ++i) {
    rows[static_cast<size_t>(i)].resize(static_cast<size_t>(shape.part(i)));
  }
  for (int c = 0; c < shape.part(0); ++c) {
    const auto& col = cols[static_cast<size_t>(c)];
    for (size_t i = 0; i < col.size(); ++i) {
      rows[i][static_cast<size_t>(c)] = col[i];
    }
  }
  return Tableau{std::move(rows)};
}

}  // namespace

Tableau syt_to_stripless(const Tableau& t, const GrassmannianContext& ctx) {
  const int r = ctx.rank;
  const int w = ctx.width();
  Partition bar_shape = t.shape();
  if (!ctx.fits(bar_shape)) {
    throw std::domain_error("shape does not fit the rectangle");
  }
  std::vector<int> des = descents(t);
  if (static_cast<int>(des.size()) != r - 1) {
    throw std::domain_error("tableau does not have exactly r-1 descents");
  }
  // With exactly r-1 descents every block is nonempty once the tableau has
  // at least r boxes; only the empty tableau at rank 1 can get here without
  // all entries, and the complementary filling of a missing entry would
  // carry a full-width strip.
  if (t.box_count() < r) {
    throw std::domain_error("tableau is too small to contain every block entry");
  }
  Tableau blocks = syt_to_blocks(t);
  Partition mu = complement(bar_shape, ctx);
  Partition mu_conj = mu.conjugate();
  // Rectangle column c receives the rotated column w-1-c of the block filling;
  // the box content of the remaining top cells is the complement of its entries.
  std::vector<std::vector<int>> cols(static_cast<size_t>(std::max(mu.part(0), 0)));
  for (int c = 0; c < mu.part(0); ++c) {
    std::vector<int> taken = column_entries(blocks, w - 1 - c);
    std::vector<int> mine = complement_entries(taken, r);
    if (static_cast<int>(mine.size()) != mu_conj.part(c)) {
      throw std::logic_error("column complement has the wrong size");
    }
    cols[static_cast<size_t>(c)] = std::move(mine);
  }
  if (mu.empty()) return Tableau{};
  Tableau result = from_columns(mu, cols);
  if (!result.is_semistandard() || !is_one_strip_less(result, w)) {
    throw std::logic_error("complementary filling is not a 1-strip-less SSYT");
  }
  return result;
}

Tableau stripless_to_syt(const Tableau& t, const GrassmannianContext& ctx) {
  const int r = ctx.rank;
  const int w = ctx.width();
  Partition mu = t.shape();
  if (!ctx.fits(mu)) throw std::domain_error("shape does not fit the rectangle");
  if (!t.is_semistandard() || t.max_entry() > r) {
    throw std::domain_error("tableau is not an SSYT over the alphabet");
  }
  if (!is_one_strip_less(t, w)) {
    throw std::domain_error("tableau is not 1-strip-less");
  }
  Partition bar_shape = complement(mu, ctx);
  Partition bar_conj = bar_shape.conjugate();
  // Column j of the complementary filling holds the entries missing from
  // rectangle column w-1-j, ascending down the column.
  std::vector<std::vector<int>> cols(static_cast<size_t>(std::max(bar_shape.part(0), 0)));
  for (int j = 0; j < bar_shape.part(0); ++j) {
    std::vector<int> taken = column_entries(t, w - 1 - j);
    std::vector<int> mine = complement_entries(taken, r);
    if (static_cast<int>(mine.size()) != bar_conj.part(j)) {
      throw std::logic_error("column complement has the wrong size");
    }
    cols[static_cast<size_t>(j)] = std::move(mine);
  }
  if (bar_shape.empty()) return Tableau{};
  Tableau blocks = from_columns(bar_shape, cols);
  if (!blocks.is_semistandard()) {
    throw std::logic_error("complementary filling is not semistandard");
  }
  // Number the boxes entry block by entry block, left to right.
  std::vector<std::vector<int>> out(blocks.rows().size());
  for (size_t i = 0; i < blocks.rows().size(); ++i) {
    out[i].resize(blocks.rows()[i].size());
  }
  int next = 1;
  for (int e = 1; e <= r; ++e) {
    for (int c = 0; c < bar_shape.part(0); ++c) {
      const auto& col = blocks.rows();
      for (size_t i = 0; i < col.size(); ++i) {
        if (static_cast<size_t>(c) < col[i].size() && col[i][static_cast<size_t>(c)] == e) {
          out[i][static_cast<size_t>(c)] = next++;
        }
      }
    }
  }
  Tableau result{std::move(out)};
  if (!result.is_standard()) {
    throw std::logic_error("numbering did not produce a standard tableau");
  }
  if (static_cast<int>(descents(result).size()) != r - 1) {
    throw std::logic_error("result does not have exactly r-1 descents");
  }
  return result;
}

}  // namespace stripless
