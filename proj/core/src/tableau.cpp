#include "stripless/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace stripless {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].empty()) {
      throw std::invalid_argument("tableau rows must be nonempty");
    }
    if (i > 0 && rows_[i].size() > rows_[i - 1].size()) {
      throw std::invalid_argument("tableau row lengths must weakly decrease");
    }
    for (int e : rows_[i]) {
      if (e < 1) throw std::invalid_argument("tableau entries must be positive");
    }
  }
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

int Tableau::box_count() const {
  int total = 0;
  for (const auto& row : rows_) total += static_cast<int>(row.size());
  return total;
}

int Tableau::max_entry() const {
  int m = 0;
  for (const auto& row : rows_) {
    for (int e : row) m = std::max(m, e);
  }
  return m;
}

bool Tableau::is_semistandard() const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    for (size_t j = 0; j < rows_[i].size(); ++j) {
      if (j > 0 && rows_[i][j] < rows_[i][j - 1]) return false;
      if (i > 0 && rows_[i][j] <= rows_[i - 1][j]) return false;
    }
  }
  return true;
}

bool Tableau::is_standard() const {
  int n = box_count();
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (size_t i = 0; i < rows_.size(); ++i) {
    for (size_t j = 0; j < rows_[i].size(); ++j) {
      int e = rows_[i][j];
      if (e > n || seen[static_cast<size_t>(e)]) return false;
      seen[static_cast<size_t>(e)] = true;
      if (j > 0 && rows_[i][j] <= rows_[i][j - 1]) return false;
      if (i > 0 && rows_[i][j] <= rows_[i - 1][j]) return false;
    }
  }
  return true;
}

int Tableau::weight(int e) const {
  int count = 0;
  for (const auto& row : rows_) {
    for (int x : row) {
      if (x == e) ++count;
    }
  }
  return count;
}

std::vector<int> Tableau::type(int alphabet) const {
  std::vector<int> w(static_cast<size_t>(alphabet), 0);
  for (const auto& row : rows_) {
    for (int x : row) {
      if (x >= 1 && x <= alphabet) ++w[static_cast<size_t>(x - 1)];
    }
  }
  return w;
}

namespace {

// Row of the box holding e in the given column, or -1. Column entries are
// strictly increasing, so the box is unique.
int row_of_entry(const std::vector<std::vector<int>>& rows, int col, int e) {
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<size_t>(col) >= rows[i].size()) break;
    int x = rows[i][static_cast<size_t>(col)];
    if (x == e) return static_cast<int>(i);
    if (x > e) break;
  }
  return -1;
}

}  // namespace

void enumerate_ssyt(const Partition& shape, int max_entry,
                    const std::function<void(const Tableau&)>& fn) {
  const int nrows = shape.num_parts();
  std::vector<std::vector<int>> grid(static_cast<size_t>(nrows));
  for (int i = 0; i < nrows; ++i) {
    grid[static_cast<size_t>(i)].assign(static_cast<size_t>(shape.part(i)), 0);
  }
  auto rec = [&](auto&& self, int r, int c) -> void {
    if (r == nrows) {
      fn(Tableau(grid));
      return;
    }
    int nr = r;
    int nc = c + 1;
    if (nc == shape.part(r)) {
      nr = r + 1;
      nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, grid[static_cast<size_t>(r)][static_cast<size_t>(c - 1)]);
    if (r > 0) lo = std::max(lo, grid[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
    for (int e = lo; e <= max_entry; ++e) {
      grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = e;
      self(self, nr, nc);
    }
    grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
  };
  if (nrows == 0) {
    fn(Tableau{});
    return;
  }
  rec(rec, 0, 0);
}

std::vector<Tableau> all_ssyt(const Partition& shape, int max_entry) {
  std::vector<Tableau> out;
  enumerate_ssyt(shape, max_entry, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

void enumerate_ssyt_of_type(const Partition& shape,
                            const std::vector<int>& type,
                            const std::function<void(const Tableau&)>& fn) {
  const int alphabet = static_cast<int>(type.size());
  int total = 0;
  for (int w : type) {
    if (w < 0) return;
    total += w;
  }
  if (total != shape.size()) return;
  const int nrows = shape.num_parts();
  if (nrows == 0) {
    fn(Tableau{});
    return;
  }
  std::vector<std::vector<int>> grid(static_cast<size_t>(nrows));
  for (int i = 0; i < nrows; ++i) {
    grid[static_cast<size_t>(i)].assign(static_cast<size_t>(shape.part(i)), 0);
  }
  std::vector<int> used(static_cast<size_t>(alphabet) + 1, 0);
  auto rec = [&](auto&& self, int r, int c) -> void {
    if (r == nrows) {
      fn(Tableau(grid));
      return;
    }
    int nr = r;
    int nc = c + 1;
    if (nc == shape.part(r)) {
      nr = r + 1;
      nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, grid[static_cast<size_t>(r)][static_cast<size_t>(c - 1)]);
    if (r > 0) lo = std::max(lo, grid[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
    for (int e = lo; e <= alphabet; ++e) {
      if (used[static_cast<size_t>(e)] == type[static_cast<size_t>(e - 1)]) continue;
      ++used[static_cast<size_t>(e)];
      grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = e;
      self(self, nr, nc);
      --used[static_cast<size_t>(e)];
    }
    grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
  };
  rec(rec, 0, 0);
}

void enumerate_syt(const Partition& shape,
                   const std::function<void(const Tableau&)>& fn) {
  const int nrows = shape.num_parts();
  const int n = shape.size();
  if (nrows == 0) {
    fn(Tableau{});
    return;
  }
  std::vector<std::vector<int>> grid(static_cast<size_t>(nrows));
  for (int i = 0; i < nrows; ++i) {
    grid[static_cast<size_t>(i)].assign(static_cast<size_t>(shape.part(i)), 0);
  }
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);
  auto rec = [&](auto&& self, int r, int c) -> void {
    if (r == nrows) {
      fn(Tableau(grid));
      return;
    }
    int nr = r;
    int nc = c + 1;
    if (nc == shape.part(r)) {
      nr = r + 1;
      nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, grid[static_cast<size_t>(r)][static_cast<size_t>(c - 1)] + 1);
    if (r > 0) lo = std::max(lo, grid[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
    for (int e = lo; e <= n; ++e) {
      if (used[static_cast<size_t>(e)]) continue;
      used[static_cast<size_t>(e)] = true;
      grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = e;
      self(self, nr, nc);
      used[static_cast<size_t>(e)] = false;
    }
    grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
  };
  rec(rec, 0, 0);
}

std::vector<Tableau> all_syt(const Partition& shape) {
  std::vector<Tableau> out;
  enumerate_syt(shape, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

Int count_ssyt(const Partition& shape, int max_entry) {
  if (max_entry < 0) throw std::invalid_argument("alphabet size must be nonnegative");
  if (shape.empty()) return 1;
  if (shape.num_parts() > max_entry) return 0;
  const Partition conj = shape.conjugate();
  Int num = 1;
  Int den = 1;
  for (int i = 0; i < shape.num_parts(); ++i) {
    for (int j = 0; j < shape.part(i); ++j) {
      int content = j - i;
      int hook = (shape.part(i) - j) + (conj.part(j) - i) - 1;
      num *= Int(max_entry + content);
      den *= Int(hook);
    }
  }
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw std::logic_error("hook-content product is not an integer");
  }
  Int q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

bool has_i_strip(const Tableau& t, int i, int width) {
  if (width <= 0) return false;
  const auto& rows = t.rows();
  if (rows.empty() || static_cast<int>(rows[0].size()) < width) return false;
  for (int c = 0; c < width; ++c) {
    if (row_of_entry(rows, c, i) < 0) return false;
  }
  return t.weight(i) == width;
}

bool has_pair_strip(const Tableau& t, int i, int width) {
  if (width <= 0) return false;
  const auto& rows = t.rows();
  if (rows.empty() || static_cast<int>(rows[0].size()) < width) return false;
  std::vector<int> row_i(static_cast<size_t>(width));
  std::vector<int> row_next(static_cast<size_t>(width));
  for (int c = 0; c < width; ++c) {
    row_i[static_cast<size_t>(c)] = row_of_entry(rows, c, i);
    row_next[static_cast<size_t>(c)] = row_of_entry(rows, c, i + 1);
  }
  int prefix = 0;  // columns 0..prefix-1 all hold i
  while (prefix < width && row_i[static_cast<size_t>(prefix)] >= 0) ++prefix;
  int suffix = width;  // columns suffix..width-1 all hold i+1
  while (suffix > 0 && row_next[static_cast<size_t>(suffix - 1)] >= 0) --suffix;
  for (int k = suffix; k <= prefix; ++k) {
    if (k == 0 || k == width) return true;
    if (row_i[static_cast<size_t>(k - 1)] >= row_next[static_cast<size_t>(k)]) {
      return true;
    }
  }
  return false;
}

bool is_one_strip_less(const Tableau& t, int width) {
  const int m = t.max_entry();
  for (int i = 1; i <= m; ++i) {
    if (has_i_strip(t, i, width)) return false;
  }
  for (int i = 1; i < m; ++i) {
    if (has_pair_strip(t, i, width)) return false;
  }
  return true;
}

Int count_one_strip_less(const Partition& shape, const GrassmannianContext& ctx) {
  if (!ctx.fits(shape)) throw std::domain_error("shape does not fit the rectangle");
  const int width = ctx.width();
  Int count = 0;
  enumerate_ssyt(shape, ctx.rank, [&](const Tableau& t) {
    if (is_one_strip_less(t, width)) ++count;
  });
  return count;
}

Int count_zero_strip_less(const Partition& shape, const GrassmannianContext& ctx) {
  if (!ctx.fits(shape)) throw std::domain_error("shape does not fit the rectangle");
  const int width = ctx.width();
  const int r = ctx.rank;
  int m = 0;
  while (m < shape.num_parts() && shape.part(m) == width) ++m;
  Int total = 0;
  for (int j = 0; j <= m; ++j) {
    std::vector<int> rest(shape.parts().begin() + j, shape.parts().end());
    Int term = binomial(r, j) * count_ssyt(Partition(std::move(rest)), r - j);
    if (j % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

std::vector<int> descents(const Tableau& t) {
  if (!t.is_standard()) throw std::domain_error("tableau is not standard");
  const int n = t.box_count();
  std::vector<int> row_of(static_cast<size_t>(n) + 1, 0);
  const auto& rows = t.rows();
  for (size_t i = 0; i < rows.size(); ++i) {
    for (int e : rows[i]) row_of[static_cast<size_t>(e)] = static_cast<int>(i);
  }
  std::vector<int> out;
  for (int e = 1; e < n; ++e) {
    if (row_of[static_cast<size_t>(e + 1)] > row_of[static_cast<size_t>(e)]) {
      out.push_back(e);
    }
  }
  return out;
}

}  // namespace stripless
