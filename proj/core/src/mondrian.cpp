#include "stripless/mondrian.hpp"

#include <algorithm>
#include <stdexcept>

namespace stripless {

GapVector::GapVector(std::vector<int> a) : a_(std::move(a)) {
  if (a_.size() < 2) {
    throw std::invalid_argument("gap vector needs both endpoints");
  }
  if (a_.front() != 1) throw std::invalid_argument("gap vector must start at 1");
  for (size_t i = 1; i < a_.size(); ++i) {
    if (a_[i] <= a_[i - 1]) {
      throw std::invalid_argument("gap vector must strictly increase");
    }
  }
}

GrassmannianContext GapVector::class_context() const {
  return GrassmannianContext(r(), n() + r() - 1);
}

SplitSequence::SplitSequence(std::vector<int> s) : s_(std::move(s)) {
  if (s_.size() < 2 || s_.front() != 0) {
    throw std::invalid_argument("split sequence must start at 0");
  }
  for (size_t i = 1; i < s_.size(); ++i) {
    if (s_[i] <= s_[i - 1]) {
      throw std::invalid_argument("split sequence must strictly increase");
    }
  }
}

bool SplitSequence::has_split_at(int i) const {
  return std::binary_search(s_.begin(), s_.end(), i);
}

std::vector<GapVector> all_gap_vectors(int r, int n) {
  if (r < 1 || n <= r) return {};
  std::vector<GapVector> out;
  std::vector<int> a{1};
  auto rec = [&](auto&& self, int next, int picked) -> void {
    if (picked == r - 1) {
      std::vector<int> full = a;
      full.push_back(n);
      out.emplace_back(GapVector(std::move(full)));
      return;
    }
    for (int v = next; v <= n - 1 - (r - 2 - picked); ++v) {
      a.push_back(v);
      self(self, v + 1, picked + 1);
      a.pop_back();
    }
  };
  rec(rec, 2, 0);
  return out;
}

std::vector<SplitSequence> all_split_sequences(int r) {
  std::vector<SplitSequence> out;
  const unsigned m = static_cast<unsigned>(r - 1);
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> s{0};
    for (int i = 1; i <= static_cast<int>(m); ++i) {
      if (mask & (1u << (i - 1))) s.push_back(i);
    }
    s.push_back(r);
    out.emplace_back(SplitSequence(std::move(s)));
  }
  return out;
}

GapVector gap_of_partition(const Partition& lambda, const GrassmannianContext& ctx) {
  const int r = ctx.rank;
  const int n = ctx.ambient;
  if (lambda.num_parts() > r - 1 || lambda.part(0) > n - r - 1) {
    throw std::domain_error("partition does not fit the inner rectangle");
  }
  std::vector<int> a(static_cast<size_t>(r) + 1);
  a[0] = 1;
  for (int j = 1; j < r; ++j) {
    a[static_cast<size_t>(j)] = n - r - lambda.part(j - 1) + j;
  }
  a[static_cast<size_t>(r)] = n;
  return GapVector(std::move(a));
}

Partition partition_of_gap(const GapVector& g) {
  const int r = g.r();
  const int n = g.n();
  std::vector<int> parts;
  for (int j = 1; j < r; ++j) parts.push_back(n - r - g.a(j) + j);
  return Partition(std::move(parts));
}

FormalCohomologyClass theta(const FormalCohomologyClass& c) {
  const GrassmannianContext& src = c.context();
  GrassmannianContext dst(src.rank + 1, src.ambient + 1);
  FormalCohomologyClass out(dst);
  for (const auto& [mu, coeff] : c.terms()) out.add_term(mu, coeff);
  return out;
}

FormalCohomologyClass flag_correspondence(const FormalCohomologyClass& c) {
  const GrassmannianContext& src = c.context();
  GrassmannianContext dst(src.rank + 1, src.ambient);
  FormalCohomologyClass out(dst);
  for (const auto& [mu, coeff] : c.terms()) {
    if (mu.num_parts() < src.rank) continue;  // 1^{r-1} not contained
    std::vector<int> parts;
    for (int i = 0; i < src.rank; ++i) parts.push_back(mu.part(i) - 1);
    out.add_term(Partition(std::move(parts)), coeff);
  }
  return out;
}

FormalCohomologyClass append_max_row(const FormalCohomologyClass& c, int row) {
  const GrassmannianContext& src = c.context();
  if (row < 0 || row > src.width()) {
    throw std::domain_error("appended row does not fit the rectangle");
  }
  GrassmannianContext dst(src.rank + 1, src.ambient + 1);
  FormalCohomologyClass out(dst);
  for (const auto& [mu, coeff] : c.terms()) {
    if (mu.part(0) > row) {
      throw std::domain_error("appended row is shorter than an existing part");
    }
    std::vector<int> parts{row};
    for (int p : mu.parts()) parts.push_back(p);
    out.add_term(Partition(std::move(parts)), coeff);
  }
  return out;
}

FormalCohomologyClass add_columns(const FormalCohomologyClass& c, int k) {
  if (k < 0) throw std::domain_error("column count must be nonnegative");
  const GrassmannianContext& src = c.context();
  GrassmannianContext dst(src.rank, src.ambient + k);
  FormalCohomologyClass out(dst);
  for (const auto& [mu, coeff] : c.terms()) {
    std::vector<int> parts;
    for (int i = 0; i < src.rank; ++i) parts.push_back(mu.part(i) + k);
    out.add_term(Partition(std::move(parts)), coeff);
  }
  return out;
}

RestrictShiftResult restrict_shift(const FormalCohomologyClass& c, int s) {
  if (s < 0) throw std::domain_error("shift must be nonnegative");
  const GrassmannianContext& src = c.context();
  GrassmannianContext dst(src.rank, src.ambient - s);
  RestrictShiftResult result{FormalCohomologyClass(dst), 0};
  for (const auto& [mu, coeff] : c.terms()) {
    if (s > 0 && (mu.num_parts() < src.rank || mu.part(src.rank - 1) < s)) {
      ++result.dropped_terms;
      continue;
    }
    std::vector<int> parts;
    for (int i = 0; i < src.rank; ++i) parts.push_back(mu.part(i) - s);
    result.cls.add_term(Partition(std::move(parts)), coeff);
  }
  return result;
}

Partition split_factor(const GapVector& g, const SplitSequence& s, int j) {
  const int n = g.n();
  std::vector<int> parts(static_cast<size_t>(s.s(j) - s.s(j - 1) - 1), n - 1);
  parts.push_back(n - 1 - (g.a(s.s(j)) - g.a(s.s(j - 1))));
  return Partition(std::move(parts));
}

FormalCohomologyClass split_product(const GapVector& g, const SplitSequence& s) {
  if (s.r() != g.r()) throw std::domain_error("split sequence rank mismatch");
  GrassmannianContext ctx = g.class_context();
  FormalCohomologyClass prod = FormalCohomologyClass::unit(ctx);
  for (int j = 1; j <= s.ell(); ++j) {
    prod = multiply(prod, FormalCohomologyClass::schubert(ctx, split_factor(g, s, j)));
  }
  return prod;
}

FormalCohomologyClass m_class_explicit(const GapVector& g) {
  const int r = g.r();
  GrassmannianContext ctx = g.class_context();
  FormalCohomologyClass out(ctx);
  for (const SplitSequence& s : all_split_sequences(r)) {
    FormalCohomologyClass prod = split_product(g, s);
    if ((r - s.ell()) % 2 == 0) {
      out += prod;
    } else {
      out -= prod;
    }
  }
  return out;
}

FormalCohomologyClass m_class_recursive(const GapVector& g) {
  const int r = g.r();
  const int n = g.n();
  if (r == 1) return FormalCohomologyClass::unit(GrassmannianContext(1, n));
  const int a1 = g.a(1);

  // Shifted sub-vector (a_2 - a_1 + 1, ..., a_{r-1} - a_1 + 1; n - a_1 + 1).
  std::vector<int> shifted{1};
  for (int j = 2; j < r; ++j) shifted.push_back(g.a(j) - a1 + 1);
  shifted.push_back(n - a1 + 1);
  FormalCohomologyClass inner = m_class_recursive(GapVector(std::move(shifted)));
  FormalCohomologyClass lifted = theta(add_columns(inner, a1 - 1));
  FormalCohomologyClass first = pieri_multiply(lifted, n - a1);

  // Truncated sub-vector (a_2, ..., a_{r-1}; n).
  std::vector<int> truncated{1};
  for (int j = 2; j < r; ++j) truncated.push_back(g.a(j));
  truncated.push_back(n);
  FormalCohomologyClass tail = m_class_recursive(GapVector(std::move(truncated)));
  FormalCohomologyClass second = append_max_row(tail, n - 1);

  return first - second;
}

namespace {

std::vector<int> required_weights(const GapVector& g) {
  std::vector<int> w;
  for (int i = 1; i <= g.r(); ++i) w.push_back(g.n() - 1 - (g.a(i) - g.a(i - 1)));
  return w;
}

}  // namespace

Int pie_refined_coefficient(const Partition& mu, const GapVector& g) {
  const int r = g.r();
  const int n = g.n();
  GrassmannianContext ctx = g.class_context();
  if (!ctx.fits(mu)) throw std::domain_error("shape does not fit the rectangle");
  if (mu.size() != (n - 1) * (r - 1)) return 0;
  std::vector<int> want = required_weights(g);
  for (int w : want) {
    if (w < 0) return 0;
  }
  const int width = n - 1;
  Int count = 0;
  enumerate_ssyt_of_type(mu, want, [&](const Tableau& t) {
    if (is_one_strip_less(t, width)) ++count;
  });
  return count;
}

Int term_coefficient_tableaux(const Partition& mu, const GapVector& g,
                              const SplitSequence& s) {
  const int r = g.r();
  const int n = g.n();
  if (s.r() != r) throw std::domain_error("split sequence rank mismatch");
  GrassmannianContext ctx = g.class_context();
  if (!ctx.fits(mu)) throw std::domain_error("shape does not fit the rectangle");
  if (mu.size() != (n - 1) * (r - 1)) return 0;
  std::vector<int> want = required_weights(g);
  for (int w : want) {
    if (w < 0) return 0;
  }
  const int width = n - 1;
  std::vector<int> strip_at;
  for (int i = 1; i < r; ++i) {
    if (!s.has_split_at(i)) strip_at.push_back(i);
  }
  Int count = 0;
  enumerate_ssyt_of_type(mu, want, [&](const Tableau& t) {
    for (int i : strip_at) {
      if (!has_pair_strip(t, i, width)) return;
    }
    ++count;
  });
  return count;
}

namespace {

// Boxes with entry <= v in each of the first `width` columns.
std::vector<int> column_counts_below(const Tableau& t, int v, int width) {
  std::vector<int> counts(static_cast<size_t>(width), 0);
  const auto& rows = t.rows();
  for (const auto& row : rows) {
    for (size_t c = 0; c < row.size() && c < static_cast<size_t>(width); ++c) {
      if (row[c] <= v) ++counts[c];
    }
  }
  return counts;
}

struct BlockLayout {
  std::vector<int> prev;     // column heights of the chain shape below
  std::vector<int> cur;      // column heights including this block
  std::vector<int> missing;  // missing entry per short column, -1 for tall
};

// Splits the columns of one chain block into tall and short ones and checks
// the tall/short height alternative.
BlockLayout block_layout(const Tableau& t, int lo_entry, int hi_entry,
                         const std::vector<int>& prev, int width) {
  BlockLayout layout;
  layout.prev = prev;
  layout.cur = column_counts_below(t, hi_entry, width);
  layout.missing.assign(static_cast<size_t>(width), -1);
  const int d = hi_entry - lo_entry + 1;
  for (int c = 0; c < width; ++c) {
    int h = layout.cur[static_cast<size_t>(c)] - layout.prev[static_cast<size_t>(c)];
    if (h != d && h != d - 1) {
      throw std::domain_error("chain block has a column of unexpected height");
    }
  }
  return layout;
}

Tableau assemble_from_blocks(const Tableau& t, const GapVector& g,
                             const SplitSequence& s, bool refined_output) {
  const int n = g.n();
  const int width = n - 1;
  Partition shape = t.shape();
  std::vector<std::vector<int>> out(static_cast<size_t>(shape.num_parts()));
  for (int i = 0; i < shape.num_parts(); ++i) {
    out[static_cast<size_t>(i)].assign(static_cast<size_t>(shape.part(i)), 0);
  }
  std::vector<int> prev(static_cast<size_t>(width), 0);
  for (int j = 1; j <= s.ell(); ++j) {
    const int lo = s.s(j - 1) + 1;
    const int hi = s.s(j);
    const int d = hi - lo + 1;
    BlockLayout layout = block_layout(t, lo, hi, prev, width);
    if (refined_output) {
      // Short columns miss one entry each; the missing values must not
      // increase from left to right, with a_e - a_{e-1} columns missing e.
      std::vector<int> shorts;
      for (int c = 0; c < width; ++c) {
        if (layout.cur[static_cast<size_t>(c)] - prev[static_cast<size_t>(c)] == d - 1) {
          shorts.push_back(c);
        }
      }
      size_t idx = 0;
      for (int e = hi; e >= lo; --e) {
        int quota = g.a(e) - g.a(e - 1);
        for (int q = 0; q < quota; ++q) {
          if (idx >= shorts.size()) {
            throw std::logic_error("short column count mismatch");
          }
          layout.missing[static_cast<size_t>(shorts[idx++])] = e;
        }
      }
      if (idx != shorts.size()) {
        throw std::logic_error("short column count mismatch");
      }
    }
    for (int c = 0; c < width; ++c) {
      int rr = prev[static_cast<size_t>(c)];
      for (int e = lo; e <= hi; ++e) {
        bool skip;
        if (refined_output) {
          skip = layout.missing[static_cast<size_t>(c)] == e;
        } else {
          // Pieri-type filling: short columns always miss the top split value.
          skip = e == hi &&
                 layout.cur[static_cast<size_t>(c)] - prev[static_cast<size_t>(c)] == d - 1;
        }
        if (skip) continue;
        out[static_cast<size_t>(rr)][static_cast<size_t>(c)] = e;
        ++rr;
      }
      if (rr != layout.cur[static_cast<size_t>(c)]) {
        throw std::logic_error("chain block filling misaligned");
      }
    }
    prev = layout.cur;
  }
  Tableau result{std::move(out)};
  if (!result.is_semistandard()) {
    throw std::logic_error("reconstructed filling is not semistandard");
  }
  return result;
}

void check_type(const Tableau& t, const std::vector<int>& want) {
  const int r = static_cast<int>(want.size());
  if (t.max_entry() > r) {
    throw std::domain_error("tableau entries exceed the alphabet");
  }
  std::vector<int> have = t.type(r);
  if (have != want) throw std::domain_error("tableau type does not match");
}

}  // namespace

Tableau refill(const Tableau& t, const GapVector& g, const SplitSequence& s) {
  const int r = g.r();
  const int n = g.n();
  if (s.r() != r) throw std::domain_error("split sequence rank mismatch");
  if (!t.is_semistandard()) throw std::domain_error("tableau is not semistandard");
  if (t.shape().part(0) > n - 1) {
    throw std::domain_error("shape does not fit the rectangle");
  }
  std::vector<int> want(static_cast<size_t>(r), n - 1);
  for (int j = 1; j <= s.ell(); ++j) {
    want[static_cast<size_t>(s.s(j) - 1)] = n - 1 - (g.a(s.s(j)) - g.a(s.s(j - 1)));
  }
  check_type(t, want);
  return assemble_from_blocks(t, g, s, /*refined_output=*/true);
}

Tableau unrefill(const Tableau& t, const GapVector& g, const SplitSequence& s) {
  const int r = g.r();
  const int n = g.n();
  if (s.r() != r) throw std::domain_error("split sequence rank mismatch");
  if (!t.is_semistandard()) throw std::domain_error("tableau is not semistandard");
  if (t.shape().part(0) > n - 1) {
    throw std::domain_error("shape does not fit the rectangle");
  }
  std::vector<int> want(static_cast<size_t>(r));
  for (int i = 1; i <= r; ++i) {
    want[static_cast<size_t>(i - 1)] = n - 1 - (g.a(i) - g.a(i - 1));
  }
  check_type(t, want);
  for (int i = 1; i < r; ++i) {
    if (!s.has_split_at(i) && !has_pair_strip(t, i, n - 1)) {
      throw std::domain_error("tableau lacks a required adjacent-entry strip");
    }
  }
  return assemble_from_blocks(t, g, s, /*refined_output=*/false);
}

FormalCohomologyClass summed_m_class(const GrassmannianContext& ctx) {
  const int r = ctx.rank;
  const int n = ctx.ambient;
  FormalCohomologyClass out{GrassmannianContext(r, n + r - 1)};
  for (const GapVector& g : all_gap_vectors(r, n)) out += m_class_explicit(g);
  return out;
}

}  // namespace stripless
