#include "stripless/schubert.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace stripless {

FormalCohomologyClass FormalCohomologyClass::unit(const GrassmannianContext& ctx) {
  FormalCohomologyClass c(ctx);
  c.add_term(Partition{}, 1);
  return c;
}

FormalCohomologyClass FormalCohomologyClass::schubert(
    const GrassmannianContext& ctx, const Partition& mu, const Int& coeff) {
  FormalCohomologyClass c(ctx);
  c.add_term(mu, coeff);
  return c;
}

Int FormalCohomologyClass::coefficient(const Partition& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? Int(0) : it->second;
}

void FormalCohomologyClass::add_term(const Partition& mu, const Int& c) {
  if (!ctx_.fits(mu)) {
    throw std::domain_error("partition does not fit the rectangle");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool FormalCohomologyClass::is_homogeneous() const {
  return !degree().has_value() ? terms_.empty() : true;
}

std::optional<int> FormalCohomologyClass::degree() const {
  std::optional<int> deg;
  for (const auto& [mu, c] : terms_) {
    int d = mu.size();
    if (!deg) {
      deg = d;
    } else if (*deg != d) {
      return std::nullopt;
    }
  }
  return deg;
}

FormalCohomologyClass& FormalCohomologyClass::operator+=(
    const FormalCohomologyClass& other) {
  if (ctx_ != other.ctx_) throw std::domain_error("context mismatch");
  for (const auto& [mu, c] : other.terms_) add_term(mu, c);
  return *this;
}

FormalCohomologyClass& FormalCohomologyClass::operator-=(
    const FormalCohomologyClass& other) {
  if (ctx_ != other.ctx_) throw std::domain_error("context mismatch");
  for (const auto& [mu, c] : other.terms_) add_term(mu, -c);
  return *this;
}

FormalCohomologyClass& FormalCohomologyClass::operator*=(const Int& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mu, c] : terms_) c *= scalar;
  return *this;
}

namespace {

struct LrMemo {
  std::map<std::tuple<Partition, Partition, Partition>, Int> table;
  std::mutex mutex;
};

LrMemo& lr_memo() {
  static LrMemo memo;
  return memo;
}

Int lr_count(const Partition& lambda, const Partition& mu, const Partition& nu) {
  // Cells of nu/lambda in reverse reading order: rows top to bottom, each row
  // right to left, so the lattice condition can be checked as cells are placed.
  struct Cell {
    int row;
    int col;
  };
  std::vector<Cell> cells;
  for (int i = 0; i < nu.num_parts(); ++i) {
    for (int c = nu.part(i) - 1; c >= lambda.part(i); --c) cells.push_back({i, c});
  }
  const int k = mu.num_parts();
  std::vector<std::vector<int>> grid(static_cast<size_t>(nu.num_parts()));
  for (int i = 0; i < nu.num_parts(); ++i) {
    grid[static_cast<size_t>(i)].assign(static_cast<size_t>(nu.part(i)), 0);
  }
  std::vector<int> count(static_cast<size_t>(k) + 1, 0);
  Int total = 0;
  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == cells.size()) {
      ++total;
      return;
    }
    const auto [r, c] = cells[idx];
    int lo = 1;
    int hi = std::min(k, r + 1);
    if (r > 0 && c >= lambda.part(r - 1)) {
      lo = grid[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1;
    }
    if (c + 1 < nu.part(r)) {
      hi = std::min(hi, grid[static_cast<size_t>(r)][static_cast<size_t>(c + 1)]);
    }
    for (int e = lo; e <= hi; ++e) {
      if (count[static_cast<size_t>(e)] >= mu.part(e - 1)) continue;
      if (e > 1 && count[static_cast<size_t>(e)] + 1 > count[static_cast<size_t>(e - 1)]) {
        continue;
      }
      ++count[static_cast<size_t>(e)];
      grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = e;
      self(self, idx + 1);
      grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
      --count[static_cast<size_t>(e)];
    }
  };
  rec(rec, 0);
  return total;
}

}  // namespace

Int lr_coefficient(const Partition& lambda, const Partition& mu,
                   const Partition& nu) {
  if (nu.size() != lambda.size() + mu.size()) {
    throw std::domain_error("sizes must satisfy |nu| = |lambda| + |mu|");
  }
  if (!nu.contains(lambda)) return 0;
  if (mu.empty()) return 1;
  auto key = std::make_tuple(lambda, mu, nu);
  {
    std::lock_guard<std::mutex> lock(lr_memo().mutex);
    auto it = lr_memo().table.find(key);
    if (it != lr_memo().table.end()) return it->second;
  }
  Int value = lr_count(lambda, mu, nu);
  {
    std::lock_guard<std::mutex> lock(lr_memo().mutex);
    lr_memo().table.emplace(std::move(key), value);
  }
  return value;
}

FormalCohomologyClass pieri_multiply(const FormalCohomologyClass& c, int k) {
  const GrassmannianContext& ctx = c.context();
  if (k < 0 || k > ctx.width()) throw std::domain_error("Pieri degree out of range");
  FormalCohomologyClass out(ctx);
  std::vector<int> nu(static_cast<size_t>(ctx.rank), 0);
  for (const auto& [mu, coeff] : c.terms()) {
    auto rec = [&](auto&& self, int row, int remaining) -> void {
      if (row == ctx.rank) {
        if (remaining == 0) {
          out.add_term(Partition(std::vector<int>(nu.begin(), nu.end())), coeff);
        }
        return;
      }
      // Horizontal strip: mu_{row-1} >= nu_row >= mu_row.
      int lo = mu.part(row);
      int hi = row == 0 ? ctx.width() : std::min(mu.part(row - 1), nu[static_cast<size_t>(row - 1)]);
      for (int v = lo; v <= hi && v - lo <= remaining; ++v) {
        nu[static_cast<size_t>(row)] = v;
        self(self, row + 1, remaining - (v - lo));
      }
      nu[static_cast<size_t>(row)] = 0;
    };
    rec(rec, 0, k);
  }
  return out;
}

FormalCohomologyClass multiply(const FormalCohomologyClass& a,
                               const FormalCohomologyClass& b) {
  if (a.context() != b.context()) throw std::domain_error("context mismatch");
  const GrassmannianContext& ctx = a.context();
  FormalCohomologyClass out(ctx);
  const int r = ctx.rank;
  const int w = ctx.width();
  for (const auto& [alpha, ca] : a.terms()) {
    for (const auto& [beta, cb] : b.terms()) {
      const int total = alpha.size() + beta.size();
      if (total > r * w) continue;
      if (beta.empty()) {
        out.add_term(alpha, ca * cb);
        continue;
      }
      Int factor = ca * cb;
      std::vector<int> nu(static_cast<size_t>(r), 0);
      auto rec = [&](auto&& self, int row, int remaining) -> void {
        if (row == r) {
          if (remaining == 0) {
            Partition candidate{std::vector<int>(nu.begin(), nu.end())};
            Int c = lr_coefficient(alpha, beta, candidate);
            if (c != 0) out.add_term(candidate, factor * c);
          }
          return;
        }
        int lo = alpha.part(row);
        int hi = row == 0 ? w : nu[static_cast<size_t>(row - 1)];
        for (int v = lo; v <= hi; ++v) {
          int extra = v - lo;
          if (extra > remaining) break;
          // Enough room below to absorb the rest of beta.
          long capacity = 0;
          for (int rr = row + 1; rr < r; ++rr) capacity += v - alpha.part(rr);
          if (capacity < remaining - extra) continue;
          nu[static_cast<size_t>(row)] = v;
          self(self, row + 1, remaining - extra);
        }
        nu[static_cast<size_t>(row)] = 0;
      };
      rec(rec, 0, beta.size());
    }
  }
  return out;
}

FormalCohomologyClass berget_fink_class(const GrassmannianContext& ctx) {
  FormalCohomologyClass out(ctx);
  const int rows = ctx.rank - 1;
  const int width = ctx.width() - 1;
  for_each_partition_in_rectangle(rows, width, [&](const Partition& lambda) {
    Partition tilde = complement_in_rectangle(lambda, rows, width);
    out += multiply(FormalCohomologyClass::schubert(ctx, lambda),
                    FormalCohomologyClass::schubert(ctx, tilde));
  });
  return out;
}

}  // namespace stripless
