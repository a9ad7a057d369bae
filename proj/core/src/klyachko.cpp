#include "stripless/klyachko.hpp"

#include <stdexcept>

namespace stripless {

MaxPartData max_part_data(const Partition& mu, int max_len, int height) {
  if (mu.num_parts() > height || mu.part(0) > max_len) {
    throw std::domain_error("shape does not fit the rectangle");
  }
  MaxPartData data;
  while (data.max_part_count < mu.num_parts() &&
         mu.part(data.max_part_count) == max_len) {
    ++data.max_part_count;
  }
  for (int j = 0; j <= data.max_part_count; ++j) {
    std::vector<int> rest(mu.parts().begin() + j, mu.parts().end());
    data.truncations.emplace_back(Partition(std::move(rest)));
  }
  return data;
}

Int gamma_klyachko(const Partition& mu, const GrassmannianContext& ctx) {
  if (!ctx.fits(mu)) throw std::domain_error("shape does not fit the rectangle");
  const int r = ctx.rank;
  const int n = ctx.ambient;
  if (mu.size() != (r - 1) * (n - r - 1)) return 0;
  MaxPartData data = max_part_data(mu, n - r, r);
  Int total = 0;
  for (int j = 0; j <= data.max_part_count; ++j) {
    Int term = binomial(n, j) * count_ssyt(data.truncations[static_cast<size_t>(j)], r - j);
    if (j % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

Int gamma_stripless(const Partition& mu, const GrassmannianContext& ctx) {
  if (!ctx.fits(mu)) throw std::domain_error("shape does not fit the rectangle");
  const int r = ctx.rank;
  const int n = ctx.ambient;
  if (mu.size() != (r - 1) * (n - r - 1)) return 0;
  return count_one_strip_less(mu, ctx);
}

Int coeff_via_fill0(const Partition& mu, const GrassmannianContext& ctx_big) {
  if (!ctx_big.fits(mu)) throw std::domain_error("shape does not fit the rectangle");
  const int r = ctx_big.rank;
  const int n = ctx_big.ambient - r + 1;  // width n-1
  if (mu.size() != (r - 1) * (n - 1)) return 0;
  MaxPartData data = max_part_data(mu, n - 1, r);
  Int total = 0;
  for (int j = 0; j <= data.max_part_count; ++j) {
    GrassmannianContext inner(r - j, (n - 1) + (r - j));
    Int term = binomial(n - r + j - 1, j) *
               count_zero_strip_less(data.truncations[static_cast<size_t>(j)], inner);
    if (j % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

bool binomial_identity_check(long n, long r, long l) {
  if (l < 0 || l > r || r > n) {
    throw std::domain_error("need 0 <= l <= r <= n");
  }
  Int lhs = 0;
  for (long j = 0; j <= l; ++j) {
    lhs += binomial(n - r + j - 1, j) * binomial(r - j, l - j);
  }
  return lhs == binomial(n, l);
}

FormalCohomologyClass klyachko_class(const GrassmannianContext& ctx) {
  FormalCohomologyClass out(ctx);
  const int degree = (ctx.rank - 1) * (ctx.width() - 1);
  for_each_partition_in_rectangle_of_size(
      ctx.rank, ctx.width(), degree, [&](const Partition& mu) {
        Int g = gamma_klyachko(mu, ctx);
        if (g != 0) out.add_term(mu, g);
      });
  return out;
}

FormalCohomologyClass stripless_class(const GrassmannianContext& ctx) {
  FormalCohomologyClass out(ctx);
  const int degree = (ctx.rank - 1) * (ctx.width() - 1);
  for_each_partition_in_rectangle_of_size(
      ctx.rank, ctx.width(), degree, [&](const Partition& mu) {
        Int g = count_one_strip_less(mu, ctx);
        if (g != 0) out.add_term(mu, g);
      });
  return out;
}

}  // namespace stripless
