#pragma once

#include <vector>

#include "stripless/bigint.hpp"
#include "stripless/partition.hpp"
#include "stripless/schubert.hpp"
#include "stripless/tableau.hpp"

namespace stripless {

/// Bookkeeping for the alternating sums: how many parts of mu have the
/// maximal length, and mu with 0, 1, ..., m of those parts removed.
struct MaxPartData {
  int max_part_count = 0;
  std::vector<Partition> truncations;  // truncations[j] drops j maximal parts
};

MaxPartData max_part_data(const Partition& mu, int max_len, int height);

/// Coefficient of sigma_mu in the orbit class by the alternating binomial
/// sum over SSYT counts. Zero when |mu| differs from (r-1)(n-r-1).
Int gamma_klyachko(const Partition& mu, const GrassmannianContext& ctx);

/// Same coefficient as a plain count of 1-strip-less SSYTs, with the same
/// degree convention.
Int gamma_stripless(const Partition& mu, const GrassmannianContext& ctx);

/// Coefficient of sigma_mu in the summed gap classes on Gr(r, n+r-1), via the
/// alternating sum over zero-strip-less counts with maximal part length n-1.
Int coeff_via_fill0(const Partition& mu, const GrassmannianContext& ctx_big);

/// sum_j C(n-r+j-1, j) * C(r-j, l-j) == C(n, l), checked exactly.
bool binomial_identity_check(long n, long r, long l);

/// The full orbit class assembled from gamma_klyachko.
FormalCohomologyClass klyachko_class(const GrassmannianContext& ctx);

/// The full orbit class assembled from 1-strip-less counts.
FormalCohomologyClass stripless_class(const GrassmannianContext& ctx);

}  // namespace stripless
