#pragma once

#include <gmpxx.h>

namespace stripless {

/// Arbitrary-precision integer used for every count and coefficient.
using Int = mpz_class;

/// Binomial coefficient C(n, k), computed as a falling-factorial product
/// with a single exact division. k < 0 gives 0; any integer n is allowed
/// (C(-1, 0) = 1, C(m, k) = 0 for 0 <= m < k).
Int binomial(long n, long k);

}  // namespace stripless
