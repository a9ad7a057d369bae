#include "stripless/bigint.hpp"

#include <stdexcept>

namespace stripless {

Int binomial(long n, long k) {
  if (k < 0) return 0;
  Int num = 1;
  Int den = 1;
  for (long i = 0; i < k; ++i) {
    num *= Int(n - i);
    den *= Int(i + 1);
  }
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw std::logic_error("binomial: falling factorial not divisible by k!");
  }
  Int q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace stripless
