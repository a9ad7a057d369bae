#pragma once

#include <map>
#include <optional>

#include "stripless/bigint.hpp"
#include "stripless/partition.hpp"

namespace stripless {

/// Integer-linear combination of Schubert basis elements sigma_mu inside the
/// bounding rectangle of a fixed Grassmannian context. Zero coefficients are
/// never stored; the term map is ordered by partition, so iteration order is
/// the serialization order.
class FormalCohomologyClass {
 public:
  explicit FormalCohomologyClass(GrassmannianContext ctx) : ctx_(ctx) {}

  static FormalCohomologyClass unit(const GrassmannianContext& ctx);
  static FormalCohomologyClass schubert(const GrassmannianContext& ctx,
                                        const Partition& mu,
                                        const Int& coeff = 1);

  const GrassmannianContext& context() const { return ctx_; }
  const std::map<Partition, Int>& terms() const { return terms_; }

  Int coefficient(const Partition& mu) const;

  /// Adds c * sigma_mu; mu must fit the rectangle.
  void add_term(const Partition& mu, const Int& c);

  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }

  bool is_homogeneous() const;
  /// Common degree of the terms; nullopt for the zero class or mixed degrees.
  std::optional<int> degree() const;

  FormalCohomologyClass& operator+=(const FormalCohomologyClass& other);
  FormalCohomologyClass& operator-=(const FormalCohomologyClass& other);
  FormalCohomologyClass& operator*=(const Int& scalar);

  friend FormalCohomologyClass operator+(FormalCohomologyClass a,
                                         const FormalCohomologyClass& b) {
    a += b;
    return a;
  }
  friend FormalCohomologyClass operator-(FormalCohomologyClass a,
                                         const FormalCohomologyClass& b) {
    a -= b;
    return a;
  }

  friend bool operator==(const FormalCohomologyClass& a,
                         const FormalCohomologyClass& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }

 private:
  GrassmannianContext ctx_;
  std::map<Partition, Int> terms_;
};

/// Littlewood-Richardson coefficient c^nu_{lambda,mu}: the number of
/// semistandard skew fillings of nu/lambda with content mu whose reverse
/// reading word is a lattice word. Requires |nu| = |lambda| + |mu|.
Int lr_coefficient(const Partition& lambda, const Partition& mu,
                   const Partition& nu);

/// Multiplication by sigma_(k): adds a k-box horizontal strip to every term;
/// terms leaving the rectangle are discarded.
FormalCohomologyClass pieri_multiply(const FormalCohomologyClass& c, int k);

/// Bilinear product in the Schubert basis, truncated to the rectangle at
/// every step.
FormalCohomologyClass multiply(const FormalCohomologyClass& a,
                               const FormalCohomologyClass& b);

/// Sum of sigma_lambda * sigma_{lambda~} over all lambda in the inner
/// (r-1) x (n-r-1) rectangle, lambda~ being the complement there.
FormalCohomologyClass berget_fink_class(const GrassmannianContext& ctx);

}  // namespace stripless
