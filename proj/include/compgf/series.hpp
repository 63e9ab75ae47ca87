#pragma once

#include <map>
#include <vector>

#include "compgf/monomial.hpp"
#include "compgf/rational.hpp"
#include "compgf/weights.hpp"

namespace compgf {

// A truncated multivariate series over the rationals: exact coefficients on a
// sparse monomial map, with every term of x-degree > trunc_order dropped on
// entry. All binary operations require matching y_arity and z kind.
class Series {
 public:
  Series(int trunc_order, int y_arity, ZKind z_kind = ZKind::multi_index);

  // The multiplicative identity at the given shape.
  static Series one(int trunc_order, int y_arity,
                    ZKind z_kind = ZKind::multi_index);

  int trunc_order() const { return trunc_order_; }
  int y_arity() const { return y_arity_; }
  ZKind z_kind() const { return z_kind_; }

  // Adds c to the coefficient of m. Terms beyond the truncation order are
  // dropped silently; terms whose coefficient cancels to zero are erased.
  // Throws if m's shape (y arity, z kind) does not match the series.
  void add_term(const Monomial& m, const Rational& c);

  // Coefficient of m, zero if absent.
  Rational coefficient(const Monomial& m) const;

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational constant_term() const;

  // Same terms re-truncated to a different order.
  Series with_trunc_order(int trunc_order) const;

  bool operator==(const Series& other) const;

 private:
  void check_monomial(const Monomial& m) const;

  int trunc_order_;
  int y_arity_;
  ZKind z_kind_;
  std::map<Monomial, Rational> terms_;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series scale(const Series& a, const Rational& c);

// Product truncated to min(a.trunc_order, b.trunc_order). Parallelized over
// term pairs when the workload is large enough; mul_serial is the plain
// single-threaded reference the tests compare against.
Series mul(const Series& a, const Series& b);
Series mul_serial(const Series& a, const Series& b);

// exp(s) = sum_k s^k / k!. Requires a zero constant term (otherwise the sum
// would not terminate at the truncation order); throws
// nonzero_constant_term_error if violated.
Series exp_series(const Series& s);

// log(s) = sum_k (-1)^(k+1) (s-1)^k / k. Requires constant term exactly 1;
// throws bad_constant_term_error if violated.
Series log_series(const Series& s);

// The weight-substitution homomorphism: each z multi-index prod z_i^{a_i}
// maps to z^{sum w(i) a_i}. Input must be a multi-index series; the result
// has ZKind::weighted. Throws series_kind_error on a weighted input.
Series apply_tau(const Series& s, const WeightVector& w);

// Sets every y_j = 1, collapsing the y exponents to arity 0. z is untouched.
Series specialize_y_to_one(const Series& s);

// Sets z = 1 (any kind): z exponents are erased, the result is a multi-index
// series with empty tags.
Series specialize_z_to_one(const Series& s);

}  // namespace compgf
