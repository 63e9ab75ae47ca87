#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "compgf/rational.hpp"

namespace compgf {

// Exponents of the component-order tags z_1, z_2, ...: sorted
// (index, exponent) pairs, all positive. An absent index means exponent 0.
using MultiIndex = std::vector<std::pair<int, int>>;

enum class ZKind { multi_index, weighted };

// Sorts, merges duplicate indices and drops zero exponents. Throws
// std::invalid_argument on nonpositive indices or negative exponents.
MultiIndex make_multi_index(std::vector<std::pair<int, int>> raw);

// The tag attached to one connected component of the given order: z_order^1.
MultiIndex z_tag(int order);

// One term's exponents: x-degree, the vector of y-degrees (one per additive
// statistic), and a z part that is either a multi-index over z_1, z_2, ...
// (before tau) or a single rational exponent on z (after tau).
struct Monomial {
  int x = 0;
  std::vector<int> y;
  std::variant<MultiIndex, Rational> z = MultiIndex{};

  ZKind z_kind() const {
    return z.index() == 0 ? ZKind::multi_index : ZKind::weighted;
  }
  const MultiIndex& z_multi() const { return std::get<MultiIndex>(z); }
  const Rational& z_weight() const { return std::get<Rational>(z); }

  // True for the all-zero exponent record (the constant term's monomial).
  bool is_constant() const;
};

Monomial constant_monomial(int y_arity, ZKind kind);

// Canonical order: x-degree, then y-degrees lexicographically, then the z
// part (multi-indices flattened as sorted pairs, weighted exponents compared
// numerically). Serialization and map iteration both follow this order.
int compare(const Monomial& a, const Monomial& b);

bool operator<(const Monomial& a, const Monomial& b);
bool operator==(const Monomial& a, const Monomial& b);

}  // namespace compgf
