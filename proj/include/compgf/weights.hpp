#pragma once

#include <string>
#include <vector>

#include "compgf/rational.hpp"

namespace compgf {

// Weight attached to each possible component order. Orders beyond the
// explicit entries take the fill value; the default fill of 1 extends any
// finite list to the trivial weight, under which nu is the plain number of
// connected components.
struct WeightVector {
  std::vector<Rational> entries;
  Rational fill = 1;

  // 1-based component order.
  Rational weight(int order) const;

  bool operator==(const WeightVector& other) const = default;
};

WeightVector trivial_weights();

// Comma-separated rationals, e.g. "1,1/2,2/3". Throws std::invalid_argument
// on malformed input.
WeightVector parse_weights(const std::string& list, const Rational& fill = Rational(1));

// Materializes order * weight(order) for orders 1..max_order. Running the
// per-component pipeline with this vector yields the size-weighted reading of
// nu (each component of order i contributes i * w_i).
WeightVector size_weighted(const WeightVector& w, int max_order);

enum class WeightMode { per_component, size_weighted };

}  // namespace compgf
