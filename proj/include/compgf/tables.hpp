#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "compgf/rational.hpp"

namespace compgf {

// (order, statistic vector) key for connected-structure counts.
struct TableKey {
  int n = 0;
  std::vector<int> k;

  auto operator<=>(const TableKey&) const = default;
};

// Nonnegative integer counts of connected structures, indexed by order and a
// fixed-arity statistic vector. Absent keys count zero.
struct ConnectedCountTable {
  int y_arity = 1;
  std::map<TableKey, Integer> counts;

  Integer count(const TableKey& key) const;
  void set(TableKey key, Integer value);  // drops zeros

  bool operator==(const ConnectedCountTable&) const = default;
};

// (order, statistic, weighted component count) key for full-structure counts.
struct WeightedKey {
  int n = 0;
  int k = 0;
  Rational nu = 0;

  bool operator<(const WeightedKey& other) const;
  bool operator==(const WeightedKey& other) const;
};

struct CountTable {
  std::map<WeightedKey, Integer> counts;

  Integer count(const WeightedKey& key) const;
  void set(WeightedKey key, Integer value);  // drops zeros

  bool operator==(const CountTable&) const = default;
};

// Component shapes excluded from assembly, by (order, statistic) key.
using ForbiddenComponentSet = std::set<TableKey>;

// Human-readable "key: lhs vs rhs" lines for every key on which the two
// tables disagree (missing keys count as zero). Empty means equal.
std::vector<std::string> diff_tables(const CountTable& a, const CountTable& b);

}  // namespace compgf
