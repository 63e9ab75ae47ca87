#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "compgf/tables.hpp"
#include "compgf/weights.hpp"

namespace compgf {

// Brute-force census over all labeled graphs on n vertices, edges stored as
// a bitmask over the C(n,2) vertex pairs in lexicographic order. The bitmask
// fits 32 bits up to the hard cap below.
inline constexpr int kOracleHardCap = 8;

struct LabeledGraph {
  int n = 0;
  std::uint32_t edges = 0;

  bool has_edge(int u, int v) const;
  int edge_count() const;
};

// Index of pair (u, v), u < v, in lexicographic order (0,1), (0,2), ...
int pair_index(int n, int u, int v);
std::pair<int, int> pair_at(int n, int index);

enum class GraphPredicate { all, bipartite };

bool is_bipartite(const LabeledGraph& g);

// Orders of the connected components, sorted ascending. Isolated vertices
// are components of order 1.
std::vector<int> components(const LabeledGraph& g);

// (order, edge count) per component, sorted.
std::vector<std::pair<int, int>> component_stats(const LabeledGraph& g);

// Sum of w(order) over components, or of order * w(order) in
// size-weighted mode.
Rational weighted_nu(const LabeledGraph& g, const WeightVector& w,
                     WeightMode mode = WeightMode::per_component);

// Visits every labeled graph on n vertices passing pred. Throws
// oracle_cap_error when n exceeds cap (and never past the hard cap).
void enumerate_graphs(int n, GraphPredicate pred,
                      const std::function<void(const LabeledGraph&)>& sink,
                      int cap = kOracleHardCap);

// Ground-truth census for 1 <= n <= max_order: counts per (n, edge count,
// weighted component statistic). The parallel version splits the bitmask
// range across threads; oracle_table_serial is the single-threaded
// reference built on the public helpers above.
CountTable oracle_table(int max_order, GraphPredicate pred,
                        const WeightVector& w,
                        WeightMode mode = WeightMode::per_component,
                        int cap = kOracleHardCap);
CountTable oracle_table_serial(int max_order, GraphPredicate pred,
                               const WeightVector& w,
                               WeightMode mode = WeightMode::per_component,
                               int cap = kOracleHardCap);

// Same census restricted to graphs with no isolated vertices, used to
// cross-check component removal.
CountTable oracle_table_no_isolated(int max_order, GraphPredicate pred,
                                    const WeightVector& w,
                                    WeightMode mode = WeightMode::per_component,
                                    int cap = kOracleHardCap);

// Census over graphs none of whose components match a forbidden
// (order, edge count) shape. Empty set falls back to the plain census.
CountTable oracle_table_filtered(int max_order, GraphPredicate pred,
                                 const WeightVector& w, WeightMode mode,
                                 const ForbiddenComponentSet& forbidden,
                                 int cap = kOracleHardCap);

}  // namespace compgf
