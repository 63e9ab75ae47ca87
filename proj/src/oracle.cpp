#include "compgf/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <stdexcept>

#include "compgf/errors.hpp"

namespace compgf {

namespace {

int effective_cap(int cap) { return std::min(cap, kOracleHardCap); }

void check_order(int n, int cap) {
  if (n < 1) throw std::invalid_argument("graph order must be >= 1");
  if (n > effective_cap(cap)) {
    throw oracle_cap_error("exhaustive enumeration capped at order " +
                           std::to_string(effective_cap(cap)));
  }
}

// Neighbor bitmasks, one byte per vertex (n <= 8).
using Adjacency = std::array<std::uint8_t, kOracleHardCap>;

Adjacency adjacency(const LabeledGraph& g) {
  Adjacency adj{};
  int p = 0;
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v, ++p) {
      if (g.edges >> p & 1u) {
        adj[u] |= static_cast<std::uint8_t>(1u << v);
        adj[v] |= static_cast<std::uint8_t>(1u << u);
      }
    }
  }
  return adj;
}

struct ComponentScan {
  bool bipartite = true;
  // Number of components of each order, packed one nibble per order
  // (nibble i counts components of order i + 1; at most 8 of any order).
  std::uint32_t signature = 0;
};

ComponentScan scan_components(int n, const Adjacency& adj) {
  ComponentScan scan;
  std::array<signed char, kOracleHardCap> color{};
  color.fill(-1);
  std::array<int, kOracleHardCap> stack{};
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    int top = 0;
    stack[top++] = s;
    int order = 0;
    while (top > 0) {
      int v = stack[--top];
      ++order;
      for (std::uint8_t rest = adj[v]; rest != 0; rest &= rest - 1) {
        int u = std::countr_zero(rest);
        if (color[u] < 0) {
          color[u] = static_cast<signed char>(color[v] ^ 1);
          stack[top++] = u;
        } else if (color[u] == color[v]) {
          scan.bipartite = false;
        }
      }
    }
    scan.signature += 1u << (4 * (order - 1));
  }
  return scan;
}

Rational nu_of_signature(std::uint32_t signature, const WeightVector& w,
                         WeightMode mode) {
  Rational nu = 0;
  for (int i = 0; i < kOracleHardCap; ++i) {
    int count = static_cast<int>(signature >> (4 * i) & 0xFu);
    if (count == 0) continue;
    Rational wi = w.weight(i + 1);
    if (mode == WeightMode::size_weighted) wi *= (i + 1);
    nu += wi * count;
  }
  return nu;
}

bool any_isolated(int n, const Adjacency& adj) {
  for (int v = 0; v < n; ++v) {
    if (adj[v] == 0) return true;
  }
  return false;
}

CountTable census(int max_order, GraphPredicate pred, const WeightVector& w,
                  WeightMode mode, int cap, bool exclude_isolated) {
  CountTable out;
  for (int n = 1; n <= max_order; ++n) {
    check_order(n, cap);
    const int pairs = n * (n - 1) / 2;
    const long long total = 1ll << pairs;

    // (edge count << 32 | signature) -> number of graphs, per thread.
    const int max_threads = omp_get_max_threads();
    std::vector<std::map<std::uint64_t, std::uint64_t>> tallies(
        static_cast<std::size_t>(max_threads));

#pragma omp parallel num_threads(max_threads)
    {
      auto& local = tallies[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
      for (long long mask = 0; mask < total; ++mask) {
        LabeledGraph g{n, static_cast<std::uint32_t>(mask)};
        Adjacency adj = adjacency(g);
        if (exclude_isolated && any_isolated(n, adj)) continue;
        ComponentScan scan = scan_components(n, adj);
        if (pred == GraphPredicate::bipartite && !scan.bipartite) continue;
        std::uint64_t key =
            static_cast<std::uint64_t>(std::popcount(g.edges)) << 32 |
            scan.signature;
        ++local[key];
      }
    }

    std::map<std::uint64_t, std::uint64_t> merged;
    for (const auto& local : tallies) {
      for (const auto& [key, tally] : local) merged[key] += tally;
    }
    for (const auto& [key, tally] : merged) {
      int k = static_cast<int>(key >> 32);
      Rational nu =
          nu_of_signature(static_cast<std::uint32_t>(key & 0xFFFFFFFFu), w,
                          mode);
      out.counts[WeightedKey{n, k, nu}] += static_cast<unsigned long>(tally);
    }
  }
  return out;
}

}  // namespace

bool LabeledGraph::has_edge(int u, int v) const {
  if (u == v) return false;
  if (u > v) std::swap(u, v);
  return edges >> pair_index(n, u, v) & 1u;
}

int LabeledGraph::edge_count() const { return std::popcount(edges); }

int pair_index(int n, int u, int v) {
  if (!(0 <= u && u < v && v < n)) {
    throw std::invalid_argument("pair_index expects 0 <= u < v < n");
  }
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

std::pair<int, int> pair_at(int n, int index) {
  for (int u = 0; u + 1 < n; ++u) {
    int row = n - 1 - u;
    if (index < row) return {u, u + 1 + index};
    index -= row;
  }
  throw std::invalid_argument("pair index out of range");
}

bool is_bipartite(const LabeledGraph& g) {
  return scan_components(g.n, adjacency(g)).bipartite;
}

std::vector<int> components(const LabeledGraph& g) {
  Adjacency adj = adjacency(g);
  std::vector<int> orders;
  std::uint8_t seen = 0;
  for (int s = 0; s < g.n; ++s) {
    if (seen >> s & 1u) continue;
    std::uint8_t comp = static_cast<std::uint8_t>(1u << s);
    std::uint8_t frontier = comp;
    while (frontier != 0) {
      std::uint8_t next = 0;
      for (std::uint8_t rest = frontier; rest != 0; rest &= rest - 1) {
        next |= adj[std::countr_zero(rest)];
      }
      frontier = next & static_cast<std::uint8_t>(~comp);
      comp |= frontier;
    }
    seen |= comp;
    orders.push_back(std::popcount(comp));
  }
  std::sort(orders.begin(), orders.end());
  return orders;
}

std::vector<std::pair<int, int>> component_stats(const LabeledGraph& g) {
  Adjacency adj = adjacency(g);
  std::vector<std::pair<int, int>> stats;
  std::uint8_t seen = 0;
  for (int s = 0; s < g.n; ++s) {
    if (seen >> s & 1u) continue;
    std::uint8_t comp = static_cast<std::uint8_t>(1u << s);
    std::uint8_t frontier = comp;
    while (frontier != 0) {
      std::uint8_t next = 0;
      for (std::uint8_t rest = frontier; rest != 0; rest &= rest - 1) {
        next |= adj[std::countr_zero(rest)];
      }
      frontier = next & static_cast<std::uint8_t>(~comp);
      comp |= frontier;
    }
    seen |= comp;
    int edges = 0;
    for (int u = 0; u < g.n; ++u) {
      if (!(comp >> u & 1u)) continue;
      for (int v = u + 1; v < g.n; ++v) {
        if ((comp >> v & 1u) && g.has_edge(u, v)) ++edges;
      }
    }
    stats.emplace_back(std::popcount(comp), edges);
  }
  std::sort(stats.begin(), stats.end());
  return stats;
}

Rational weighted_nu(const LabeledGraph& g, const WeightVector& w,
                     WeightMode mode) {
  Rational nu = 0;
  for (int order : components(g)) {
    Rational wi = w.weight(order);
    if (mode == WeightMode::size_weighted) wi *= order;
    nu += wi;
  }
  return nu;
}

void enumerate_graphs(int n, GraphPredicate pred,
                      const std::function<void(const LabeledGraph&)>& sink,
                      int cap) {
  check_order(n, cap);
  const int pairs = n * (n - 1) / 2;
  const long long total = 1ll << pairs;
  for (long long mask = 0; mask < total; ++mask) {
    LabeledGraph g{n, static_cast<std::uint32_t>(mask)};
    if (pred == GraphPredicate::bipartite && !is_bipartite(g)) continue;
    sink(g);
  }
}

CountTable oracle_table(int max_order, GraphPredicate pred,
                        const WeightVector& w, WeightMode mode, int cap) {
  return census(max_order, pred, w, mode, cap, false);
}

CountTable oracle_table_serial(int max_order, GraphPredicate pred,
                               const WeightVector& w, WeightMode mode,
                               int cap) {
  CountTable out;
  for (int n = 1; n <= max_order; ++n) {
    enumerate_graphs(
        n, pred,
        [&](const LabeledGraph& g) {
          WeightedKey key{g.n, g.edge_count(), weighted_nu(g, w, mode)};
          out.counts[key] += 1;
        },
        cap);
  }
  return out;
}

CountTable oracle_table_no_isolated(int max_order, GraphPredicate pred,
                                    const WeightVector& w, WeightMode mode,
                                    int cap) {
  return census(max_order, pred, w, mode, cap, true);
}

CountTable oracle_table_filtered(int max_order, GraphPredicate pred,
                                 const WeightVector& w, WeightMode mode,
                                 const ForbiddenComponentSet& forbidden,
                                 int cap) {
  if (forbidden.empty()) return oracle_table(max_order, pred, w, mode, cap);
  CountTable out;
  for (int n = 1; n <= max_order; ++n) {
    enumerate_graphs(
        n, pred,
        [&](const LabeledGraph& g) {
          for (const auto& [order, edges] : component_stats(g)) {
            if (forbidden.count(TableKey{order, {edges}}) != 0) return;
          }
          WeightedKey key{g.n, g.edge_count(), weighted_nu(g, w, mode)};
          out.counts[key] += 1;
        },
        cap);
  }
  return out;
}

}  // namespace compgf
