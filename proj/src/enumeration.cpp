#include "compgf/enumeration.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "compgf/errors.hpp"

namespace compgf {

namespace {

bool carries_z(const Monomial& m) {
  if (m.z_kind() == ZKind::multi_index) return !m.z_multi().empty();
  return m.z_weight() != 0;
}

// coefficient * n! as a validated nonnegative integer count.
Integer extract_count(const Monomial& m, const Rational& coeff,
                      const char* what) {
  Rational scaled = coeff * factorial(static_cast<unsigned long>(m.x));
  if (!is_integer(scaled) || scaled < 0) {
    throw inconsistent_table_error(std::string(what) +
                                   " produced a count that is not a "
                                   "nonnegative integer");
  }
  return scaled.get_num();
}

void check_statistic_arity(const ConnectedCountTable& table) {
  if (table.y_arity != 1) {
    throw std::invalid_argument("weighted census requires statistic arity 1");
  }
}

}  // namespace

Series egf_of_counts(const ConnectedCountTable& table, int trunc_order,
                     bool tag_components) {
  Series s(trunc_order, table.y_arity, ZKind::multi_index);
  for (const auto& [key, count] : table.counts) {
    if (key.n < 1) throw inconsistent_table_error("table key with order < 1");
    if (static_cast<int>(key.k.size()) != table.y_arity) {
      throw inconsistent_table_error("table key arity mismatch");
    }
    for (int stat : key.k) {
      if (stat < 0) throw inconsistent_table_error("negative statistic");
    }
    if (count < 0) throw inconsistent_table_error("negative count");
    if (key.n > trunc_order) continue;
    Monomial m;
    m.x = key.n;
    m.y = key.k;
    if (tag_components) m.z = z_tag(key.n);
    s.add_term(m, make_ratio(count, factorial(static_cast<unsigned long>(key.n))));
  }
  return s;
}

ConnectedCountTable counts_from_egf(const Series& egf) {
  ConnectedCountTable table;
  table.y_arity = egf.y_arity();
  for (const auto& [m, c] : egf.terms()) {
    if (carries_z(m)) {
      throw inconsistent_table_error("series carries z exponents");
    }
    if (m.x == 0) {
      // The empty structure's constant term does not belong in the table.
      if (!m.is_constant()) {
        throw inconsistent_table_error("nonzero statistic at order 0");
      }
      continue;
    }
    table.set(TableKey{m.x, m.y}, extract_count(m, c, "count extraction"));
  }
  return table;
}

ConnectedCountTable bicolored_counts(int max_order) {
  ConnectedCountTable table;
  table.y_arity = 1;
  for (int n = 1; n <= max_order; ++n) {
    int max_edges = (n / 2) * (n - n / 2);
    for (int k = 0; k <= max_edges; ++k) {
      Integer total = 0;
      for (int i = 0; i <= n; ++i) {
        total += binomial(static_cast<unsigned long>(n),
                          static_cast<unsigned long>(i)) *
                 binomial(static_cast<unsigned long>(i * (n - i)),
                          static_cast<unsigned long>(k));
      }
      table.set(TableKey{n, {k}}, total);
    }
  }
  return table;
}

ConnectedCountTable connected_from_all(const ConnectedCountTable& all,
                                       int max_order) {
  Series g = add(egf_of_counts(all, max_order, false),
                 Series::one(max_order, all.y_arity));
  return counts_from_egf(log_series(g));
}

ConnectedCountTable components_from_connected(
    const ConnectedCountTable& connected, int max_order) {
  return counts_from_egf(exp_series(egf_of_counts(connected, max_order, false)));
}

ConnectedCountTable remove_components(const ConnectedCountTable& all,
                                      const ForbiddenComponentSet& forbidden,
                                      int max_order) {
  Series g = add(egf_of_counts(all, max_order, false),
                 Series::one(max_order, all.y_arity));
  Series logg = log_series(g);
  for (const TableKey& key : forbidden) {
    if (static_cast<int>(key.k.size()) != all.y_arity) {
      throw std::invalid_argument("forbidden key arity mismatch");
    }
    if (key.n < 1) throw std::invalid_argument("forbidden key order < 1");
    if (key.n > max_order) continue;
    Monomial m;
    m.x = key.n;
    m.y = key.k;
    Rational c = logg.coefficient(m);
    if (c != 0) logg.add_term(m, -c);
  }
  return counts_from_egf(exp_series(logg));
}

Series build_aux(const ConnectedCountTable& connected, int max_order) {
  Series aux = exp_series(egf_of_counts(connected, max_order, true));
  for (const auto& [m, c] : aux.terms()) {
    long tagged = 0;
    for (const auto& [order, count] : m.z_multi()) {
      tagged += static_cast<long>(order) * count;
    }
    if (tagged != m.x) {
      throw internal_inconsistency_error(
          "component tags do not account for the full order");
    }
  }
  return aux;
}

CountTable enumerate_weighted(const ConnectedCountTable& connected,
                              int max_order, const WeightVector& w) {
  check_statistic_arity(connected);
  Series weighted = apply_tau(build_aux(connected, max_order), w);
  CountTable out;
  for (const auto& [m, c] : weighted.terms()) {
    if (m.x == 0) continue;
    Rational scaled = c * factorial(static_cast<unsigned long>(m.x));
    if (!is_integer(scaled) || scaled < 0) {
      throw internal_inconsistency_error(
          "weighted census coefficient is not a nonnegative integer count");
    }
    out.set(WeightedKey{m.x, m.y[0], m.z_weight()}, Integer(scaled.get_num()));
  }
  return out;
}

Integer count_via_partitions(const ConnectedCountTable& connected,
                             const WeightedKey& key, const WeightVector& w) {
  check_statistic_arity(connected);
  if (key.n < 0 || key.k < 0) return 0;
  if (key.n == 0) return key.k == 0 && key.nu == 0 ? 1 : 0;

  struct Block {
    int order;
    int stat;
    Rational weight;
    Integer count;
    Integer order_factorial;
  };
  std::vector<Block> blocks;
  for (const auto& [tkey, count] : connected.counts) {
    if (tkey.n > key.n) continue;
    blocks.push_back({tkey.n, tkey.k[0], w.weight(tkey.n), count,
                      factorial(static_cast<unsigned long>(tkey.n))});
  }

  Rational total = 0;
  // Choose a multiplicity for each distinct (order, statistic) component
  // shape; a multiset with m_b copies of shape b contributes
  // prod count_b^{m_b} / (order_b!^{m_b} m_b!) to the EGF coefficient.
  auto dfs = [&](auto&& self, std::size_t idx, int rem_n, int rem_k,
                 const Rational& rem_nu, const Rational& factor) -> void {
    if (rem_n == 0) {
      if (rem_k == 0 && rem_nu == 0) total += factor;
      return;
    }
    if (idx == blocks.size()) return;
    const Block& b = blocks[idx];
    self(self, idx + 1, rem_n, rem_k, rem_nu, factor);
    Rational f = factor;
    for (int m = 1; b.order * m <= rem_n && b.stat * m <= rem_k; ++m) {
      f *= make_ratio(b.count, b.order_factorial * m);
      self(self, idx + 1, rem_n - b.order * m, rem_k - b.stat * m,
           rem_nu - b.weight * m, f);
    }
  };
  dfs(dfs, 0, key.n, key.k, key.nu, Rational(1));

  Rational result = total * factorial(static_cast<unsigned long>(key.n));
  if (!is_integer(result) || result < 0) {
    throw internal_inconsistency_error(
        "partition sum is not a nonnegative integer");
  }
  return result.get_num();
}

ConnectedBipartiteResult connected_bipartite_series(int max_order) {
  Series g = add(egf_of_counts(bicolored_counts(max_order), max_order, false),
                 Series::one(max_order, 1));
  Series halved = scale(log_series(g), make_ratio(1, 2));
  ConnectedCountTable table;
  table.y_arity = 1;
  for (const auto& [m, c] : halved.terms()) {
    Rational scaled = c * factorial(static_cast<unsigned long>(m.x));
    if (!is_integer(scaled) || scaled < 0) {
      // Every connected bipartite graph carries exactly two proper
      // 2-colorings, so the halved log must stay integral.
      throw internal_inconsistency_error(
          "halved bicolored log is not an integer table");
    }
    table.set(TableKey{m.x, m.y}, Integer(scaled.get_num()));
  }
  return {std::move(table), std::move(halved)};
}

CountTable bipartite_component_table(int max_order, const WeightVector& w,
                                     const ForbiddenComponentSet& forbidden,
                                     WeightMode mode) {
  ConnectedCountTable conn = connected_bipartite_series(max_order).table;
  for (const TableKey& key : forbidden) {
    if (key.k.size() != 1) {
      throw std::invalid_argument("forbidden key arity mismatch");
    }
    if (key.n < 1) throw std::invalid_argument("forbidden key order < 1");
    conn.set(key, 0);
  }
  WeightVector effective =
      mode == WeightMode::size_weighted ? size_weighted(w, max_order) : w;
  return enumerate_weighted(conn, max_order, effective);
}

}  // namespace compgf
