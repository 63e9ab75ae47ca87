#pragma once

#include "compgf/series.hpp"
#include "compgf/tables.hpp"
#include "compgf/weights.hpp"

namespace compgf {

// --- EGF <-> count table conversions -------------------------------------

// Builds sum over keys of count * x^n y^k / n! (optionally tagging each term
// with z_n) truncated at trunc_order. Throws inconsistent_table_error on
// keys with n < 1 or negative statistics.
Series egf_of_counts(const ConnectedCountTable& table, int trunc_order,
                     bool tag_components);

// Inverse direction: multiplies each coefficient by n! and requires the
// result to be a nonnegative integer, else throws inconsistent_table_error.
// The series must carry no z exponents.
ConnectedCountTable counts_from_egf(const Series& egf);

// --- Closed-form inputs ---------------------------------------------------

// Labeled bicolored bipartite graphs: sum over color-class splits of
// C(n, i) * C(i(n-i), k), for 0 <= n <= max_order, all k. (n = 0 contributes
// the single empty graph and is not stored; tables hold n >= 1.)
ConnectedCountTable bicolored_counts(int max_order);

// --- Exponential-formula machinery ----------------------------------------

// all -> connected: log of the all-structures EGF (constant term forced to
// 1 by prepending the empty structure). Validates that every extracted
// count is a nonnegative integer.
ConnectedCountTable connected_from_all(const ConnectedCountTable& all,
                                       int max_order);

// connected -> all: exp of the connected-structures EGF.
ConnectedCountTable components_from_connected(
    const ConnectedCountTable& connected, int max_order);

// Removes the forbidden component shapes from an all-structures table:
// exp(log(all EGF) - sum of forbidden connected terms). Forbidden keys the
// connected table does not contain are ignored.
ConnectedCountTable remove_components(const ConnectedCountTable& all,
                                      const ForbiddenComponentSet& forbidden,
                                      int max_order);

// --- Weighted component statistics ----------------------------------------

// exp of the z-tagged connected EGF: coefficient of x^n y^k prod z_i^{a_i}
// counts structures on n vertices with statistic k and a_i components of
// order i. Checks the tag invariant sum i*a_i = n on every term.
Series build_aux(const ConnectedCountTable& connected, int max_order);

// Full weighted census: applies tau_w to the aux series and reads off
// integer counts per (n, k, nu). Statistic arity must be 1.
CountTable enumerate_weighted(const ConnectedCountTable& connected,
                              int max_order, const WeightVector& w);

// Independent route to one entry of the same census: a sum over partitions
// of n into component orders with per-order statistic assignments,
// n! * prod(conn[n_i, k_i]) / (prod n_i!^{m_i} m_i!) subject to
// sum k_i = k and sum w(n_i) = nu. Statistic arity must be 1.
Integer count_via_partitions(const ConnectedCountTable& connected,
                             const WeightedKey& key, const WeightVector& w);

// --- Bipartite pipeline ----------------------------------------------------

struct ConnectedBipartiteResult {
  ConnectedCountTable table;
  Series egf;  // no z tags
};

// Connected bipartite counts: half the log of the bicolored EGF (every
// connected bipartite graph has exactly two proper 2-colorings). Validates
// integrality of the halved counts.
ConnectedBipartiteResult connected_bipartite_series(int max_order);

// End-to-end bipartite census: connected counts, optional component
// removal, then the weighted assembly.
CountTable bipartite_component_table(int max_order, const WeightVector& w,
                                     const ForbiddenComponentSet& forbidden,
                                     WeightMode mode = WeightMode::per_component);

}  // namespace compgf
