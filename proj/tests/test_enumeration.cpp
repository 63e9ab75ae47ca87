#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "compgf/enumeration.hpp"
#include "compgf/errors.hpp"
#include "compgf/oracle.hpp"
#include "doctest.h"
#include "golden_counts.hpp"

using namespace compgf;

namespace {

// Collapses a census keyed by (n, k, nu) to (n, k), summing counts.
ConnectedCountTable drop_nu(const CountTable& table) {
  ConnectedCountTable out;
  for (const auto& [key, count] : table.counts) {
    out.counts[TableKey{key.n, {key.k}}] += count;
  }
  return out;
}

ConnectedCountTable random_table(std::mt19937& rng, int max_order) {
  std::uniform_int_distribution<int> stat(0, 4);
  std::uniform_int_distribution<int> value(0, 9);
  ConnectedCountTable table;
  for (int n = 1; n <= max_order; ++n) {
    table.set(TableKey{n, {stat(rng)}}, value(rng));
    table.set(TableKey{n, {stat(rng)}}, value(rng));
  }
  return table;
}

}  // namespace

TEST_CASE("bicolored counts match hand values") {
  ConnectedCountTable table = bicolored_counts(4);
  CHECK(table.count({1, {0}}) == 2);   // lone vertex, two colors
  CHECK(table.count({2, {0}}) == 4);
  CHECK(table.count({2, {1}}) == 2);   // an edge forces opposite colors
  CHECK(table.count({3, {2}}) == 6);
  CHECK(table.count({4, {4}}) == 6);   // C4 with both alternating colorings
  CHECK(table.count({4, {5}}) == 0);
}

TEST_CASE("connected bipartite counts match the one-component census rows") {
  ConnectedCountTable conn = connected_bipartite_series(8).table;
  CHECK(conn.count({1, {0}}) == 1);
  CHECK(conn.count({2, {1}}) == 1);
  for (const GoldenCount& row : golden_bipartite_counts()) {
    if (row.nu != 1 || row.n > 8) continue;
    CHECK(conn.count({row.n, {row.k}}) == row.count);
  }
}

TEST_CASE("halved bicolored log stays integral up to order 12") {
  for (int order = 1; order <= 12; ++order) {
    ConnectedBipartiteResult result = connected_bipartite_series(order);
    for (const auto& [key, count] : result.table.counts) {
      CHECK(count > 0);
    }
    // The EGF carries exactly the table, normalized by n!.
    CHECK(counts_from_egf(result.egf) == result.table);
  }
}

TEST_CASE("exp and log table conversions invert each other") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 10; ++trial) {
    ConnectedCountTable conn = random_table(rng, 6);
    ConnectedCountTable all = components_from_connected(conn, 6);
    CHECK(connected_from_all(all, 6) == conn);
  }
}

TEST_CASE("all-structures bipartite table matches the oracle") {
  ConnectedCountTable conn = connected_bipartite_series(6).table;
  ConnectedCountTable all = components_from_connected(conn, 6);
  CountTable truth = oracle_table(6, GraphPredicate::bipartite,
                                  trivial_weights());
  CHECK(all == drop_nu(truth));
}

TEST_CASE("count extraction rejects invalid tables") {
  // With 2 structures of order 1 and 1 of order 2 the connected count at
  // order 2 would be 1 - C(1,0)*2*2/2 < 0, so the table is not realizable.
  ConnectedCountTable bogus;
  bogus.set(TableKey{1, {0}}, 2);
  bogus.set(TableKey{2, {0}}, 1);
  CHECK_THROWS_AS(connected_from_all(bogus, 2), inconsistent_table_error);

  ConnectedCountTable negative;
  negative.counts[TableKey{1, {0}}] = -1;
  CHECK_THROWS_AS(egf_of_counts(negative, 3, false), inconsistent_table_error);

  ConnectedCountTable bad_order;
  bad_order.counts[TableKey{0, {0}}] = 1;
  CHECK_THROWS_AS(egf_of_counts(bad_order, 3, false),
                  inconsistent_table_error);
}

TEST_CASE("component removal drops exactly the chosen shapes") {
  ConnectedCountTable conn = connected_bipartite_series(6).table;
  ConnectedCountTable all = components_from_connected(conn, 6);

  SUBCASE("empty set is the identity") {
    CHECK(remove_components(all, {}, 6) == all);
  }

  SUBCASE("removal commutes with assembly") {
    ForbiddenComponentSet forbidden = {TableKey{1, {0}}, TableKey{3, {2}}};
    ConnectedCountTable pruned = conn;
    for (const TableKey& key : forbidden) pruned.set(key, 0);
    CHECK(remove_components(all, forbidden, 6) ==
          components_from_connected(pruned, 6));
  }

  SUBCASE("no isolated vertices matches the degree-filtered oracle") {
    CountTable truth = oracle_table_no_isolated(
        6, GraphPredicate::bipartite, trivial_weights());
    CHECK(remove_components(all, {TableKey{1, {0}}}, 6) == drop_nu(truth));
  }

  SUBCASE("forbidding an absent shape changes nothing") {
    CHECK(remove_components(all, {TableKey{2, {0}}}, 6) == all);
  }
}

TEST_CASE("aux series tags component orders consistently") {
  ConnectedCountTable conn = connected_bipartite_series(5).table;
  Series aux = build_aux(conn, 5);
  CHECK(aux.constant_term() == 1);

  // One K2: x^2 y z_2 / 2!.
  Monomial k2;
  k2.x = 2;
  k2.y = {1};
  k2.z = z_tag(2);
  CHECK(aux.coefficient(k2) == make_ratio(1, 2));

  // Two K2 components: 3 pairings / 4! = 1/8 at x^4 y^2 z_2^2.
  Monomial two_k2;
  two_k2.x = 4;
  two_k2.y = {2};
  two_k2.z = make_multi_index({{2, 2}});
  CHECK(aux.coefficient(two_k2) == make_ratio(1, 8));

  for (const auto& [m, c] : aux.terms()) {
    int tagged = 0;
    for (const auto& [order, count] : m.z_multi()) tagged += order * count;
    CHECK(tagged == m.x);
  }
}

TEST_CASE("weighted census agrees with the oracle") {
  ConnectedCountTable conn = connected_bipartite_series(6).table;

  SUBCASE("trivial weights count components") {
    CHECK(enumerate_weighted(conn, 6, trivial_weights()) ==
          oracle_table(6, GraphPredicate::bipartite, trivial_weights()));
  }

  SUBCASE("rational weights") {
    WeightVector w = parse_weights("1,1/2,1/3");
    CHECK(enumerate_weighted(conn, 6, w) ==
          oracle_table(6, GraphPredicate::bipartite, w));
  }

  SUBCASE("negative and zero weights") {
    WeightVector w = parse_weights("-1,0,1/2", make_ratio(-2, 3));
    CHECK(enumerate_weighted(conn, 5, w) ==
          oracle_table(5, GraphPredicate::bipartite, w));
  }
}

TEST_CASE("size-weighted mode multiplies weights by the order") {
  WeightVector w = parse_weights("1/2", make_ratio(1, 2));
  CountTable via_mode = bipartite_component_table(
      5, w, {}, WeightMode::size_weighted);
  CHECK(via_mode == oracle_table(5, GraphPredicate::bipartite, w,
                                 WeightMode::size_weighted));
  // Under w(i) = 1/i, size weighting recovers the component count.
  WeightVector harmonic;
  for (int i = 1; i <= 5; ++i) harmonic.entries.push_back(make_ratio(1, i));
  CHECK(bipartite_component_table(5, harmonic, {},
                                  WeightMode::size_weighted) ==
        bipartite_component_table(5, trivial_weights(), {},
                                  WeightMode::per_component));
}

TEST_CASE("partition sum matches the generating-function census") {
  ConnectedCountTable conn = connected_bipartite_series(7).table;
  for (const WeightVector& w :
       {trivial_weights(), parse_weights("1,1/2,1/3"),
        parse_weights("-2,0,1/3", make_ratio(5, 7))}) {
    CountTable table = enumerate_weighted(conn, 7, w);
    for (const auto& [key, count] : table.counts) {
      CHECK(count_via_partitions(conn, key, w) == count);
    }
    // Keys absent from the census must come out zero.
    CHECK(count_via_partitions(conn, WeightedKey{3, 2, Rational(17)}, w) == 0);
    CHECK(count_via_partitions(conn, WeightedKey{4, 30, Rational(1)}, w) == 0);
  }
  CHECK(count_via_partitions(conn, WeightedKey{0, 0, Rational(0)},
                             trivial_weights()) == 1);
}

TEST_CASE("assembled table reproduces the pinned census values") {
  CountTable table = bipartite_component_table(
      10, trivial_weights(), {TableKey{1, {0}}});
  for (const GoldenCount& row : golden_bipartite_counts()) {
    CHECK(table.count(WeightedKey{row.n, row.k, Rational(row.nu)}) ==
          row.count);
  }
}

TEST_CASE("weighted census requires a single statistic") {
  ConnectedCountTable wide;
  wide.y_arity = 2;
  wide.set(TableKey{1, {0, 0}}, 1);
  CHECK_THROWS_AS(enumerate_weighted(wide, 3, trivial_weights()),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      count_via_partitions(wide, WeightedKey{1, 0, Rational(1)},
                           trivial_weights()),
      std::invalid_argument);
}
